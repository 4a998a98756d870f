#include "mbx/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "mbx/error.hpp"
#include "mbx/mult.hpp"
#include "mbx/parallel.hpp"

namespace mbx::symmetric {

std::uint32_t Partition::n() const {
  std::uint32_t s = 0;
  for (std::uint32_t p : parts) s += p;
  return s;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

void for_each_partition(std::uint32_t n, const std::function<void(const Partition&)>& visit) {
  Partition p;
  if (n == 0) {
    visit(p);
    return;
  }
  p.parts = {n};
  while (true) {
    visit(p);
    // Rightmost part above 1 drops by one; the freed units refill greedily.
    std::uint32_t ones = 0;
    while (!p.parts.empty() && p.parts.back() == 1) {
      p.parts.pop_back();
      ++ones;
    }
    if (p.parts.empty()) return;
    std::uint32_t v = --p.parts.back();
    std::uint32_t rest = ones + 1;
    while (rest > 0) {
      std::uint32_t take = std::min(v, rest);
      p.parts.push_back(take);
      rest -= take;
    }
  }
}

std::vector<Partition> partitions(std::uint32_t n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

Int partition_count(std::uint32_t n) {
  std::vector<Int> p(n + 1);
  p[0] = 1;
  for (std::uint32_t m = 1; m <= n; ++m) {
    Int sum = 0;
    for (std::uint32_t j = 1;; ++j) {
      // Generalized pentagonal numbers j(3j-1)/2 and j(3j+1)/2.
      std::uint64_t g1 = static_cast<std::uint64_t>(j) * (3 * j - 1) / 2;
      if (g1 > m) break;
      std::uint64_t g2 = g1 + j;
      bool plus = j % 2 == 1;
      if (plus) {
        sum += p[m - g1];
      } else {
        sum -= p[m - g1];
      }
      if (g2 <= m) {
        if (plus) {
          sum += p[m - g2];
        } else {
          sum -= p[m - g2];
        }
      }
    }
    p[m] = sum;
  }
  return p[n];
}

Partition conjugate(const Partition& lambda) {
  Partition out;
  if (lambda.parts.empty()) return out;
  for (std::uint32_t col = 0; col < lambda.parts[0]; ++col) {
    std::uint32_t len = 0;
    while (len < lambda.parts.size() && lambda.parts[len] > col) ++len;
    out.parts.push_back(len);
  }
  return out;
}

Int hook_degree(const Partition& lambda) {
  Partition dual = conjugate(lambda);
  Int hooks = 1;
  for (std::uint32_t i = 0; i < lambda.parts.size(); ++i) {
    for (std::uint32_t j = 0; j < lambda.parts[i]; ++j) {
      hooks *= static_cast<unsigned long>((lambda.parts[i] - j - 1) + (dual.parts[j] - i - 1) + 1);
    }
  }
  Int out = factorial(lambda.n());
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), hooks.get_mpz_t());
  return out;
}

Int involution_count(std::uint32_t n) {
  Int prev = 1;  // t(0)
  Int cur = 1;   // t(1)
  if (n == 0) return prev;
  for (std::uint32_t m = 2; m <= n; ++m) {
    Int next = cur + static_cast<unsigned long>(m - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Partition cycle_type(const group::Permutation& x) {
  std::vector<char> seen(x.degree(), 0);
  Partition out;
  for (std::size_t i = 0; i < x.degree(); ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    for (std::size_t j = i; !seen[j]; j = x[j]) {
      seen[j] = 1;
      ++len;
    }
    out.parts.push_back(len);
  }
  std::sort(out.parts.rbegin(), out.parts.rend());
  return out;
}

Int centralizer_order(const Partition& mu) {
  Int out = 1;
  std::map<std::uint32_t, std::uint32_t> mult;
  for (std::uint32_t p : mu.parts) ++mult[p];
  for (auto [part, m] : mult) out *= pow(Int(part), m) * factorial(m);
  return out;
}

SnDegreeStats sn_degree_stats(std::uint32_t n, std::uint32_t cap) {
  if (n < 1) throw Error("sn_degree_stats needs n >= 1");
  if (n > cap) throw CapExceeded("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  std::vector<Partition> all = partitions(n);
  std::vector<Int> degrees(all.size());
  parallel_chunks(all.size(), [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) degrees[i] = hook_degree(all[i]);
  });

  SnDegreeStats s;
  s.n = n;
  s.partition_count = static_cast<unsigned long>(all.size());
  s.b = 0;
  s.degree_sum = 0;
  std::map<Int, std::uint32_t> fiber_size;
  for (std::size_t i = 0; i < all.size(); ++i) {
    s.degree_sum += degrees[i];
    s.b = std::max(s.b, degrees[i]);
    s.f = std::max(s.f, ++fiber_size[degrees[i]]);
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (degrees[i] == s.b) s.argmax.push_back(all[i]);
  }
  s.m = static_cast<std::uint32_t>(s.argmax.size());
  for (const auto& [degree, count] : fiber_size) {
    if (count != s.f) continue;
    DegreeFiber fiber{degree, {}};
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (degrees[i] == degree) fiber.partitions.push_back(all[i]);
    }
    s.f_fibers.push_back(std::move(fiber));
  }
  s.epsilon = mult::epsilon(degrees, factorial(n));
  return s;
}

double hardy_ramanujan(std::uint32_t n) {
  double x = static_cast<double>(n);
  return std::exp(std::numbers::pi * std::sqrt(2.0 * x / 3.0)) / (4.0 * x * std::sqrt(3.0));
}

VkWindow vk_window(std::uint32_t n) {
  double half_log_fact = 0.5 * std::lgamma(static_cast<double>(n) + 1.0);
  double root = std::sqrt(static_cast<double>(n));
  return {std::exp(half_log_fact - kVkC1 * root), std::exp(half_log_fact - kVkC2 * root)};
}

namespace {

/// Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves a
/// bead from b to b - r, with sign (-1)^(beads strictly between).
class MurnaghanNakayama {
 public:
  long value(const Partition& lambda, const Partition& mu) {
    std::vector<std::uint32_t> beta;
    std::size_t len = lambda.parts.size();
    for (std::size_t i = 0; i < len; ++i) beta.push_back(lambda.parts[i] + static_cast<std::uint32_t>(len - 1 - i));
    std::sort(beta.begin(), beta.end());
    return recurse(beta, mu, 0);
  }

 private:
  long recurse(const std::vector<std::uint32_t>& beta, const Partition& mu, std::size_t step) {
    if (step == mu.parts.size()) return 1;
    auto key = std::make_pair(beta, std::vector<std::uint32_t>(mu.parts.begin() + static_cast<long>(step), mu.parts.end()));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::uint32_t r = mu.parts[step];
    long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      if (beta[i] < r) continue;
      std::uint32_t target = beta[i] - r;
      if (std::binary_search(beta.begin(), beta.end(), target)) continue;
      long between = 0;
      for (std::uint32_t b : beta) between += (b > target && b < beta[i]) ? 1 : 0;
      std::vector<std::uint32_t> next = beta;
      next[i] = target;
      std::sort(next.begin(), next.end());
      long sub = recurse(next, mu, step + 1);
      total += (between % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::map<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>, long> memo_;
};

}  // namespace

std::vector<Partition> sn_column_types(std::uint32_t n) {
  std::vector<Partition> cols = partitions(n);
  std::reverse(cols.begin(), cols.end());
  return cols;
}

chartab::CharacterTable sn_character_table(std::uint32_t n, std::uint32_t cap) {
  if (n > cap) throw CapExceeded("n = " + std::to_string(n) + " exceeds the table cap " + std::to_string(cap));
  std::vector<Partition> rows = partitions(n);
  std::vector<Partition> cols = sn_column_types(n);
  chartab::CharacterTable t;
  t.name = "S" + std::to_string(n);
  t.order = factorial(n);
  for (const Partition& mu : cols) t.centralizers.push_back(centralizer_order(mu));
  MurnaghanNakayama mn;
  for (const Partition& lambda : rows) {
    std::vector<chartab::Cyclotomic> row;
    for (const Partition& mu : cols) row.emplace_back(mn.value(lambda, mu));
    t.values.push_back(std::move(row));
  }
  chartab::complete(t);
  return t;
}

}  // namespace mbx::symmetric
