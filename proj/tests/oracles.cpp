#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mbx/symmetric.hpp"

namespace oracle {

using mbx::group::FiniteGroup;
using mbx::group::Permutation;

std::vector<std::vector<std::uint32_t>> conjugation_orbits(const FiniteGroup& g) {
  std::vector<Permutation> all;
  for (std::uint32_t i = 0; i < g.order(); ++i) all.push_back(g.permutation(i));
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<std::uint32_t>> orbits;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<std::uint32_t> orbit;
    for (const auto& y : all) {
      Permutation c = y.inverse() * all[x] * y;
      orbit.insert(*g.find(c));
    }
    for (auto i : orbit) seen[i] = 1;
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

Int partition_count(std::uint32_t n) {
  std::vector<Int> ways(n + 1, Int(0));
  ways[0] = 1;
  for (std::uint32_t part = 1; part <= n; ++part) {
    for (std::uint32_t total = part; total <= n; ++total) ways[total] += ways[total - part];
  }
  return ways[n];
}

std::vector<Int> elementwise_kronecker(const FiniteGroup& g, const std::vector<std::vector<Int>>& rows,
                                       const std::vector<std::uint32_t>& column_of_element) {
  std::size_t k = rows.size();
  std::vector<Int> cube(k * k * k, Int(0));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t c = 0; c < k; ++c) {
        Int sum = 0;
        for (std::uint32_t x = 0; x < g.order(); ++x) {
          std::uint32_t col = column_of_element[x];
          sum += rows[a][col] * rows[b][col] * rows[c][col];
        }
        Int order(static_cast<unsigned long>(g.order()));
        if (sum % order != 0) throw std::runtime_error("non-integral multiplicity in oracle");
        cube[(a * k + b) * k + c] = sum / order;
      }
    }
  }
  return cube;
}

std::vector<std::uint32_t> sn_columns(const FiniteGroup& sn) {
  auto types = mbx::symmetric::sn_column_types(static_cast<std::uint32_t>(sn.degree()));
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < types.size(); ++i) index[types[i].parts] = i;
  std::vector<std::uint32_t> out(sn.order());
  for (std::uint32_t x = 0; x < sn.order(); ++x) {
    // Cycle type read directly from the image array.
    std::vector<char> seen(sn.degree(), 0);
    std::vector<std::uint32_t> parts;
    auto img = sn.element(x);
    for (std::size_t s = 0; s < sn.degree(); ++s) {
      if (seen[s]) continue;
      std::uint32_t len = 0;
      for (std::size_t p = s; !seen[p]; p = img[p]) seen[p] = 1, ++len;
      parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    out[x] = index.at(parts);
  }
  return out;
}

std::vector<std::vector<Int>> sn_rows(std::uint32_t n) {
  auto t = mbx::symmetric::sn_character_table(n);
  std::vector<std::vector<Int>> rows;
  for (const auto& row : t.values) {
    std::vector<Int> r;
    for (const auto& v : row) r.push_back(v.rational());
    rows.push_back(r);
  }
  return rows;
}

std::optional<std::vector<std::size_t>> match_sn_rows(const FiniteGroup& sn, const mbx::chartab::CharacterTable& dixon) {
  auto cols = sn_columns(sn);
  auto mn = sn_rows(static_cast<std::uint32_t>(sn.degree()));
  if (mn.size() != dixon.k()) return std::nullopt;
  std::vector<std::size_t> match(dixon.k());
  std::vector<char> used(mn.size(), 0);
  for (std::size_t r = 0; r < dixon.k(); ++r) {
    std::optional<std::size_t> found;
    for (std::size_t m = 0; m < mn.size() && !found; ++m) {
      if (used[m]) continue;
      bool same = true;
      for (std::size_t c = 0; c < dixon.k() && same; ++c) {
        const auto& v = dixon.values[r][c];
        std::uint32_t col = cols[sn.representative_index(static_cast<std::uint32_t>(c))];
        same = v.is_rational() && v.rational() == mn[m][col];
      }
      if (same) found = m;
    }
    if (!found) return std::nullopt;
    used[*found] = 1;
    match[r] = *found;
  }
  return match;
}

std::vector<std::vector<Int>> elementwise_induced(const mbx::group::SubgroupEmbedding& e,
                                                  const mbx::chartab::CharacterTable& tg,
                                                  const mbx::chartab::CharacterTable& th) {
  const auto& g = *e.parent;
  const auto& h = *e.sub;
  std::vector<std::vector<Int>> out(tg.k(), std::vector<Int>(th.k(), Int(0)));
  Int order(static_cast<unsigned long>(h.order()));
  for (std::size_t rho = 0; rho < tg.k(); ++rho) {
    for (std::size_t pi = 0; pi < th.k(); ++pi) {
      Int sum = 0;
      for (std::uint32_t x = 0; x < h.order(); ++x) {
        sum += tg.values[rho][g.class_of(e.inclusion[x])].rational() * th.values[pi][h.class_of(x)].rational();
      }
      if (sum % order != 0) throw std::runtime_error("non-integral multiplicity in oracle");
      out[rho][pi] = sum / order;
    }
  }
  return out;
}

}  // namespace oracle
