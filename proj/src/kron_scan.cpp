#include <algorithm>
#include <numeric>

#include "mbx/error.hpp"
#include "mbx/modular.hpp"
#include "mbx/mult.hpp"
#include "mbx/parallel.hpp"

namespace mbx::mult {

namespace {

using modular::Montgomery;
using modular::u128;
using modular::u64;

/// The table reduced modulo one prime p = 1 (mod L), zeta_L -> w.
struct Residues {
  Montgomery mont;
  std::vector<std::vector<u64>> values;    // [row][class], Montgomery form
  std::vector<std::vector<u64>> weighted;  // |a|/|G| conj(rho(a)), Montgomery form

  Residues(const CharacterTable& t, u64 p, std::uint64_t conductor) : mont(p) {
    u64 w = modular::pow_mod(modular::primitive_root(p), (p - 1) / conductor, p);
    u64 w_inv = modular::inv_mod(w, p);
    u64 order_inv = modular::inv_mod(mpz_fdiv_ui(t.order.get_mpz_t(), p), p);
    std::size_t k = t.k();
    values.assign(k, std::vector<u64>(k));
    weighted.assign(k, std::vector<u64>(k));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t a = 0; a < k; ++a) {
        const auto& v = t.values[r][a];
        u64 step = conductor / v.conductor();
        u64 x = 0;
        u64 xc = 0;
        const auto& c = v.coefficients();
        for (std::size_t j = 0; j < c.size(); ++j) {
          if (c[j] == 0) continue;
          u64 cj = mpz_fdiv_ui(c[j].get_mpz_t(), p);
          x = modular::add_mod(x, modular::mul_mod(cj, modular::pow_mod(w, step * j, p), p), p);
          xc = modular::add_mod(xc, modular::mul_mod(cj, modular::pow_mod(w_inv, step * j, p), p), p);
        }
        u64 weight = modular::mul_mod(mpz_fdiv_ui(t.class_sizes[a].get_mpz_t(), p), order_inv, p);
        values[r][a] = mont.to(x);
        weighted[r][a] = mont.to(modular::mul_mod(weight, xc, p));
      }
    }
  }

  /// g(rho, phi, psi) mod p for all rho.
  void pair(std::size_t phi, std::size_t psi, std::vector<u64>& product, std::vector<u64>& out) const {
    std::size_t k = values.size();
    for (std::size_t a = 0; a < k; ++a) product[a] = mont.mul(values[phi][a], values[psi][a]);
    for (std::size_t r = 0; r < k; ++r) {
      const u64* row = weighted[r].data();
      u64 acc = 0;
      for (std::size_t a = 0; a < k; ++a) acc = mont.add(acc, mont.mul(row[a], product[a]));
      out[r] = mont.out(acc);
    }
  }
};

/// Primes p = 1 (mod L) in [2^62, 2^64) not dividing |G|: enough for the
/// product to exceed 2(bound + 1), plus one check prime.
std::vector<u64> choose_primes(const CharacterTable& t, std::uint64_t conductor, const Int& bound) {
  const u64 floor62 = u64{1} << 62;
  u64 step = conductor;
  u64 start = conductor >= floor62 ? 1 : (floor62 + step - 1) / step;
  std::vector<u64> primes;
  Int product = 1;
  Int target = 2 * (bound + 1);
  bool have_check = false;
  for (u64 m = start;; ++m) {
    u128 candidate = static_cast<u128>(m) * step + 1;
    if (candidate >> 64) throw CapExceeded("no word-size prime is 1 modulo conductor " + std::to_string(conductor));
    u64 p = static_cast<u64>(candidate);
    if (!modular::is_prime(p) || mpz_fdiv_ui(t.order.get_mpz_t(), p) == 0) continue;
    primes.push_back(p);
    if (product > target) {
      have_check = true;
    } else {
      product *= Int(static_cast<unsigned long>(p));
    }
    if (have_check) break;
  }
  return primes;
}

}  // namespace

void scan_pairs(const CharacterTable& t, const PairVisitor& visit) {
  const std::size_t k = t.k();
  const std::uint64_t conductor = t.conductor();
  const Int bound = t.max_degree();
  std::vector<u64> primes = choose_primes(t, conductor, bound);
  std::vector<Residues> residues;
  residues.reserve(primes.size());
  for (u64 p : primes) residues.emplace_back(t, p, conductor);
  const std::size_t main_primes = primes.size() - 1;

  // Garner constants: inverse of p_0 ... p_{i-1} modulo p_i.
  std::vector<u64> prefix_inv(main_primes, 0);
  for (std::size_t i = 1; i < main_primes; ++i) {
    u64 m = 1;
    for (std::size_t j = 0; j < i; ++j) m = modular::mul_mod(m, primes[j] % primes[i], primes[i]);
    prefix_inv[i] = modular::inv_mod(m, primes[i]);
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(k * (k + 1) / 2);
  for (std::size_t f = 0; f < k; ++f) {
    for (std::size_t s = f; s < k; ++s) pairs.emplace_back(static_cast<std::uint32_t>(f), static_cast<std::uint32_t>(s));
  }

  parallel_chunks(pairs.size(), [&](std::size_t worker, std::size_t begin, std::size_t end) {
    std::vector<u64> product(k);
    std::vector<std::vector<u64>> r(primes.size(), std::vector<u64>(k));
    std::vector<Int> g(k);
    Int x;
    Int modulus;
    for (std::size_t idx = begin; idx < end; ++idx) {
      auto [phi, psi] = pairs[idx];
      for (std::size_t i = 0; i < primes.size(); ++i) residues[i].pair(phi, psi, product, r[i]);
      for (std::size_t rho = 0; rho < k; ++rho) {
        x = static_cast<unsigned long>(r[0][rho]);
        modulus = static_cast<unsigned long>(primes[0]);
        for (std::size_t i = 1; i < main_primes; ++i) {
          u64 p = primes[i];
          u64 xm = mpz_fdiv_ui(x.get_mpz_t(), p);
          u64 digit = modular::mul_mod(modular::sub_mod(r[i][rho], xm, p), prefix_inv[i], p);
          x += modulus * Int(static_cast<unsigned long>(digit));
          modulus *= Int(static_cast<unsigned long>(p));
        }
        u64 check = primes.back();
        if (x > bound || mpz_fdiv_ui(x.get_mpz_t(), check) != r.back()[rho]) {
          throw IntegralityDefect("g(" + std::to_string(rho) + "," + std::to_string(phi) + "," + std::to_string(psi) +
                                  ") is not an integer in [0, b]; the table is inconsistent");
        }
        g[rho] = x;
      }
      visit(worker, phi, psi, g);
    }
  });
}

KronStats kron_stats(const CharacterTable& t, bool refined) {
  const std::size_t k = t.k();
  const std::size_t workers = thread_count();
  std::vector<KronStats> partial(workers);
  for (auto& s : partial) {
    s.max.value = -1;
    s.sum = 0;
    s.sum_squares = 0;
    if (refined) s.refined.assign(k, std::vector<RefinedMax>(k, RefinedMax{Int(-1), 0}));
  }
  auto better = [](const Int& v, const Triple& at, const KronMax& cur) {
    return v > cur.value || (v == cur.value && at < cur.argmax);
  };
  auto offer = [](std::vector<std::vector<RefinedMax>>& m, std::size_t rho, std::size_t phi, std::size_t psi,
                  const Int& v) {
    RefinedMax& cell = m[rho][phi];
    if (v > cell.value || (v == cell.value && psi < cell.psi)) cell = {v, psi};
  };
  scan_pairs(t, [&](std::size_t worker, std::size_t phi, std::size_t psi, const std::vector<Int>& g) {
    KronStats& s = partial[worker];
    unsigned long weight = phi == psi ? 1 : 2;
    for (std::size_t rho = 0; rho < k; ++rho) {
      const Int& v = g[rho];
      s.sum += weight * v;
      s.sum_squares += weight * v * v;
      Triple at{rho, phi, psi};
      if (better(v, at, s.max)) s.max = {v, at};
      if (refined) {
        offer(s.refined, rho, phi, psi, v);
        offer(s.refined, rho, psi, phi, v);
      }
    }
  });
  KronStats out = std::move(partial[0]);
  for (std::size_t w = 1; w < workers; ++w) {
    KronStats& s = partial[w];
    out.sum += s.sum;
    out.sum_squares += s.sum_squares;
    if (better(s.max.value, s.max.argmax, out.max)) out.max = s.max;
    if (refined) {
      for (std::size_t rho = 0; rho < k; ++rho) {
        for (std::size_t phi = 0; phi < k; ++phi) {
          if (s.refined[rho][phi].value >= 0) offer(out.refined, rho, phi, s.refined[rho][phi].psi, s.refined[rho][phi].value);
        }
      }
    }
  }
  return out;
}

KronMax kron_max(const CharacterTable& t) { return kron_stats(t).max; }

Int kron_sum_squares(const CharacterTable& t) { return kron_stats(t).sum_squares; }

Rational kron_average(const CharacterTable& t) {
  Int k = static_cast<unsigned long>(t.k());
  Rational out(kron_stats(t).sum, k * k * k);
  out.canonicalize();
  return out;
}

KronCube::KronCube(const CharacterTable& t, std::size_t cap) : k_(t.k()) {
  if (k_ > cap) throw CapExceeded("k = " + std::to_string(k_) + " exceeds the cube cap " + std::to_string(cap));
  if (mpz_sizeinbase(t.max_degree().get_mpz_t(), 2) > 64) throw CapExceeded("multiplicities may exceed 64 bits");
  values_.assign(k_ * k_ * k_, 0);
  scan_pairs(t, [&](std::size_t, std::size_t phi, std::size_t psi, const std::vector<Int>& g) {
    for (std::size_t rho = 0; rho < k_; ++rho) {
      std::uint64_t v = to_u64(g[rho]);
      values_[(rho * k_ + phi) * k_ + psi] = v;
      values_[(rho * k_ + psi) * k_ + phi] = v;
    }
  });
}

}  // namespace mbx::mult
