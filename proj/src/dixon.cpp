#include "mbx/dixon.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "mbx/error.hpp"
#include "mbx/modular.hpp"
#include "mbx/parallel.hpp"

namespace mbx::chartab {

namespace {

using modular::Matrix;
using modular::Row;
using modular::u64;

struct Space {
  Matrix basis;  // rows in RREF
  std::vector<std::size_t> pivots;
};

Space make_space(Matrix rows, u64 p) {
  Space s;
  s.pivots = modular::rref(rows, p);
  s.basis = std::move(rows);
  return s;
}

/// Eigenspaces of `apply` restricted to the invariant subspace `s`.
std::vector<Space> split(const Space& s, const std::function<Row(const Row&)>& apply, u64 p,
                         std::mt19937_64& rng) {
  std::size_t d = s.basis.size();
  Matrix restricted(d, Row(d));
  for (std::size_t r = 0; r < d; ++r) {
    Row image = apply(s.basis[r]);
    for (std::size_t i = 0; i < d; ++i) restricted[i][r] = image[s.pivots[i]];
  }
  std::vector<u64> eigenvalues = modular::roots(modular::charpoly(restricted, p), p, rng);
  std::vector<Space> out;
  std::size_t total = 0;
  for (u64 lambda : eigenvalues) {
    Matrix shifted = restricted;
    for (std::size_t i = 0; i < d; ++i) shifted[i][i] = modular::sub_mod(shifted[i][i], lambda, p);
    Matrix coords = modular::nullspace(shifted, p);
    if (coords.size() == d) return {s};
    Matrix vectors;
    for (const Row& c : coords) {
      Row v(s.basis[0].size(), 0);
      for (std::size_t r = 0; r < d; ++r) {
        if (c[r] == 0) continue;
        for (std::size_t i = 0; i < v.size(); ++i) {
          v[i] = modular::add_mod(v[i], modular::mul_mod(c[r], s.basis[r][i], p), p);
        }
      }
      vectors.push_back(std::move(v));
    }
    total += vectors.size();
    out.push_back(make_space(std::move(vectors), p));
  }
  if (total != d) throw Error("class matrix is not diagonalizable modulo " + std::to_string(p));
  return out;
}

}  // namespace

std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent) {
  for (std::uint64_t t = 1;; ++t) {
    std::uint64_t p = 1 + t * exponent;
    if (static_cast<modular::u128>(p) * p <= static_cast<modular::u128>(4) * order) continue;
    if (modular::is_prime(p)) return p;
  }
}

CharacterTable character_table(const group::FiniteGroup& g, std::uint64_t seed) {
  const std::size_t k = g.class_count();
  const std::uint64_t n = g.order();
  const u64 p = dixon_prime(n, g.exponent());
  std::mt19937_64 rng(seed);

  // counts[(z*k + i)*k + j] = #{x in C_i : x^-1 rep_z in C_j}
  std::vector<std::uint32_t> counts(k * k * k, 0);
  parallel_chunks(k, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t z = begin; z < end; ++z) {
      std::uint32_t rep = g.representative_index(static_cast<std::uint32_t>(z));
      for (std::uint32_t x = 0; x < n; ++x) {
        std::uint32_t y = g.multiply(g.inverse(x), rep);
        ++counts[(z * k + g.class_of(x)) * k + g.class_of(y)];
      }
    }
  });
  // (M_j)_{iz} = c_{jiz}; central characters are common eigenvectors.
  auto class_matrix_apply = [&](std::size_t j) {
    return [&, j](const Row& v) {
      Row out(k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        u64 acc = 0;
        for (std::size_t z = 0; z < k; ++z) {
          std::uint32_t c = counts[(z * k + j) * k + i];
          if (c != 0 && v[z] != 0) acc = modular::add_mod(acc, modular::mul_mod(c % p, v[z], p), p);
        }
        out[i] = acc;
      }
      return out;
    };
  };

  Matrix identity(k, Row(k, 0));
  for (std::size_t i = 0; i < k; ++i) identity[i][i] = 1;
  std::vector<Space> spaces{make_space(std::move(identity), p)};
  auto refine = [&](const std::function<Row(const Row&)>& apply) {
    std::vector<Space> next;
    for (const Space& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (Space& piece : split(s, apply, p, rng)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  };
  auto unsplit = [&] {
    return std::any_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.size() > 1; });
  };
  for (std::size_t j = 1; j < k && unsplit(); ++j) refine(class_matrix_apply(j));
  for (int attempt = 0; attempt < 64 && unsplit(); ++attempt) {
    std::vector<u64> weights(k);
    for (u64& w : weights) w = rng() % p;
    refine([&](const Row& v) {
      Row out(k, 0);
      for (std::size_t j = 1; j < k; ++j) {
        Row part = class_matrix_apply(j)(v);
        for (std::size_t i = 0; i < k; ++i) out[i] = modular::add_mod(out[i], modular::mul_mod(weights[j], part[i], p), p);
      }
      return out;
    });
  }
  if (unsplit() || spaces.size() != k) throw Error("eigenspace splitting did not separate all characters");

  const u64 root = modular::primitive_root(p);
  std::vector<u64> class_size_inv(k);
  for (std::size_t j = 0; j < k; ++j) class_size_inv[j] = modular::inv_mod(g.classes()[j].size % p, p);
  std::vector<std::vector<std::uint32_t>> power_classes(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::uint32_t o = g.classes()[j].element_order;
    for (std::uint32_t s = 0; s < o; ++s) power_classes[j].push_back(g.power_class(static_cast<std::uint32_t>(j), s));
  }
  const std::uint64_t sqrt_n = static_cast<std::uint64_t>(to_u64(isqrt(Int(static_cast<unsigned long>(n)))));

  CharacterTable t;
  t.name = g.name();
  t.order = Int(static_cast<unsigned long>(n));
  for (const auto& c : g.classes()) t.centralizers.emplace_back(static_cast<unsigned long>(c.centralizer_order));

  for (const Space& s : spaces) {
    Row w = s.basis[0];
    u64 w0 = modular::inv_mod(w[0], p);
    for (u64& x : w) x = modular::mul_mod(x, w0, p);
    // |G| / chi(1)^2 = sum_j omega_j omega_{j*} / |C_j|
    u64 sum = 0;
    for (std::size_t j = 0; j < k; ++j) {
      u64 term = modular::mul_mod(w[j], w[g.inverse_class(static_cast<std::uint32_t>(j))], p);
      sum = modular::add_mod(sum, modular::mul_mod(term, class_size_inv[j], p), p);
    }
    u64 target = modular::mul_mod(n % p, modular::inv_mod(sum, p), p);
    u64 degree = 0;
    for (u64 d = 1; d <= sqrt_n; ++d) {
      if (modular::mul_mod(d, d, p) == target) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw Error("no character degree matches residue modulo " + std::to_string(p));
    std::vector<u64> chi(k);
    for (std::size_t j = 0; j < k; ++j) chi[j] = modular::mul_mod(modular::mul_mod(w[j], degree % p, p), class_size_inv[j], p);

    std::vector<Cyclotomic> row(k);
    for (std::size_t j = 0; j < k; ++j) {
      std::uint32_t o = g.classes()[j].element_order;
      u64 z_inv = modular::inv_mod(modular::pow_mod(root, (p - 1) / o, p), p);
      u64 o_inv = modular::inv_mod(o % p, p);
      // m_l = (1/o) sum_s chi(g^s) z^(-l s) counts eigenvalue zeta_o^l.
      std::vector<Int> raw(o);
      for (std::uint32_t l = 0; l < o; ++l) {
        u64 step = modular::pow_mod(z_inv, l, p);
        u64 zeta = 1;
        u64 acc = 0;
        for (std::uint32_t s2 = 0; s2 < o; ++s2) {
          acc = modular::add_mod(acc, modular::mul_mod(chi[power_classes[j][s2]], zeta, p), p);
          zeta = modular::mul_mod(zeta, step, p);
        }
        u64 m = modular::mul_mod(acc, o_inv, p);
        if (m > degree) throw Error("eigenvalue multiplicity out of range while lifting");
        raw[l] = Int(static_cast<unsigned long>(m));
      }
      row[j] = Cyclotomic::from_raw(o, std::move(raw));
    }
    t.values.push_back(std::move(row));
  }
  canonical_row_order(t);
  return t;
}

}  // namespace mbx::chartab
