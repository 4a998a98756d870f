#include <algorithm>
#include <numeric>

#include "mbx/error.hpp"
#include "mbx/mult.hpp"

namespace mbx::mult {

namespace {

constexpr std::uint64_t kRawConductorLimit = 1u << 20;

}  // namespace

Int kronecker(const CharacterTable& t, std::size_t rho, std::size_t phi, std::size_t psi) {
  const auto& r = t.values.at(rho);
  const auto& f = t.values.at(phi);
  const auto& s = t.values.at(psi);
  std::uint64_t n = std::lcm(std::lcm(t.row_conductor(rho), t.row_conductor(phi)), t.row_conductor(psi));
  Rational total;
  if (n <= kRawConductorLimit) {
    chartab::CyclotomicSum sum(n);
    for (std::size_t a = 0; a < t.k(); ++a) sum.add_product(t.class_sizes[a], {{&r[a], true}, {&f[a], false}, {&s[a], false}});
    chartab::Cyclotomic v = sum.value();
    if (!v.is_rational()) throw IntegralityDefect("g is irrational: " + v.to_string());
    total = ratio(v.rational(), t.order);
  } else {
    // The sum is rational, so the normalized trace of each term recovers it.
    for (std::size_t a = 0; a < t.k(); ++a) {
      total += Rational(t.class_sizes[a]) * (r[a].conj() * f[a] * s[a]).normalized_trace();
    }
    total /= Rational(t.order);
  }
  total.canonicalize();
  if (total.get_den() != 1 || sgn(total) < 0) {
    throw IntegralityDefect("g(" + std::to_string(rho) + "," + std::to_string(phi) + "," + std::to_string(psi) +
                            ") = " + to_string(total) + " is not a non-negative integer");
  }
  return total.get_num();
}

Int A_from_centralizers(std::span<const Int> centralizers) {
  Int sum = 0;
  for (const Int& z : centralizers) sum += z;
  return sum;
}

bool kron_symmetry_check(const CharacterTable& t, std::size_t rho, std::size_t phi, std::size_t psi) {
  // T(x, y, z) = g(conj x, y, z); the base point is T(conj rho, phi, psi).
  auto T = [&](std::size_t x, std::size_t y, std::size_t z) { return kronecker(t, t.conj_perm[x], y, z); };
  std::array<std::size_t, 3> args{t.conj_perm[rho], phi, psi};
  Int base = kronecker(t, rho, phi, psi);
  std::sort(args.begin(), args.end());
  do {
    if (T(args[0], args[1], args[2]) != base) return false;
  } while (std::next_permutation(args.begin(), args.end()));
  return T(rho, t.conj_perm[phi], t.conj_perm[psi]) == base;
}

bool KronCube::symmetric_at(const CharacterTable& t, std::size_t rho, std::size_t phi, std::size_t psi) const {
  auto T = [&](std::size_t x, std::size_t y, std::size_t z) { return (*this)(t.conj_perm[x], y, z); };
  std::array<std::size_t, 3> args{t.conj_perm[rho], phi, psi};
  std::uint64_t base = (*this)(rho, phi, psi);
  std::sort(args.begin(), args.end());
  do {
    if (T(args[0], args[1], args[2]) != base) return false;
  } while (std::next_permutation(args.begin(), args.end()));
  return T(rho, t.conj_perm[phi], t.conj_perm[psi]) == base;
}

RefinedMax kron_refined_max(const CharacterTable& t, std::size_t rho, std::size_t phi) {
  RefinedMax best{Int(-1), 0};
  for (std::size_t psi = 0; psi < t.k(); ++psi) {
    Int g = kronecker(t, rho, phi, psi);
    if (g > best.value) best = {g, psi};
  }
  return best;
}

Rational epsilon(std::span<const Int> degrees, const Int& order) {
  Int squares = 0;
  Int b = 0;
  for (const Int& d : degrees) {
    squares += d * d;
    b = std::max(b, d);
  }
  if (squares != order) {
    throw BurnsideViolation("sum of squared degrees " + squares.get_str() + " != " + order.get_str());
  }
  Int m = static_cast<unsigned long>(std::count(degrees.begin(), degrees.end(), b));
  Rational out(order - m * b * b, b * b);
  out.canonicalize();
  return out;
}

GroupStats group_stats(const group::FiniteGroup& g, const CharacterTable& t) {
  GroupStats s;
  s.order = t.order;
  s.k = t.k();
  s.b = t.max_degree();
  s.e = t.order / s.b - s.b;
  s.epsilon = epsilon(t.degrees, t.order);
  s.degree_sum = 0;
  for (const Int& d : t.degrees) s.degree_sum += d;
  s.involutions = group::involution_count(g);
  s.simple = group::is_simple(g);
  s.nilpotency_class = group::nilpotency_class(g);
  s.center_order = group::center_order(g);
  return s;
}

}  // namespace mbx::mult
