#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mbx/character_table.hpp"
#include "mbx/group.hpp"

namespace mbx::mult {

using chartab::CharacterTable;

/// g(rho, phi, psi) = (1/|G|) sum_a |a| conj(rho(a)) phi(a) psi(a), exactly.
/// Throws IntegralityDefect unless the result is a non-negative integer.
Int kronecker(const CharacterTable& t, std::size_t rho, std::size_t phi, std::size_t psi);

using Triple = std::array<std::size_t, 3>;

struct KronMax {
  Int value;
  Triple argmax{};  // lexicographically least (rho, phi, psi)
};

struct RefinedMax {
  Int value;
  std::size_t psi = 0;  // least attaining psi
};

/// Aggregates over all k^3 triples from one multimodular scan.
struct KronStats {
  KronMax max;
  Int sum;
  Int sum_squares;
  /// refined[rho][phi] = max over psi of g(rho, phi, psi), when requested.
  std::vector<std::vector<RefinedMax>> refined;
};

/// Visits every unordered pair phi <= psi once with g(rho, phi, psi) for all rho.
/// Multiplicities are computed modulo word-size primes p = 1 (mod conductor)
/// and reconstructed by CRT, with one extra prime as a consistency check.
/// Calls may come from several workers at once; `worker` is below thread_count().
using PairVisitor = std::function<void(std::size_t worker, std::size_t phi, std::size_t psi, const std::vector<Int>& g)>;
void scan_pairs(const CharacterTable& t, const PairVisitor& visit);

KronStats kron_stats(const CharacterTable& t, bool refined = false);

KronMax kron_max(const CharacterTable& t);
RefinedMax kron_refined_max(const CharacterTable& t, std::size_t rho, std::size_t phi);
Int kron_sum_squares(const CharacterTable& t);
Rational kron_average(const CharacterTable& t);

/// Sum of centralizer orders; equals kron_sum_squares for every table.
Int A_from_centralizers(std::span<const Int> centralizers);

/// Checks that T(x, y, z) = g(conj x, y, z) is invariant under permutations of
/// (conj rho, phi, psi) and under conjugating all three.
bool kron_symmetry_check(const CharacterTable& t, std::size_t rho, std::size_t phi, std::size_t psi);

constexpr std::size_t kDefaultCubeCap = 160;

/// Every g(rho, phi, psi) held in memory, for tables with k <= cap and
/// multiplicities below 2^64.
class KronCube {
 public:
  KronCube(const CharacterTable& t, std::size_t cap = kDefaultCubeCap);

  std::size_t k() const { return k_; }
  std::uint64_t operator()(std::size_t rho, std::size_t phi, std::size_t psi) const {
    return values_[(rho * k_ + phi) * k_ + psi];
  }
  /// Same check as kron_symmetry_check, on stored values.
  bool symmetric_at(const CharacterTable& t, std::size_t rho, std::size_t phi, std::size_t psi) const;

 private:
  std::size_t k_;
  std::vector<std::uint64_t> values_;
};

struct InducedMatrix {
  Int index;
  std::vector<Int> parent_degrees;
  std::vector<Int> sub_degrees;
  /// entries[rho][pi] = c(rho, pi)
  std::vector<std::vector<Int>> entries;
};

/// c(rho, pi) = <rho restricted to H, pi>_H. Verifies both weighted-sum
/// identities, throwing IdentityViolation on failure.
InducedMatrix induced_matrix(const CharacterTable& parent, const CharacterTable& sub, const group::ClassFusion& fusion);

struct InducedMax {
  Int value;
  std::size_t rho = 0;
  std::size_t pi = 0;
};
InducedMax induced_max(const InducedMatrix& m);
Int induced_sum_squares(const InducedMatrix& m);
/// sum over H-classes of z(G)/z(H).
Rational LR_rhs(const group::ClassFusion& fusion);

/// (order - M b^2) / b^2 with b the largest degree and M its multiplicity.
/// Throws BurnsideViolation unless sum d^2 = order.
Rational epsilon(std::span<const Int> degrees, const Int& order);

struct GroupStats {
  Int order;
  std::size_t k = 0;
  Int b;
  Int e;  // |G|/b - b
  Rational epsilon;
  Int degree_sum;
  std::uint64_t involutions = 0;  // #{x : x^2 = 1}
  bool simple = false;
  std::optional<std::uint32_t> nilpotency_class;
  std::uint64_t center_order = 0;
};

GroupStats group_stats(const group::FiniteGroup& g, const CharacterTable& t);

}  // namespace mbx::mult
