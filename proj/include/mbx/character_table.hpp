#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mbx/cyclotomic.hpp"
#include "mbx/group.hpp"
#include "mbx/numeric.hpp"

namespace mbx::chartab {

/// Irreducible characters of a group. Rows are characters, columns are
/// classes, and column 0 is the identity class.
struct CharacterTable {
  std::string name;
  Int order;
  std::vector<Int> class_sizes;
  std::vector<Int> centralizers;
  std::vector<Int> degrees;
  std::vector<std::vector<Cyclotomic>> values;
  /// conj_perm[i] is the row holding the complex conjugate of row i.
  std::vector<std::uint32_t> conj_perm;

  std::size_t k() const { return centralizers.size(); }
  /// Largest degree b(G).
  Int max_degree() const;
  /// Least common multiple of the conductors of all values.
  std::uint64_t conductor() const;
  std::uint64_t row_conductor(std::size_t row) const;

  friend bool operator==(const CharacterTable&, const CharacterTable&) = default;
};

/// (1/|G|) sum_a |a| f(a) conj(g(a)) for class functions f, g.
Rational inner_product(const CharacterTable& t, std::span<const Cyclotomic> f, std::span<const Cyclotomic> g);
Rational inner_product(const CharacterTable& t, std::size_t row_i, std::size_t row_j);

std::size_t conjugate_irrep(const CharacterTable& t, std::size_t row);

/// Values of row `row` of `parent` on the classes of the fused subgroup.
/// Throws FusionMismatch unless the fusion's parent group matches the table.
std::vector<Cyclotomic> restrict(const CharacterTable& parent, const group::ClassFusion& fusion, std::size_t row);

/// Fills class_sizes, degrees and conj_perm from centralizers and values.
void complete(CharacterTable& t);

/// Sorts rows by degree, then by value vectors, and recomputes conj_perm.
void canonical_row_order(CharacterTable& t);

/// Strict order used for rows of equal degree: per entry, smaller conductor
/// first, then larger coefficients first.
bool row_less(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b);

/// Exact Burnside identity and row and column orthogonality.
/// Throws ConsistencyError naming the first failure.
void validate(const CharacterTable& t);

}  // namespace mbx::chartab
