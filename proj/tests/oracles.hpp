#pragma once

// Slow, independent reference computations. Nothing here shares code paths
// with the library routines it is compared against beyond group enumeration.

#include <cstdint>
#include <optional>
#include <vector>

#include "mbx/character_table.hpp"
#include "mbx/group.hpp"

namespace oracle {

using mbx::Int;

/// Conjugation orbits by applying every g to every x with raw permutation
/// products. Each orbit is a sorted list of element indices; orbits sorted.
std::vector<std::vector<std::uint32_t>> conjugation_orbits(const mbx::group::FiniteGroup& g);

/// p(n) by dynamic programming over the largest allowed part.
Int partition_count(std::uint32_t n);

/// g(a, b, c) for integer-valued tables by summing over every element:
/// (1/|G|) sum_x a(x) b(x) c(x), with columns looked up per element.
/// cube[(a*k + b)*k + c].
std::vector<Int> elementwise_kronecker(const mbx::group::FiniteGroup& g, const std::vector<std::vector<Int>>& rows,
                                       const std::vector<std::uint32_t>& column_of_element);

/// Column of the Murnaghan-Nakayama table of S_n for each element of
/// family_group("s:n").
std::vector<std::uint32_t> sn_columns(const mbx::group::FiniteGroup& sn);

/// MN table rows as integers.
std::vector<std::vector<Int>> sn_rows(std::uint32_t n);

/// For each row of `dixon` (a table of family_group("s:n")), the MN row with
/// identical values after aligning columns by cycle type; nullopt if any row
/// has no partner or two rows share one.
std::optional<std::vector<std::size_t>> match_sn_rows(const mbx::group::FiniteGroup& sn,
                                                      const mbx::chartab::CharacterTable& dixon);

/// c(rho, pi) by summing rho(h) conj(pi(h)) over every element of H, for
/// tables whose values are rational integers.
std::vector<std::vector<Int>> elementwise_induced(const mbx::group::SubgroupEmbedding& e,
                                                  const mbx::chartab::CharacterTable& tg,
                                                  const mbx::chartab::CharacterTable& th);

}  // namespace oracle
