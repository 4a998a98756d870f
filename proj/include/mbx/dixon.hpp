#pragma once

#include <cstdint>

#include "mbx/character_table.hpp"
#include "mbx/group.hpp"

namespace mbx::chartab {

/// Smallest prime p with p = 1 (mod exponent) and p > 2 sqrt(order).
std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent);

/// Exact character table by the Dixon-Schneider method.
///
/// Class matrices are split in canonical class order; the seed only drives
/// the random-combination fallback and root finding, so the result is the
/// same for every seed.
CharacterTable character_table(const group::FiniteGroup& g, std::uint64_t seed = 0);

}  // namespace mbx::chartab
