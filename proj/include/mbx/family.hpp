#pragma once

#include <string>
#include <string_view>

#include "mbx/group.hpp"

namespace mbx::group {

/// Family descriptors, case-insensitive:
///   s:<n>  a:<n>  c:<n>  d:<n> (dihedral of order 2n)  q8  sl2:<p>
///   gl:<n>:<q>  u:<n>:<q>  prod(<spec>,<spec>)  diag(<spec>)  factor(<spec>)
/// GL and U accept prime-power q; SL2 requires a prime p. Linear groups act
/// on the nonzero vectors of their natural module.
///
/// diag(X) and factor(X) name the subgroup {(x,x)} resp. X x 1 of X x X,
/// acting on the product's points.
FiniteGroup family_group(std::string_view descriptor, std::size_t cap = kDefaultElementCap);

bool is_embedding_descriptor(std::string_view descriptor);

/// diag(X) / factor(X) as embeddings into prod(X,X).
SubgroupEmbedding family_embedding(std::string_view descriptor, std::size_t cap = kDefaultElementCap);

/// Lower-cased descriptor with whitespace removed.
std::string normalize_descriptor(std::string_view descriptor);

}  // namespace mbx::group
