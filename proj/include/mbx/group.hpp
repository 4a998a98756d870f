#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mbx/permutation.hpp"

namespace mbx::group {

constexpr std::size_t kDefaultElementCap = 250000;

struct ConjugacyClass {
  Permutation representative;
  std::uint64_t size = 0;
  std::uint64_t centralizer_order = 0;
  std::uint32_t element_order = 0;
};

enum class FamilyKind {
  custom,
  symmetric,
  alternating,
  cyclic,
  dihedral,
  quaternion,
  sl2,
  general_linear,
  unitriangular,
  product,
};

/// What a group was built as. The Lie rank is an annotation, never computed.
struct FamilyInfo {
  FamilyKind kind = FamilyKind::custom;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  std::optional<std::uint32_t> lie_rank;
  std::string descriptor;
};

/// A permutation group with every element enumerated.
///
/// Element 0 is the identity, followed by breadth-first generation layers,
/// each layer in lexicographic order of image arrays. Conjugacy classes are
/// computed at construction: identity class first, then ordered by
/// (size, element order, lexicographically least member), and that least
/// member is the stored representative.
class FiniteGroup {
 public:
  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::uint64_t order() const { return count_; }

  std::span<const Point> element(std::uint32_t i) const {
    return {points_.data() + static_cast<std::size_t>(i) * degree_, degree_};
  }
  Permutation permutation(std::uint32_t i) const;

  std::optional<std::uint32_t> find(std::span<const Point> images) const;
  std::optional<std::uint32_t> find(const Permutation& p) const { return find(p.images()); }

  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const { return inverses_[a]; }
  /// g^-1 x g
  std::uint32_t conjugate(std::uint32_t x, std::uint32_t g) const { return multiply(multiply(inverse(g), x), g); }
  std::uint32_t power(std::uint32_t x, std::uint64_t e) const;
  std::uint32_t element_order(std::uint32_t x) const;

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }
  std::uint32_t class_of(std::uint32_t element) const { return class_of_[element]; }
  std::uint32_t representative_index(std::uint32_t cls) const { return class_reps_[cls]; }
  std::uint32_t inverse_class(std::uint32_t cls) const { return class_of_[inverse(class_reps_[cls])]; }
  /// Class containing g^e for g in class `cls`.
  std::uint32_t power_class(std::uint32_t cls, std::uint64_t e) const {
    return class_of_[power(class_reps_[cls], e)];
  }
  /// Least common multiple of element orders.
  std::uint64_t exponent() const;

  const FamilyInfo& family() const { return family_; }

 private:
  friend FiniteGroup build_group(std::vector<Permutation>, std::size_t, std::size_t, std::string, FamilyInfo);

  std::uint64_t hash(std::span<const Point> images) const;
  void insert(std::span<const Point> images);
  void compute_classes();

  std::string name_;
  FamilyInfo family_;
  std::size_t degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Point> points_;
  std::uint32_t count_ = 0;
  std::vector<std::uint32_t> slots_;
  std::uint64_t mask_ = 0;
  std::vector<std::uint32_t> inverses_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::uint32_t> class_reps_;
  std::vector<std::uint32_t> class_of_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Closure of `generators` under composition.
/// Throws CapExceeded past `cap` elements, InvalidPermutation on a bad generator.
FiniteGroup build_group(std::vector<Permutation> generators, std::size_t degree,
                        std::size_t cap = kDefaultElementCap, std::string name = "",
                        FamilyInfo family = {});

const std::vector<ConjugacyClass>& conjugacy_classes(const FiniteGroup& g);

/// H inside G; both act on the same points and `inclusion[h]` is the parent
/// index of sub element h.
struct SubgroupEmbedding {
  GroupPtr parent;
  GroupPtr sub;
  std::vector<std::uint32_t> inclusion;

  std::uint64_t index() const { return parent->order() / sub->order(); }
};

/// Throws NotASubgroup when a generator is not an element of `parent`.
SubgroupEmbedding embed(GroupPtr parent, const std::vector<Permutation>& sub_generators,
                        std::string sub_name = "");

enum class EmbeddingKind { diagonal, factor };

/// H x H on two disjoint copies of H's points, with either the diagonal
/// {(h,h)} or the first factor H x 1 as the subgroup.
SubgroupEmbedding embed_diagonal(const FiniteGroup& h, EmbeddingKind kind = EmbeddingKind::diagonal,
                                 std::size_t cap = kDefaultElementCap);

/// Where each H-class lands in G, with centralizer orders on both sides.
struct ClassFusion {
  SubgroupEmbedding embedding;
  std::vector<std::uint32_t> fusion;
  std::vector<std::uint64_t> z_sub;
  std::vector<std::uint64_t> z_parent;
};

ClassFusion class_fusion(const SubgroupEmbedding& e);

/// Length of the lower central series down to 1, or nullopt if it stalls.
std::optional<std::uint32_t> nilpotency_class(const FiniteGroup& g);

bool is_simple(const FiniteGroup& g);

std::uint64_t center_order(const FiniteGroup& g);

/// Number of x with x^2 = 1, identity included.
std::uint64_t involution_count(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g);

}  // namespace mbx::group
