#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "mbx/character_table.hpp"
#include "mbx/numeric.hpp"
#include "mbx/permutation.hpp"

namespace mbx::symmetric {

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<std::uint32_t> parts;

  std::uint32_t n() const;
  std::string to_string() const;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Calls `visit` on every partition of n in reverse lexicographic order,
/// starting from (n) and ending at (1^n).
void for_each_partition(std::uint32_t n, const std::function<void(const Partition&)>& visit);
std::vector<Partition> partitions(std::uint32_t n);

/// p(n) by the pentagonal-number recurrence.
Int partition_count(std::uint32_t n);

Partition conjugate(const Partition& lambda);

/// n! / product of hook lengths.
Int hook_degree(const Partition& lambda);

/// Number of x in S_n with x^2 = 1: t(n) = t(n-1) + (n-1) t(n-2).
Int involution_count(std::uint32_t n);

Partition cycle_type(const group::Permutation& x);

/// |C(x)| for x of cycle type mu: prod_i i^(m_i) m_i!.
Int centralizer_order(const Partition& mu);

constexpr std::uint32_t kDefaultSnCap = 60;
constexpr std::uint32_t kDefaultSnTableCap = 12;

struct DegreeFiber {
  Int degree;
  std::vector<Partition> partitions;
};

struct SnDegreeStats {
  std::uint32_t n = 0;
  Int partition_count;
  Int b;
  std::uint32_t m = 0;  // partitions of degree b
  std::vector<Partition> argmax;
  std::uint32_t f = 0;  // largest number of partitions sharing a degree
  std::vector<DegreeFiber> f_fibers;  // every degree attaining f, ascending
  Rational epsilon;
  Int degree_sum;
};

/// Throws CapExceeded above `cap`.
SnDegreeStats sn_degree_stats(std::uint32_t n, std::uint32_t cap = kDefaultSnCap);

/// e^(pi sqrt(2n/3)) / (4 n sqrt 3)
double hardy_ramanujan(std::uint32_t n);

inline const double kVkC1 = 1.2825498301618641;  // pi / sqrt 6
inline const double kVkC2 = 0.11566751889911513;  // (pi - 2) / pi^2

struct VkWindow {
  double lower;  // sqrt(n!) e^(-c1 sqrt n)
  double upper;  // sqrt(n!) e^(-c2 sqrt n)
};
VkWindow vk_window(std::uint32_t n);

/// Integer table by the Murnaghan-Nakayama rule. Rows are partitions in
/// reverse lexicographic order; columns are cycle types in lexicographic
/// order, so (1^n) comes first. Throws CapExceeded above `cap`.
chartab::CharacterTable sn_character_table(std::uint32_t n, std::uint32_t cap = kDefaultSnTableCap);

/// Column cycle types of sn_character_table(n).
std::vector<Partition> sn_column_types(std::uint32_t n);

}  // namespace mbx::symmetric
