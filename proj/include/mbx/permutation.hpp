#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mbx::group {

using Point = std::uint16_t;

/// A bijection of {0, ..., degree-1}, stored as its image array.
///
/// Products compose left to right: (x * y)[i] == y[x[i]], i.e. apply x first.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidPermutation unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Parses cycle notation such as "(1 2)(3 4 5)"; "()" is the identity.
  /// Points are 1-based when `one_based` (the file convention).
  static Permutation from_cycles(std::string_view text, std::size_t degree, bool one_based = true);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Same permutation on a larger point set, fixing the new points.
  Permutation extended(std::size_t degree) const;
  /// Moves the action to points offset..offset+degree()-1 inside `degree`.
  Permutation shifted(std::size_t offset, std::size_t degree) const;

  std::string cycles(bool one_based = true) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// One permutation per non-empty line, cycle notation, 1-based; '#' starts a comment.
std::vector<Permutation> parse_generators(std::string_view text, std::size_t degree);

}  // namespace mbx::group
