#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mbx/numeric.hpp"

namespace mbx::chartab {

/// An element of Z[zeta_n], the ring of integers of the n-th cyclotomic field.
///
/// Canonical form: coefficients in the power basis 1, zeta, ..., zeta^(phi(n)-1)
/// modulo the n-th cyclotomic polynomial, with n the least conductor of the
/// value (never 2 mod 4). Rationals have conductor 1. Equality is
/// coefficient equality.
class Cyclotomic {
 public:
  Cyclotomic() : coeffs_{Int(0)} {}
  Cyclotomic(long value) : coeffs_{Int(value)} {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Int& value) : coeffs_{value} {}  // NOLINT(google-explicit-constructor)

  /// exp(2 pi i j / n)
  static Cyclotomic root_of_unity(std::uint64_t n, std::int64_t j);

  /// Value of sum_j raw[j] zeta_n^j for a coefficient vector of length n.
  static Cyclotomic from_raw(std::uint64_t n, std::vector<Int> raw);

  /// Parses the table-file grammar: `<int>` or terms `<int>*z(<n>,<j>)`
  /// joined by '+'/'-'. Bare `z(n,j)` and plain integer terms are accepted.
  static Cyclotomic parse(std::string_view text);

  std::uint64_t conductor() const { return conductor_; }
  const std::vector<Int>& coefficients() const { return coeffs_; }

  bool is_rational() const { return conductor_ == 1; }
  bool is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }
  /// Throws Error if the value is irrational.
  const Int& rational() const;

  Cyclotomic conj() const { return galois(-1); }
  /// The ring map zeta -> zeta^k.
  Cyclotomic galois(std::int64_t k) const;

  /// (1/phi(n)) * trace to Q; equals the value itself when it is rational,
  /// and is additive, so it recovers any rational sum term by term.
  Rational normalized_trace() const;

  /// Sparse terms (exponent, coefficient) of this value written over zeta_n,
  /// where n is a multiple of the conductor.
  std::vector<std::pair<std::uint64_t, Int>> terms_over(std::uint64_t n) const;

  std::complex<double> approx() const;
  std::string to_string() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }
  /// Total order: conductor first, then coefficients lexicographically.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

 private:
  std::uint64_t conductor_ = 1;
  std::vector<Int> coeffs_;
};

/// Accumulates sums of products at a fixed conductor n, reducing only once.
class CyclotomicSum {
 public:
  explicit CyclotomicSum(std::uint64_t n) : n_(n), raw_(n) {}

  std::uint64_t conductor() const { return n_; }
  /// Adds scale * prod(factors), conjugating the factors flagged in `conj`.
  void add_product(const Int& scale, std::initializer_list<std::pair<const Cyclotomic*, bool>> factors);
  Cyclotomic value() const { return Cyclotomic::from_raw(n_, raw_); }

 private:
  std::uint64_t n_;
  std::vector<Int> raw_;
};

std::uint64_t euler_phi(std::uint64_t n);
/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(std::uint64_t n);

}  // namespace mbx::chartab
