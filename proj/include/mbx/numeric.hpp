#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace mbx {

using Int = mpz_class;
using Rational = mpq_class;

Int parse_int(std::string_view text);
Int pow(const Int& base, unsigned long exponent);
Int factorial(unsigned long n);
Int isqrt(const Int& n);
/// floor of the r-th root.
Int iroot(const Int& n, unsigned long r);
Int lcm(const Int& a, const Int& b);
/// a/b in canonical form; b != 0.
Rational ratio(const Int& a, const Int& b);

std::uint64_t to_u64(const Int& value);

double to_double(const Int& value);
double to_double(const Rational& value);

/// Decimal rendering of an integer or a reduced fraction "p/q".
std::string to_string(const Int& value);
std::string to_string(const Rational& value);

/// High-precision float used only for display of irrational quantities.
using Real = mpf_class;
constexpr unsigned long kRealBits = 512;

Real to_real(const Rational& value);
Real sqrt_real(const Rational& value);

/// Scientific rendering with `digits` significant digits, e.g. "6.45e25".
/// Rounds half away from zero on the exact decimal expansion.
std::string sci(const Real& value, int digits = 3);
std::string sci(const Rational& value, int digits = 3);

}  // namespace mbx
