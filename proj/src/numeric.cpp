#include "mbx/numeric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mbx/error.hpp"

namespace mbx {

Int parse_int(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw Error("bad integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw Error("bad integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

Int pow(const Int& base, unsigned long exponent) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Int factorial(unsigned long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Int isqrt(const Int& n) {
  Int out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

Int iroot(const Int& n, unsigned long r) {
  Int out;
  mpz_root(out.get_mpz_t(), n.get_mpz_t(), r);
  return out;
}

Rational ratio(const Int& a, const Int& b) {
  Rational out(a, b);
  out.canonicalize();
  return out;
}

Int lcm(const Int& a, const Int& b) {
  Int out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::uint64_t to_u64(const Int& value) {
  if (sgn(value) < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64) {
    throw Error("integer " + value.get_str() + " does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

double to_double(const Int& value) { return mpz_get_d(value.get_mpz_t()); }

double to_double(const Rational& value) {
  Real r = to_real(value);
  return r.get_d();
}

std::string to_string(const Int& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str();
}

Real to_real(const Rational& value) {
  Real out(0, kRealBits);
  mpf_set_q(out.get_mpf_t(), value.get_mpq_t());
  return out;
}

Real sqrt_real(const Rational& value) {
  Real out(0, kRealBits);
  Real v = to_real(value);
  mpf_sqrt(out.get_mpf_t(), v.get_mpf_t());
  return out;
}

std::string sci(const Real& value, int digits) {
  if (digits < 1) digits = 1;
  if (sgn(value) == 0) return "0";
  mp_exp_t exp10 = 0;
  // Full expansion, rounded once by hand so ties go away from zero.
  char* raw = mpf_get_str(nullptr, &exp10, 10, 0, value.get_mpf_t());
  std::string s(raw);
  void (*freefunc)(void*, std::size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(raw, std::char_traits<char>::length(raw) + 1);

  bool negative = false;
  if (!s.empty() && s[0] == '-') {
    negative = true;
    s.erase(0, 1);
  }
  while (static_cast<int>(s.size()) < digits + 1) s.push_back('0');
  Int mant(s.substr(0, static_cast<std::size_t>(digits)), 10);
  if (s[static_cast<std::size_t>(digits)] >= '5') mant += 1;
  long exponent = static_cast<long>(exp10) - 1;
  std::string m = mant.get_str();
  if (static_cast<int>(m.size()) > digits) {
    m.pop_back();
    exponent += 1;
  }
  std::string out = negative ? "-" : "";
  out += m.substr(0, 1);
  if (digits > 1) out += "." + m.substr(1);
  out += "e" + std::to_string(exponent);
  return out;
}

std::string sci(const Rational& value, int digits) { return sci(to_real(value), digits); }

}  // namespace mbx
