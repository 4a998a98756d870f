#include "mbx/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "mbx/error.hpp"

namespace mbx::chartab {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

int mobius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::uint64_t mod(std::int64_t a, std::uint64_t n) {
  std::int64_t r = a % static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(n) : r);
}

/// Reduces a polynomial (any length) modulo Phi_n; result has length phi(n).
std::vector<Int> reduce_mod_phi(std::uint64_t n, std::vector<Int> a) {
  const auto& phi_poly = cyclotomic_polynomial(n);
  std::size_t deg = phi_poly.size() - 1;
  for (std::size_t d = a.size(); d-- > deg;) {
    if (a[d] == 0) continue;
    Int c = a[d];
    std::size_t shift = d - deg;
    for (std::size_t i = 0; i <= deg; ++i) {
      if (phi_poly[i] != 0) a[shift + i] -= c * phi_poly[i];
    }
  }
  a.resize(deg, Int(0));
  return a;
}

struct Canonical {
  std::uint64_t n;
  std::vector<Int> coeffs;
};

/// Moves a residue mod Phi_n into the smallest cyclotomic field containing it.
Canonical minimize(std::uint64_t n, std::vector<Int> c) {
  bool moved = true;
  while (moved && n > 1) {
    moved = false;
    for (std::uint64_t q : prime_factors(n)) {
      std::uint64_t m = n / q;
      if (m % q == 0) {
        // Phi_n(x) = Phi_m(x^q): only exponents divisible by q may survive.
        bool ok = true;
        for (std::size_t j = 0; j < c.size() && ok; ++j) ok = (j % q == 0) || c[j] == 0;
        if (!ok) continue;
        std::vector<Int> next(c.size() / q);
        for (std::size_t i = 0; i < next.size(); ++i) next[i] = c[i * q];
        c = std::move(next);
      } else {
        // zeta_n = zeta_m^s zeta_q^t with s*q + t*m = 1.
        std::uint64_t s = 0;
        while ((s * q) % m != 1 % m) ++s;
        std::uint64_t t = 0;
        while ((t * m) % q != 1 % q) ++t;
        std::vector<std::vector<Int>> rows(q, std::vector<Int>(m));
        for (std::size_t j = 0; j < c.size(); ++j) {
          if (c[j] == 0) continue;
          rows[(j * t) % q][(j * s) % m] += c[j];
        }
        // zeta_q^(q-1) = -(1 + zeta_q + ... + zeta_q^(q-2))
        for (std::size_t b = 0; b + 1 < q; ++b) {
          for (std::size_t a = 0; a < m; ++a) rows[b][a] -= rows[q - 1][a];
        }
        bool ok = true;
        for (std::size_t b = 1; b + 1 < q && ok; ++b) {
          for (const Int& v : reduce_mod_phi(m, rows[b])) {
            if (v != 0) {
              ok = false;
              break;
            }
          }
        }
        if (!ok) continue;
        c = reduce_mod_phi(m, std::move(rows[0]));
      }
      n = m;
      moved = true;
      break;
    }
  }
  if (n == 2) n = 1;  // Q(zeta_2) = Q, and Phi_2 = x + 1 leaves a constant.
  return {n, std::move(c)};
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t out = n;
  for (std::uint64_t p : prime_factors(n)) out = out / p * (p - 1);
  return out;
}

const std::vector<long>& cyclotomic_polynomial(std::uint64_t n) {
  static std::mutex lock;
  static std::map<std::uint64_t, std::vector<long>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = prod_{d | n} (x^d - 1)^mu(n/d)
  std::vector<long> poly{1};
  std::vector<std::uint64_t> divisors_down;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = mobius(n / d);
    if (mu == 1) {
      std::vector<long> next(poly.size() + d, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + d] += poly[i];
        next[i] -= poly[i];
      }
      poly = std::move(next);
    } else if (mu == -1) {
      divisors_down.push_back(d);
    }
  }
  for (std::uint64_t d : divisors_down) {
    // Exact division by x^d - 1, from the top down.
    std::size_t qlen = poly.size() - d;
    std::vector<long> quotient(qlen, 0);
    for (std::size_t i = qlen; i-- > 0;) {
      quotient[i] = poly[i + d] + (i + d < qlen ? quotient[i + d] : 0);
    }
    poly = std::move(quotient);
  }
  return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic Cyclotomic::root_of_unity(std::uint64_t n, std::int64_t j) {
  if (n == 0) throw Error("root of unity of order 0");
  std::vector<Int> raw(n);
  raw[mod(j, n)] = 1;
  return from_raw(n, std::move(raw));
}

Cyclotomic Cyclotomic::from_raw(std::uint64_t n, std::vector<Int> raw) {
  if (n == 0 || raw.size() > n) throw Error("raw cyclotomic vector longer than its order");
  Canonical c = minimize(n, reduce_mod_phi(n, std::move(raw)));
  Cyclotomic out;
  out.conductor_ = c.n;
  out.coeffs_ = std::move(c.coeffs);
  if (out.coeffs_.empty()) out.coeffs_.assign(1, Int(0));
  return out;
}

const Int& Cyclotomic::rational() const {
  if (conductor_ != 1) throw Error("value " + to_string() + " is not rational");
  return coeffs_[0];
}

std::vector<std::pair<std::uint64_t, Int>> Cyclotomic::terms_over(std::uint64_t n) const {
  if (n % conductor_ != 0) throw Error("conductor does not divide target order");
  std::uint64_t step = n / conductor_;
  std::vector<std::pair<std::uint64_t, Int>> out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) out.emplace_back(j * step, coeffs_[j]);
  }
  return out;
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  if (conductor_ == 1) return *this;
  std::vector<Int> raw(conductor_);
  for (const auto& [j, c] : terms_over(conductor_)) {
    raw[mod(static_cast<std::int64_t>(j % conductor_) * (k % static_cast<std::int64_t>(conductor_)), conductor_)] += c;
  }
  return from_raw(conductor_, std::move(raw));
}

Rational Cyclotomic::normalized_trace() const {
  // Tr(zeta_n^j) / phi(n) = mu(m) / phi(m) with m = n / gcd(n, j).
  Rational out(0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    std::uint64_t m = conductor_ / std::gcd(conductor_, static_cast<std::uint64_t>(j));
    int mu = mobius(m);
    if (mu == 0) continue;
    out += ratio(coeffs_[j] * mu, Int(static_cast<unsigned long>(euler_phi(m))));
  }
  out.canonicalize();
  return out;
}

std::complex<double> Cyclotomic::approx() const {
  std::complex<double> out = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(conductor_);
    out += to_double(coeffs_[j]) * std::polar(1.0, angle);
  }
  return out;
}

std::string Cyclotomic::to_string() const {
  if (conductor_ == 1) return coeffs_[0].get_str();
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Int& c = coeffs_[j];
    if (c == 0) continue;
    if (sgn(c) < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    Int a = abs(c);
    out += a.get_str() + "*z(" + std::to_string(conductor_) + "," + std::to_string(j) + ")";
  }
  return out;
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void { throw ParseError(1, pos + 1, what); };
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_digits = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return std::string(text.substr(start, pos - start));
  };

  std::vector<std::pair<Cyclotomic, Int>> terms;  // (root or 1, signed coefficient)
  skip_space();
  bool first = true;
  while (true) {
    skip_space();
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_space();
    } else if (!first) {
      break;
    }
    if (pos >= text.size()) fail("expected a term");
    Int coeff(1);
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = Int(read_digits());
      has_coeff = true;
      skip_space();
    }
    Cyclotomic root(1L);
    bool has_root = false;
    if (has_coeff && pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_space();
      if (pos >= text.size() || text[pos] != 'z') fail("expected z(n,j) after '*'");
    }
    if (pos < text.size() && text[pos] == 'z') {
      ++pos;
      skip_space();
      if (pos >= text.size() || text[pos] != '(') fail("expected '('");
      ++pos;
      skip_space();
      std::uint64_t n = std::stoull(read_digits());
      skip_space();
      if (pos >= text.size() || text[pos] != ',') fail("expected ','");
      ++pos;
      skip_space();
      int jsign = 1;
      if (pos < text.size() && text[pos] == '-') {
        jsign = -1;
        ++pos;
      }
      std::int64_t j = jsign * std::stoll(read_digits());
      skip_space();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      if (n == 0) fail("root of unity of order 0");
      root = root_of_unity(n, j);
      has_root = true;
    }
    if (!has_coeff && !has_root) fail("expected an integer or z(n,j)");
    terms.emplace_back(root, sign * coeff);
    first = false;
  }
  skip_space();
  if (pos != text.size()) fail("unexpected character '" + std::string(1, text[pos]) + "'");

  Cyclotomic out;
  for (auto& [root, c] : terms) out = out + Cyclotomic(c) * root;
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (Int& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) {
    Cyclotomic out = a;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
    if (out.conductor_ == 1) return out;
    Canonical c = minimize(out.conductor_, std::move(out.coeffs_));
    out.conductor_ = c.n;
    out.coeffs_ = std::move(c.coeffs);
    if (out.coeffs_.empty()) out.coeffs_.assign(1, Int(0));
    return out;
  }
  std::uint64_t n = std::lcm(a.conductor_, b.conductor_);
  std::vector<Int> raw(n);
  for (const auto& [j, c] : a.terms_over(n)) raw[j] += c;
  for (const auto& [j, c] : b.terms_over(n)) raw[j] += c;
  return Cyclotomic::from_raw(n, std::move(raw));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == 1 && b.conductor_ == 1) return Cyclotomic(a.coeffs_[0] * b.coeffs_[0]);
  if (a.conductor_ == 1 || b.conductor_ == 1) {
    const Cyclotomic& scalar = a.conductor_ == 1 ? a : b;
    Cyclotomic out = a.conductor_ == 1 ? b : a;
    if (scalar.coeffs_[0] == 0) return Cyclotomic();
    for (Int& c : out.coeffs_) c *= scalar.coeffs_[0];
    return out;
  }
  std::uint64_t n = std::lcm(a.conductor_, b.conductor_);
  std::vector<Int> raw(n);
  auto ta = a.terms_over(n);
  auto tb = b.terms_over(n);
  for (const auto& [i, x] : ta) {
    for (const auto& [j, y] : tb) raw[(i + j) % n] += x * y;
  }
  return Cyclotomic::from_raw(n, std::move(raw));
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (auto c = a.conductor_ <=> b.conductor_; c != 0) return c;
  if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

void CyclotomicSum::add_product(const Int& scale,
                                std::initializer_list<std::pair<const Cyclotomic*, bool>> factors) {
  std::vector<std::pair<std::uint64_t, Int>> acc{{0, scale}};
  for (const auto& [value, conj] : factors) {
    auto terms = value->terms_over(n_);
    std::vector<std::pair<std::uint64_t, Int>> next;
    next.reserve(acc.size() * terms.size());
    for (const auto& [i, x] : acc) {
      for (const auto& [j, y] : terms) {
        std::uint64_t e = conj ? (n_ - j) % n_ : j;
        next.emplace_back((i + e) % n_, x * y);
      }
    }
    acc = std::move(next);
  }
  for (auto& [e, c] : acc) raw_[e] += c;
}

}  // namespace mbx::chartab
