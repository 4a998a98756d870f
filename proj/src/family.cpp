#include "mbx/family.hpp"

#include <cctype>
#include <numeric>
#include <vector>

#include "mbx/error.hpp"

namespace mbx::group {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// GF(q) for q = p^k, elements encoded as base-p digit strings of polynomials.
class SmallField {
 public:
  explicit SmallField(std::uint32_t q) : q_(q) {
    for (std::uint32_t p = 2; p <= q; ++p) {
      if (q % p == 0) {
        p_ = p;
        break;
      }
    }
    std::uint32_t t = q;
    while (t % p_ == 0) {
      t /= p_;
      ++k_;
    }
    if (t != 1 || q < 2) throw Error("field size " + std::to_string(q) + " is not a prime power");
    if (q > 1024) throw CapExceeded("field size " + std::to_string(q) + " too large");
    find_modulus();
    mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) mul_[a * q_ + b] = slow_mul(a, b);
    }
    for (std::uint32_t g = 2; g < q_ || q_ == 2; ++g) {
      std::uint32_t cand = q_ == 2 ? 1 : g;
      std::uint32_t x = cand;
      std::uint32_t ord = 1;
      while (x != 1) {
        x = mul(x, cand);
        ++ord;
      }
      if (ord == q_ - 1) {
        primitive_ = cand;
        break;
      }
    }
  }

  std::uint32_t size() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t primitive() const { return primitive_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0;
    std::uint32_t scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      out += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return out;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }

 private:
  std::vector<std::uint32_t> digits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }

  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    auto x = digits(a);
    auto y = digits(b);
    std::vector<std::uint32_t> prod(2 * k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
      for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
    for (std::uint32_t d = 2 * k_ - 1; d >= k_ && d < 2 * k_; --d) {
      std::uint32_t c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (std::uint32_t i = 0; i < k_; ++i) {
        prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - c) * modulus_[i]) % p_;
      }
    }
    std::uint32_t out = 0;
    for (std::uint32_t i = k_; i-- > 0;) out = out * p_ + prod[i];
    return out;
  }

  void find_modulus() {
    // Monic x^k + sum m_i x^i without roots is irreducible for k <= 3;
    // larger k checks for no factor of degree <= k/2 by trial division.
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < k_; ++i) count *= p_;
    for (std::uint32_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> m(k_);
      std::uint32_t c = code;
      for (std::uint32_t i = 0; i < k_; ++i) {
        m[i] = c % p_;
        c /= p_;
      }
      std::vector<std::uint32_t> full(m);
      full.push_back(1);
      if (irreducible(full)) {
        modulus_ = m;
        return;
      }
    }
    throw Error("no irreducible polynomial found");
  }

  bool irreducible(const std::vector<std::uint32_t>& f) const {
    std::uint32_t deg = static_cast<std::uint32_t>(f.size()) - 1;
    if (deg == 1) return true;
    for (std::uint32_t d = 1; d <= deg / 2; ++d) {
      std::uint32_t count = 1;
      for (std::uint32_t i = 0; i < d; ++i) count *= p_;
      for (std::uint32_t code = 0; code < count; ++code) {
        std::vector<std::uint32_t> g(d + 1);
        std::uint32_t c = code;
        for (std::uint32_t i = 0; i < d; ++i) {
          g[i] = c % p_;
          c /= p_;
        }
        g[d] = 1;
        if (divides(g, f)) return false;
      }
    }
    return true;
  }

  bool divides(const std::vector<std::uint32_t>& g, std::vector<std::uint32_t> f) const {
    std::size_t dg = g.size() - 1;
    for (std::size_t d = f.size() - 1; d >= dg && d < f.size(); --d) {
      std::uint32_t c = f[d];
      if (c == 0) continue;
      for (std::size_t i = 0; i <= dg; ++i) f[d - dg + i] = (f[d - dg + i] + (p_ - c) * g[i]) % p_;
    }
    for (std::size_t i = 0; i < dg; ++i) {
      if (f[i] != 0) return false;
    }
    return true;
  }

  std::uint32_t q_;
  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t primitive_ = 1;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> mul_;
};

using Matrix = std::vector<std::vector<std::uint32_t>>;

Matrix identity_matrix(std::uint32_t n) {
  Matrix m(n, std::vector<std::uint32_t>(n, 0));
  for (std::uint32_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

/// Permutation of the q^n - 1 nonzero column vectors induced by v -> M v.
Permutation vector_action(const SmallField& f, const Matrix& m) {
  std::uint32_t n = static_cast<std::uint32_t>(m.size());
  std::uint32_t q = f.size();
  std::uint32_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) total *= q;
  std::vector<Point> images(total - 1);
  std::vector<std::uint32_t> v(n), w(n);
  for (std::uint32_t code = 1; code < total; ++code) {
    std::uint32_t c = code;
    for (std::uint32_t i = 0; i < n; ++i) {
      v[i] = c % q;
      c /= q;
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      std::uint32_t acc = 0;
      for (std::uint32_t j = 0; j < n; ++j) acc = f.add(acc, f.mul(m[i][j], v[j]));
      w[i] = acc;
    }
    std::uint32_t out = 0;
    for (std::uint32_t i = n; i-- > 0;) out = out * q + w[i];
    images[code - 1] = static_cast<Point>(out - 1);
  }
  return Permutation(std::move(images));
}

std::uint32_t vector_degree(std::uint32_t n, std::uint32_t q, std::size_t cap) {
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    total *= q;
    if (total > 0x10000) throw CapExceeded("natural module of size " + std::to_string(q) + "^" + std::to_string(n) + " too large");
  }
  (void)cap;
  return static_cast<std::uint32_t>(total - 1);
}

/// Root-subgroup generators x_ij(a) for a over an additive basis of GF(q).
std::vector<Matrix> transvections(const SmallField& f, std::uint32_t n, bool lower_too) {
  std::vector<Matrix> out;
  std::vector<std::uint32_t> basis;
  std::uint32_t a = 1;
  for (std::uint32_t i = 0; i < f.degree(); ++i) {
    basis.push_back(a);
    a = f.mul(a, f.primitive());
  }
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    for (std::uint32_t b : basis) {
      Matrix up = identity_matrix(n);
      up[i][i + 1] = b;
      out.push_back(up);
      if (lower_too) {
        Matrix down = identity_matrix(n);
        down[i + 1][i] = b;
        out.push_back(down);
      }
    }
  }
  return out;
}

struct Parser {
  std::string text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(1, pos + 1, what + " in descriptor '" + text + "'");
  }

  bool eat(std::string_view token) {
    if (text.compare(pos, token.size(), token) == 0) {
      pos += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!eat(token)) fail("expected '" + std::string(token) + "'");
  }

  std::uint32_t number() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    unsigned long v = std::stoul(text.substr(start, pos - start));
    if (v > 100000) fail("parameter too large");
    return static_cast<std::uint32_t>(v);
  }
};

struct Built {
  std::vector<Permutation> gens;
  std::size_t degree = 1;
  std::string name;
  FamilyInfo family;
};

Built parse_spec(Parser& p, std::size_t cap);

Built make_product(const Built& a, const Built& b, std::size_t cap) {
  (void)cap;
  Built out;
  out.degree = a.degree + b.degree;
  for (const auto& s : a.gens) out.gens.push_back(s.shifted(0, out.degree));
  for (const auto& s : b.gens) out.gens.push_back(s.shifted(a.degree, out.degree));
  out.name = a.name + "x" + b.name;
  out.family = {FamilyKind::product, 0, 0, std::nullopt,
                "prod(" + a.family.descriptor + "," + b.family.descriptor + ")"};
  return out;
}

Built parse_spec(Parser& p, std::size_t cap) {
  Built b;
  auto cycle = [](std::uint32_t n, std::uint32_t from, std::uint32_t degree) {
    std::vector<Point> im(degree);
    std::iota(im.begin(), im.end(), Point{0});
    for (std::uint32_t i = from; i < n; ++i) im[i] = static_cast<Point>(i + 1 < n ? i + 1 : from);
    return Permutation(std::move(im));
  };
  if (p.eat("prod(")) {
    Built x = parse_spec(p, cap);
    p.expect(",");
    Built y = parse_spec(p, cap);
    p.expect(")");
    return make_product(x, y, cap);
  }
  if (p.eat("diag(") || p.eat("factor(")) {
    bool diag = p.text.compare(p.pos - 5, 5, "diag(") == 0;
    Built x = parse_spec(p, cap);
    p.expect(")");
    std::size_t d = x.degree;
    b.degree = 2 * d;
    for (const auto& s : x.gens) {
      Permutation left = s.shifted(0, 2 * d);
      b.gens.push_back(diag ? left * s.shifted(d, 2 * d) : left);
    }
    b.name = std::string(diag ? "diag(" : "factor(") + x.name + ")";
    b.family = {FamilyKind::custom, 0, 0, std::nullopt,
                std::string(diag ? "diag(" : "factor(") + x.family.descriptor + ")"};
    return b;
  }
  if (p.eat("q8")) {
    // Left multiplication on {+-1, +-i, +-j, +-k}; index = 4*sign + unit.
    static const int table[4][4][2] = {
        {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
        {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
        {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
        {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
    };
    for (int unit : {1, 2}) {
      std::vector<Point> im(8);
      for (int s = 0; s < 2; ++s) {
        for (int u = 0; u < 4; ++u) {
          int sign = (s + table[unit][u][0]) % 2;
          im[4 * s + u] = static_cast<Point>(4 * sign + table[unit][u][1]);
        }
      }
      b.gens.emplace_back(std::move(im));
    }
    b.degree = 8;
    b.name = "Q8";
    b.family = {FamilyKind::quaternion, 8, 0, std::nullopt, "q8"};
    return b;
  }
  if (p.eat("sl2:")) {
    std::uint32_t prime = p.number();
    if (!is_prime(prime)) p.fail("sl2 needs a prime");
    SmallField f(prime);
    b.degree = vector_degree(2, prime, cap);
    for (const auto& m : transvections(f, 2, true)) b.gens.push_back(vector_action(f, m));
    b.name = "SL2(" + std::to_string(prime) + ")";
    b.family = {FamilyKind::sl2, 2, prime, 1u, "sl2:" + std::to_string(prime)};
    return b;
  }
  if (p.eat("gl:") || p.eat("u:")) {
    bool gl = p.text[p.pos - 2] == 'l';
    std::uint32_t n = p.number();
    p.expect(":");
    std::uint32_t q = p.number();
    if (n < 1) p.fail("dimension must be positive");
    SmallField f(q);
    b.degree = vector_degree(n, q, cap);
    for (const auto& m : transvections(f, n, gl)) b.gens.push_back(vector_action(f, m));
    if (gl && q > 2) {
      Matrix d = identity_matrix(n);
      d[0][0] = f.primitive();
      b.gens.push_back(vector_action(f, d));
    }
    std::string tail = std::to_string(n) + ":" + std::to_string(q);
    if (gl) {
      b.name = "GL" + std::to_string(n) + "(" + std::to_string(q) + ")";
      b.family = {FamilyKind::general_linear, n, q, n, "gl:" + tail};
    } else {
      b.name = "U" + std::to_string(n) + "(" + std::to_string(q) + ")";
      b.family = {FamilyKind::unitriangular, n, q, std::nullopt, "u:" + tail};
    }
    return b;
  }
  if (p.pos + 1 < p.text.size() && p.text[p.pos + 1] == ':') {
    char kind = p.text[p.pos];
    p.pos += 2;
    std::uint32_t n = p.number();
    if (n < 1) p.fail("parameter must be positive");
    b.degree = n;
    std::string tail = std::to_string(n);
    switch (kind) {
      case 's':
        if (n >= 2) b.gens = {cycle(2, 0, n), cycle(n, 0, n)};
        b.name = "S" + tail;
        b.family = {FamilyKind::symmetric, n, 0, std::nullopt, "s:" + tail};
        return b;
      case 'a':
        if (n >= 3) b.gens = {cycle(3, 0, n), n % 2 == 1 ? cycle(n, 0, n) : cycle(n, 1, n)};
        b.name = "A" + tail;
        b.family = {FamilyKind::alternating, n, 0, std::nullopt, "a:" + tail};
        return b;
      case 'c':
        if (n >= 2) b.gens = {cycle(n, 0, n)};
        b.name = "C" + tail;
        b.family = {FamilyKind::cyclic, n, 0, std::nullopt, "c:" + tail};
        return b;
      case 'd': {
        if (n < 3) p.fail("dihedral d:<n> needs n >= 3 to act faithfully on n points");
        std::vector<Point> refl(n);
        for (std::uint32_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
        b.gens = {cycle(n, 0, n), Permutation(std::move(refl))};
        b.name = "D" + std::to_string(2 * n);
        b.family = {FamilyKind::dihedral, n, 0, std::nullopt, "d:" + tail};
        return b;
      }
      default:
        break;
    }
  }
  p.fail("unknown family");
}

Built parse_full(std::string_view descriptor, std::size_t cap) {
  Parser p{normalize_descriptor(descriptor), 0};
  Built b = parse_spec(p, cap);
  if (p.pos != p.text.size()) p.fail("trailing characters");
  return b;
}

}  // namespace

std::string normalize_descriptor(std::string_view descriptor) {
  std::string out;
  for (char c : descriptor) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

FiniteGroup family_group(std::string_view descriptor, std::size_t cap) {
  Built b = parse_full(descriptor, cap);
  return build_group(std::move(b.gens), b.degree, cap, b.name, b.family);
}

bool is_embedding_descriptor(std::string_view descriptor) {
  std::string d = normalize_descriptor(descriptor);
  return d.rfind("diag(", 0) == 0 || d.rfind("factor(", 0) == 0;
}

SubgroupEmbedding family_embedding(std::string_view descriptor, std::size_t cap) {
  std::string d = normalize_descriptor(descriptor);
  bool diag = d.rfind("diag(", 0) == 0;
  if (!diag && d.rfind("factor(", 0) != 0) throw Error("not an embedding descriptor: " + d);
  std::string inner = d.substr(diag ? 5 : 7, d.size() - (diag ? 6 : 8));
  FiniteGroup h = family_group(inner, cap);
  auto e = embed_diagonal(h, diag ? EmbeddingKind::diagonal : EmbeddingKind::factor, cap);
  return e;
}

}  // namespace mbx::group
