#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "mbx/dixon.hpp"
#include "mbx/error.hpp"
#include "mbx/family.hpp"
#include "mbx/symmetric.hpp"
#include "mbx/verify.hpp"

namespace mbx::verify {

using chartab::CharacterTable;
using group::FamilyKind;

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::inapplicable:
      return "inapplicable";
  }
  return "inapplicable";
}

// ---------------------------------------------------------------------------
// Subject

struct Subject::Cache {
  std::optional<group::SubgroupEmbedding> embedding;
  group::GroupPtr group;
  std::optional<group::ClassFusion> fusion;
  std::optional<CharacterTable> table;
  std::optional<CharacterTable> sub_table;
  std::unique_ptr<mult::KronCube> cube;
  std::optional<mult::KronStats> stats;
  std::optional<mult::InducedMatrix> induced;
};

namespace {

// Splits "pair(P,S)" at its top-level comma.
std::optional<std::pair<std::string, std::string>> split_pair(const std::string& d) {
  if (d.rfind("pair(", 0) != 0 || d.back() != ')') return std::nullopt;
  std::string inner = d.substr(5, d.size() - 6);
  int depth = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == '(') ++depth;
    if (inner[i] == ')') --depth;
    if (inner[i] == ',' && depth == 0) return std::make_pair(inner.substr(0, i), inner.substr(i + 1));
  }
  throw Error("pair descriptor needs two arguments: " + d);
}

}  // namespace

Subject::Subject(std::string descriptor, const SuiteOptions& options)
    : descriptor_(group::normalize_descriptor(descriptor)), options_(options), cache_(std::make_unique<Cache>()) {
  if (auto parts = split_pair(descriptor_)) {
    auto parent = std::make_shared<const group::FiniteGroup>(group::family_group(parts->first, options_.element_cap));
    group::FiniteGroup sub = group::family_group(parts->second, options_.element_cap);
    if (sub.degree() > parent->degree()) {
      throw NotASubgroup(sub.name() + " acts on more points than " + parent->name());
    }
    cache_->embedding = group::embed(parent, sub.generators(), sub.name());
    cache_->group = parent;
  } else if (group::is_embedding_descriptor(descriptor_)) {
    cache_->embedding = group::family_embedding(descriptor_, options_.element_cap);
    cache_->group = cache_->embedding->parent;
  } else {
    cache_->group = std::make_shared<const group::FiniteGroup>(group::family_group(descriptor_, options_.element_cap));
  }
}

Subject::~Subject() = default;

bool Subject::is_pair() const { return cache_->embedding.has_value(); }
bool Subject::is_diagonal() const { return descriptor_.rfind("diag(", 0) == 0; }
bool Subject::is_factor() const { return descriptor_.rfind("factor(", 0) == 0; }

const group::FiniteGroup& Subject::group() { return *cache_->group; }

const CharacterTable& Subject::table() {
  if (!cache_->table) cache_->table = chartab::character_table(*cache_->group, options_.seed);
  return *cache_->table;
}

const mult::KronCube& Subject::cube() {
  if (!cache_->cube) cache_->cube = std::make_unique<mult::KronCube>(table(), options_.cube_cap);
  return *cache_->cube;
}

const mult::KronStats& Subject::stats() {
  if (!cache_->stats) cache_->stats = mult::kron_stats(table());
  return *cache_->stats;
}

const group::SubgroupEmbedding& Subject::embedding() {
  if (!cache_->embedding) throw MissingInput(descriptor_ + " is not a subgroup pair");
  return *cache_->embedding;
}

const group::ClassFusion& Subject::fusion() {
  if (!cache_->fusion) cache_->fusion = group::class_fusion(embedding());
  return *cache_->fusion;
}

const CharacterTable& Subject::sub_table() {
  if (!cache_->sub_table) cache_->sub_table = chartab::character_table(*embedding().sub, options_.seed);
  return *cache_->sub_table;
}

const mult::InducedMatrix& Subject::induced() {
  if (!cache_->induced) cache_->induced = mult::induced_matrix(table(), sub_table(), fusion());
  return *cache_->induced;
}

// ---------------------------------------------------------------------------
// Quantities

namespace {

std::string approx(const Real& x) {
  double d = x.get_d();
  double a = std::fabs(d);
  if (a == 0) return "0";
  if (a >= 1e-3 && a < 1e4) {
    std::ostringstream out;
    out << std::setprecision(4) << d;
    return out.str();
  }
  return sci(x, 3);
}

Real real(const Int& v) { return to_real(Rational(v)); }

/// x^(1/r) for x >= 0 by Newton iteration at kRealBits.
Real root(const Rational& x, unsigned long r) {
  if (r == 1) return to_real(x);
  if (r == 2) return sqrt_real(x);
  Real v = to_real(x);
  if (v == 0) return v;
  Real y(std::pow(v.get_d(), 1.0 / static_cast<double>(r)), kRealBits);
  for (int i = 0; i < 200; ++i) {
    Real p(1, kRealBits);
    for (unsigned long j = 1; j < r; ++j) p *= y;
    Real next = y - (p * y - v) / (static_cast<unsigned long>(r) * p);
    if (next == y) break;
    y = next;
  }
  return y;
}

Quantity integer(const Int& v) { return {mbx::to_string(v), approx(real(v))}; }

Quantity rational(const Rational& v) { return {mbx::to_string(v), approx(to_real(v))}; }

Quantity quantity(std::string exact, const Real& value) { return {std::move(exact), approx(value)}; }

std::string txt(const Int& v) { return mbx::to_string(v); }

Int degree_sum(const CharacterTable& t) {
  Int s = 0;
  for (const auto& d : t.degrees) s += d;
  return s;
}

Int k_of(const CharacterTable& t) { return Int(static_cast<unsigned long>(t.k())); }

CheckResult make(Verdict v) {
  CheckResult r;
  r.verdict = v;
  return r;
}

CheckResult inapplicable(std::string reason) {
  CheckResult r = make(Verdict::inapplicable);
  r.reason = std::move(reason);
  return r;
}

Verdict verdict(bool ok) { return ok ? Verdict::holds : Verdict::fails; }

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "rho=" + std::to_string(a) + " phi=" + std::to_string(b) + " psi=" + std::to_string(c);
}

bool cube_fits(Subject& s, std::size_t cap) { return s.table().k() <= cap; }

// ---------------------------------------------------------------------------
// Group checks

CheckResult burnside(Subject& s) {
  const auto& t = s.table();
  Int sum = 0;
  for (const auto& d : t.degrees) sum += d * d;
  CheckResult r = make(verdict(sum == t.order));
  r.lhs = integer(sum);
  r.rhs = integer(t.order);
  if (r.verdict == Verdict::fails) r.witness = "sum of squared degrees " + txt(sum);
  return r;
}

CheckResult dim_bounds(Subject& s) {
  const auto& t = s.table();
  Int n = t.order, b = t.max_degree(), k = k_of(t);
  bool lower = n <= b * b * k;
  bool upper = b * b <= n;
  CheckResult r = make(verdict(lower && upper));
  r.lhs = quantity("sqrt(" + mbx::to_string(ratio(n, k)) + ")", sqrt_real(ratio(n, k)));
  r.value = integer(b);
  r.rhs = quantity("sqrt(" + txt(n) + ")", sqrt_real(Rational(n)));
  if (!lower) r.witness = "b^2 k = " + txt(b * b * k) + " < |G| = " + txt(n);
  if (!upper) r.witness = "b^2 = " + txt(b * b) + " > |G| = " + txt(n);
  return r;
}

CheckResult hls_gap(Subject& s) {
  const auto& t = s.table();
  Int n = t.order, b = t.max_degree();
  if (b * b >= n) return inapplicable("precondition b < sqrt|G| fails: b = " + txt(b) + ", |G| = " + txt(n));
  // b <= sqrt(N) - N^(1/4)/2  <=>  4(N + b^2) >= (8b + 1) sqrt(N), both sides positive.
  Int lhs = n + b * b;
  lhs = 16 * lhs * lhs;
  Int rhs = (8 * b + 1) * (8 * b + 1) * n;
  CheckResult r = make(verdict(lhs >= rhs));
  r.value = integer(b);
  r.rhs = quantity("sqrt(" + txt(n) + ") - " + txt(n) + "^(1/4)/2", sqrt_real(Rational(n)) - root(Rational(n), 4) / 2);
  if (r.verdict == Verdict::fails) r.witness = "b = " + txt(b) + ", |G| = " + txt(n);
  return r;
}

CheckResult ks_cuberoot(Subject& s) {
  const auto& g = s.group();
  if (g.order() == 1 || group::is_abelian(g) || !group::is_simple(g)) {
    return inapplicable("precondition: G simple and non-abelian");
  }
  const auto& t = s.table();
  Int n = t.order, b = t.max_degree();
  CheckResult r = make(verdict(b * b * b >= n));
  r.lhs = quantity(txt(n) + "^(1/3)", root(Rational(n), 3));
  r.value = integer(b);
  if (r.verdict == Verdict::fails) r.witness = "b^3 = " + txt(b * b * b) + " < |G| = " + txt(n);
  return r;
}

CheckResult gr_center(Subject& s) {
  const auto& g = s.group();
  std::uint64_t z = group::center_order(g);
  if (z != 1) return inapplicable("precondition Z(G) = 1 fails: |Z(G)| = " + std::to_string(z));
  const auto& t = s.table();
  Int n = t.order, k = k_of(t);
  CheckResult r = make(verdict(k * k <= n));
  r.value = integer(k);
  r.rhs = quantity("sqrt(" + txt(n) + ")", sqrt_real(Rational(n)));
  if (r.verdict == Verdict::fails) r.witness = "k = " + txt(k) + ", |G| = " + txt(n);
  return r;
}

CheckResult sherman(Subject& s) {
  const auto& g = s.group();
  auto c = group::nilpotency_class(g);
  if (!c) return inapplicable("precondition: G nilpotent");
  if (*c == 0) return inapplicable("trivial group has nilpotency class 0");
  unsigned long rc = *c;
  const auto& t = s.table();
  Int n = t.order, k = k_of(t), r_int = Int(rc);
  // k >= r N^(1/r) - r + 1  <=>  (k + r - 1)^r >= r^r N.
  CheckResult r = make(verdict(pow(k + r_int - 1, rc) >= pow(r_int, rc) * n));
  r.lhs = quantity(std::to_string(rc) + "*" + txt(n) + "^(1/" + std::to_string(rc) + ") - " + std::to_string(rc - 1),
                   real(r_int) * root(Rational(n), rc) - real(r_int - 1));
  r.value = integer(k);
  r.reason = "nilpotency class " + std::to_string(rc);
  if (r.verdict == Verdict::fails) r.witness = "k = " + txt(k) + ", r = " + std::to_string(rc) + ", |G| = " + txt(n);
  return r;
}

CheckResult permgroup_k(Subject& s) {
  const auto& g = s.group();
  unsigned long n = g.degree();
  const auto& t = s.table();
  Int k = k_of(t);
  bool binary = k <= pow(Int(2), n - 1);
  bool quintic = n < 4 || k * k * k <= pow(Int(5), n - 1);
  CheckResult r = make(verdict(binary && quintic));
  r.value = integer(k);
  if (n >= 4) {
    r.rhs = quantity("5^(" + std::to_string(n - 1) + "/3)", root(Rational(pow(Int(5), n - 1)), 3));
  } else {
    r.rhs = integer(pow(Int(2), n - 1));
  }
  r.reason = "acting on " + std::to_string(n) + " points";
  if (!binary) r.witness = "k = " + txt(k) + " > 2^" + std::to_string(n - 1);
  if (binary && !quintic) r.witness = "k^3 = " + txt(k * k * k) + " > 5^" + std::to_string(n - 1);
  return r;
}

CheckResult fg_classcount(Subject& s) {
  const auto& f = s.group().family();
  const auto& t = s.table();
  Int k = k_of(t);
  if (f.kind == FamilyKind::sl2) {
    Int p = f.q;
    CheckResult r = make(verdict(p <= k && 5 * k <= 136 * p));
    r.lhs = integer(p);
    r.value = integer(k);
    r.rhs = rational(ratio(136 * p, 5));
    r.reason = "rank 1, q = " + txt(p);
    if (r.verdict == Verdict::fails) r.witness = "k = " + txt(k) + ", q = " + txt(p);
    return r;
  }
  if (f.kind == FamilyKind::general_linear) {
    Int hi = pow(Int(f.q), f.n);
    Int lo = hi - pow(Int(f.q), f.n - 1);
    CheckResult r = make(verdict(lo <= k && k <= hi));
    r.lhs = integer(lo);
    r.value = integer(k);
    r.rhs = integer(hi);
    if (r.verdict == Verdict::fails) r.witness = "k = " + txt(k) + ", n = " + std::to_string(f.n) + ", q = " + std::to_string(f.q);
    return r;
  }
  return inapplicable("only SL2(p) and GL_n(q) carry class-count bounds");
}

CheckResult sl2_formulas(Subject& s) {
  const auto& f = s.group().family();
  if (f.kind != FamilyKind::sl2) return inapplicable("not an SL2(p)");
  const auto& t = s.table();
  Int p = f.q;
  Int n = t.order, k = k_of(t), b = t.max_degree();
  bool order_ok = n == p * p * p - p;
  bool k_ok = k == p + 4;
  bool b_ok = b == p + 1;
  CheckResult r = make(verdict(order_ok && k_ok && b_ok));
  r.lhs = Quantity{"|G|=" + txt(n) + " k=" + txt(k) + " b=" + txt(b), ""};
  r.rhs = Quantity{"|G|=" + txt(p * p * p - p) + " k=" + txt(p + 4) + " b=" + txt(p + 1), ""};
  std::vector<std::string> bad;
  if (!order_ok) bad.push_back("|G| = " + txt(n));
  if (!k_ok) bad.push_back("k = " + txt(k));
  if (!b_ok) bad.push_back("b = " + txt(b));
  for (std::size_t i = 0; i < bad.size(); ++i) r.witness += (i ? ", " : "") + bad[i];
  if (!r.witness.empty()) r.witness = "p = " + txt(p) + ": " + r.witness;
  return r;
}

CheckResult unitriangular_b(Subject& s) {
  const auto& f = s.group().family();
  if (f.kind != FamilyKind::unitriangular) return inapplicable("not a unitriangular group");
  unsigned long mu = (static_cast<unsigned long>(f.n) - 1) * (f.n - 1) / 4;
  Int expected = pow(Int(f.q), mu);
  Int b = s.table().max_degree();
  CheckResult r = make(verdict(b == expected));
  r.value = integer(b);
  r.rhs = integer(expected);
  r.reason = "mu(" + std::to_string(f.n) + ") = " + std::to_string(mu);
  if (r.verdict == Verdict::fails) r.witness = "b = " + txt(b);
  return r;
}

CheckResult glnq_order(Subject& s) {
  const auto& f = s.group().family();
  if (f.kind != FamilyKind::general_linear) return inapplicable("not a GL_n(q)");
  Int q = f.q;
  unsigned long n2 = static_cast<unsigned long>(f.n) * f.n;
  Int n = s.group().order();
  Int hi = pow(q, n2);
  Rational lo = Rational(q * q - q - 1) * ratio(pow(q, n2), q * q);
  bool ok = lo <= Rational(n) && n <= hi;
  CheckResult r = make(verdict(ok));
  r.lhs = rational(lo);
  r.value = integer(n);
  r.rhs = integer(hi);
  if (!ok) r.witness = "|G| = " + txt(n);
  return r;
}

CheckResult mckay_sn(Subject& s) {
  const auto& g = s.group();
  if (g.family().kind != FamilyKind::symmetric) return inapplicable("not a symmetric group");
  Int sum = degree_sum(s.table());
  Int inv = Int(static_cast<unsigned long>(group::involution_count(g)));
  CheckResult r = make(verdict(sum == inv));
  r.lhs = integer(sum);
  r.rhs = integer(inv);
  if (r.verdict == Verdict::fails) r.witness = "sum of degrees " + txt(sum) + ", involutions " + txt(inv);
  return r;
}

CheckResult lemma7_2(Subject& s) {
  const auto& t = s.table();
  Int a = s.stats().sum_squares;
  Int z = mult::A_from_centralizers(t.centralizers);
  CheckResult r = make(verdict(a == z));
  r.lhs = integer(a);
  r.rhs = integer(z);
  if (r.verdict == Verdict::fails) r.witness = "sum g^2 = " + txt(a) + ", sum z = " + txt(z);
  return r;
}

CheckResult thm1_1(Subject& s) {
  const auto& t = s.table();
  const auto& m = s.stats().max;
  Int n = t.order, b = t.max_degree(), k = k_of(t), kk = m.value;
  bool lower = b * b * b * b <= kk * kk * k * n;
  bool upper = kk <= b;
  CheckResult r = make(verdict(lower && upper));
  Rational sq = ratio(b * b * b * b, k * n);
  r.lhs = quantity("sqrt(" + mbx::to_string(sq) + ")", sqrt_real(sq));
  r.value = integer(kk);
  r.rhs = integer(b);
  r.witness = triple(m.argmax[0], m.argmax[1], m.argmax[2]);
  return r;
}

CheckResult prop7_4(Subject& s) {
  const auto& t = s.table();
  const auto& m = s.stats().max;
  Int n = t.order, b = t.max_degree(), k = k_of(t), kk = m.value;
  bool lower = n <= kk * kk * k * k * k;
  bool upper = kk <= b;
  CheckResult r = make(verdict(lower && upper));
  Rational sq = ratio(n, k * k * k);
  r.lhs = quantity("sqrt(" + mbx::to_string(sq) + ")", sqrt_real(sq));
  r.value = integer(kk);
  r.rhs = integer(b);
  r.witness = triple(m.argmax[0], m.argmax[1], m.argmax[2]);
  return r;
}

CheckResult prop7_6(Subject& s, std::size_t cap) {
  if (!cube_fits(s, cap)) return inapplicable("k exceeds the cube cap");
  const auto& t = s.table();
  const auto& c = s.cube();
  std::size_t k = t.k();
  Int n = t.order, kk = k_of(t);
  // Tightest pair: least ratio R^2 k N / (rho(1)^2 phi(1)^2).
  std::optional<Rational> best;
  std::string best_witness;
  Int best_r;
  std::string failure;
  for (std::size_t rho = 0; rho < k && failure.empty(); ++rho) {
    for (std::size_t phi = 0; phi < k; ++phi) {
      std::uint64_t rmax = 0;
      std::size_t arg = 0;
      for (std::size_t psi = 0; psi < k; ++psi) {
        if (c(rho, phi, psi) > rmax) rmax = c(rho, phi, psi), arg = psi;
      }
      Int r = Int(static_cast<unsigned long>(rmax));
      const Int& d1 = t.degrees[rho];
      const Int& d2 = t.degrees[phi];
      Int prod = d1 * d1 * d2 * d2;
      if (prod > r * r * kk * n || r > std::min(d1, d2)) {
        failure = "rho=" + std::to_string(rho) + " phi=" + std::to_string(phi) + " max=" + txt(r);
        break;
      }
      Rational slack = ratio(r * r * kk * n, prod);
      if (!best || slack < *best) {
        best = slack;
        best_r = r;
        best_witness = triple(rho, phi, arg);
      }
    }
  }
  CheckResult r = make(verdict(failure.empty()));
  r.witness = failure.empty() ? best_witness : failure;
  if (failure.empty()) {
    r.value = integer(best_r);
    r.reason = "tightest lower bound shown";
  }
  return r;
}

CheckResult thm1_2(Subject& s, std::size_t cap) {
  if (!cube_fits(s, cap)) return inapplicable("k exceeds the cube cap");
  const auto& t = s.table();
  const auto& c = s.cube();
  std::size_t k = t.k();
  Int b = t.max_degree(), kk = k_of(t);
  // Per (phi, psi) with a = b/min(phi(1), psi(1)): need rho with
  // rho(1)^2 k >= m^2 and g b k >= m^2. Report the pair whose best rho is tightest.
  std::optional<Rational> worst;
  std::string witness;
  Int witness_g;
  for (std::size_t phi = 0; phi < k; ++phi) {
    for (std::size_t psi = phi; psi < k; ++psi) {
      Int m = std::min(t.degrees[phi], t.degrees[psi]);
      Int m2 = m * m;
      std::optional<Rational> best;
      std::size_t best_rho = 0;
      for (std::size_t rho = 0; rho < k; ++rho) {
        Int g = Int(static_cast<unsigned long>(c(rho, phi, psi)));
        const Int& d = t.degrees[rho];
        if (d * d * kk < m2 || g * b * kk < m2) continue;
        Rational slack = ratio(g * b * kk, m2);
        if (!best || slack > *best) best = slack, best_rho = rho;
      }
      if (!best) {
        CheckResult r = make(Verdict::fails);
        r.witness = "phi=" + std::to_string(phi) + " psi=" + std::to_string(psi) + " a=" + mbx::to_string(ratio(b, m)) +
                    ": no rho";
        return r;
      }
      if (!worst || *best < *worst) {
        worst = best;
        witness = triple(best_rho, phi, psi) + " a=" + mbx::to_string(ratio(b, m));
        witness_g = Int(static_cast<unsigned long>(c(best_rho, phi, psi)));
      }
    }
  }
  CheckResult r = make(Verdict::holds);
  r.value = integer(witness_g);
  r.witness = witness;
  r.reason = "tightest pair and its witnessing rho shown";
  return r;
}

CheckResult prop7_1(Subject& s, std::size_t cap) {
  if (!cube_fits(s, cap)) return inapplicable("k exceeds the cube cap");
  const auto& t = s.table();
  const auto& c = s.cube();
  std::size_t k = t.k();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t d = 0; d < k; ++d) {
        Int g = Int(static_cast<unsigned long>(c(a, b, d)));
        if (g > std::min({t.degrees[a], t.degrees[b], t.degrees[d]})) {
          CheckResult r = make(Verdict::fails);
          r.value = integer(g);
          r.witness = triple(a, b, d);
          return r;
        }
      }
    }
  }
  CheckResult r = make(Verdict::holds);
  r.reason = "all " + std::to_string(k * k * k) + " triples";
  return r;
}

CheckResult kron_upper(Subject& s, std::size_t cap) {
  if (!cube_fits(s, cap)) return inapplicable("k exceeds the cube cap");
  const auto& t = s.table();
  const auto& c = s.cube();
  std::size_t k = t.k();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t d = 0; d < k; ++d) {
        Int g = Int(static_cast<unsigned long>(c(a, b, d)));
        const Int& x = t.degrees[b];
        const Int& y = t.degrees[d];
        if (g * std::max(x, y) > t.degrees[a] * std::min(x, y)) {
          CheckResult r = make(Verdict::fails);
          r.value = integer(g);
          r.witness = triple(a, b, d);
          return r;
        }
      }
    }
  }
  CheckResult r = make(Verdict::holds);
  r.reason = "all " + std::to_string(k * k * k) + " triples";
  return r;
}

CheckResult kron_sym(Subject& s, std::size_t cap) {
  if (!cube_fits(s, cap)) return inapplicable("k exceeds the cube cap");
  const auto& t = s.table();
  const auto& c = s.cube();
  std::size_t k = t.k();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t d = 0; d < k; ++d) {
        if (!c.symmetric_at(t, a, b, d)) {
          CheckResult r = make(Verdict::fails);
          r.witness = triple(a, b, d);
          return r;
        }
      }
    }
  }
  CheckResult r = make(Verdict::holds);
  r.reason = "all " + std::to_string(k * k * k) + " triples";
  return r;
}

// ---------------------------------------------------------------------------
// Pair checks

struct PairData {
  const CharacterTable& g;
  const CharacterTable& h;
  const mult::InducedMatrix& m;
  Int index;
  Int kg;
  Int kh;
};

PairData pair_data(Subject& s) {
  const auto& m = s.induced();
  return {s.table(), s.sub_table(), m, m.index, k_of(s.table()), k_of(s.sub_table())};
}

std::string rho_pi(std::size_t rho, std::size_t pi) {
  return "rho=" + std::to_string(rho) + " pi=" + std::to_string(pi);
}

CheckResult lemma8_2(Subject& s) {
  Int lhs = mult::induced_sum_squares(s.induced());
  Rational rhs = mult::LR_rhs(s.fusion());
  CheckResult r = make(verdict(Rational(lhs) == rhs));
  r.lhs = integer(lhs);
  r.rhs = rational(rhs);
  if (r.verdict == Verdict::fails) r.witness = "sum c^2 = " + txt(lhs) + ", sum z_G/z_H = " + mbx::to_string(rhs);
  return r;
}

CheckResult thm1_3(Subject& s) {
  auto p = pair_data(s);
  auto mx = mult::induced_max(p.m);
  Int c2 = mx.value * mx.value;
  bool lower = p.index <= c2 * p.kh * p.kg;
  bool upper = c2 <= p.index;
  CheckResult r = make(verdict(lower && upper));
  Rational sq = ratio(p.index, p.kh * p.kg);
  r.lhs = quantity("sqrt(" + mbx::to_string(sq) + ")", sqrt_real(sq));
  r.value = integer(mx.value);
  r.rhs = quantity("sqrt(" + txt(p.index) + ")", sqrt_real(Rational(p.index)));
  r.witness = rho_pi(mx.rho, mx.pi);
  return r;
}

CheckResult thm1_4(Subject& s) {
  auto p = pair_data(s);
  const Int& n = p.g.order;
  const Int& hn = p.h.order;
  Int kh2 = p.kh * p.kh;
  // For each rho take a = sqrt|G|/rho(1); need pi with
  // pi(1)^2 |G| kH^2 >= |H| rho(1)^2 and c^2 |H| kH^2 >= rho(1)^2.
  std::optional<Rational> worst;
  std::string witness;
  Int witness_c;
  for (std::size_t rho = 0; rho < p.g.k(); ++rho) {
    Int d2 = p.g.degrees[rho] * p.g.degrees[rho];
    std::optional<Rational> best;
    std::size_t best_pi = 0;
    for (std::size_t pi = 0; pi < p.h.k(); ++pi) {
      const Int& c = p.m.entries[rho][pi];
      const Int& e = p.h.degrees[pi];
      if (e * e * n * kh2 < hn * d2 || c * c * hn * kh2 < d2) continue;
      Rational slack = ratio(c * c * hn * kh2, d2);
      if (!best || slack > *best) best = slack, best_pi = pi;
    }
    if (!best) {
      CheckResult r = make(Verdict::fails);
      r.witness = "rho=" + std::to_string(rho) + ": no pi";
      return r;
    }
    if (!worst || *best < *worst) {
      worst = best;
      witness = rho_pi(rho, best_pi);
      witness_c = p.m.entries[rho][best_pi];
    }
  }
  CheckResult r = make(Verdict::holds);
  r.value = integer(witness_c);
  r.witness = witness;
  r.reason = "tightest rho and its witnessing pi shown";
  return r;
}

CheckResult lemma8_4(Subject& s) {
  auto p = pair_data(s);
  Int worst = 0;
  std::string witness;
  for (std::size_t rho = 0; rho < p.g.k(); ++rho) {
    Int sum = 0;
    for (const auto& c : p.m.entries[rho]) sum += c * c;
    if (sum > worst) worst = sum, witness = "row rho=" + std::to_string(rho);
  }
  for (std::size_t pi = 0; pi < p.h.k(); ++pi) {
    Int sum = 0;
    for (std::size_t rho = 0; rho < p.g.k(); ++rho) sum += p.m.entries[rho][pi] * p.m.entries[rho][pi];
    if (sum > worst) worst = sum, witness = "column pi=" + std::to_string(pi);
  }
  CheckResult r = make(verdict(worst <= p.index));
  r.value = integer(worst);
  r.rhs = integer(p.index);
  r.witness = witness;
  return r;
}

CheckResult cor8_3(Subject& s) {
  auto p = pair_data(s);
  Int sum = mult::induced_sum_squares(p.m);
  CheckResult r = make(verdict(p.index <= sum));
  r.lhs = integer(p.index);
  r.value = integer(sum);
  if (r.verdict == Verdict::fails) r.witness = "sum c^2 = " + txt(sum);
  return r;
}

CheckResult cor8_5(Subject& s) {
  auto p = pair_data(s);
  Int sum = mult::induced_sum_squares(p.m);
  Int hi = p.index * std::min(p.kg, p.kh);
  CheckResult r = make(verdict(p.index <= sum && sum <= hi));
  r.lhs = integer(p.index);
  r.value = integer(sum);
  r.rhs = integer(hi);
  if (r.verdict == Verdict::fails) r.witness = "sum c^2 = " + txt(sum);
  return r;
}

CheckResult gallagher(Subject& s) {
  auto& e = s.embedding();
  Int index = Int(static_cast<unsigned long>(e.index()));
  Int kg = Int(static_cast<unsigned long>(e.parent->class_count()));
  Int kh = Int(static_cast<unsigned long>(e.sub->class_count()));
  CheckResult r = make(verdict(kh <= kg * index && kg <= kh * index));
  r.lhs = rational(ratio(kh, index));
  r.value = integer(kg);
  r.rhs = integer(kh * index);
  if (r.verdict == Verdict::fails) r.witness = "k(G) = " + txt(kg) + ", k(H) = " + txt(kh) + ", index " + txt(index);
  return r;
}

CheckResult remark1_5_diag(Subject& s) {
  if (!s.is_diagonal()) return inapplicable("not a diagonal embedding");
  Int c = mult::induced_max(s.induced()).value;
  auto km = mult::kron_max(s.sub_table());
  CheckResult r = make(verdict(c == km.value));
  r.lhs = integer(c);
  r.rhs = integer(km.value);
  r.witness = triple(km.argmax[0], km.argmax[1], km.argmax[2]);
  return r;
}

CheckResult remark1_5_factor(Subject& s) {
  if (!s.is_factor()) return inapplicable("not a factor embedding");
  auto mx = mult::induced_max(s.induced());
  Int b = s.sub_table().max_degree();
  CheckResult r = make(verdict(mx.value == b));
  r.lhs = integer(mx.value);
  r.rhs = integer(b);
  r.witness = rho_pi(mx.rho, mx.pi);
  return r;
}

CheckResult spec9_5(Subject& s) {
  auto mx = mult::induced_max(s.induced());
  Int bg = s.table().max_degree();
  Int bh = s.sub_table().max_degree();
  CheckResult r = make(verdict(mx.value * mx.value * bh <= bg));
  r.observation = true;
  r.value = integer(mx.value);
  Rational q = ratio(bg, bh);
  r.rhs = quantity("sqrt(" + mbx::to_string(q) + ")", sqrt_real(q));
  r.witness = rho_pi(mx.rho, mx.pi);
  return r;
}

// ---------------------------------------------------------------------------
// Registry

struct Entry {
  std::string name;
  bool pair;
  std::string relation;
  std::string reference;
  std::function<CheckResult(Subject&, std::size_t)> run;
};

template <class F>
std::function<CheckResult(Subject&, std::size_t)> plain(F f) {
  return [f](Subject& s, std::size_t) { return f(s); };
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"burnside", false, "sum rho(1)^2 = |G|", "sum over Irr(G) of rho(1)^2 equals |G|", plain(burnside)},
      {"dim_bounds", false, "sqrt(|G|/k) <= b <= sqrt(|G|)", "sqrt(|G|/k(G)) <= b(G) <= sqrt(|G|)", plain(dim_bounds)},
      {"hls_gap", false, "b <= sqrt|G| - |G|^(1/4)/2", "b(G) < sqrt|G| implies b(G) <= sqrt|G| - |G|^(1/4)/2",
       plain(hls_gap)},
      {"ks_cuberoot", false, "|G|^(1/3) <= b", "G simple implies b(G) >= |G|^(1/3)", plain(ks_cuberoot)},
      {"gr_center", false, "k <= sqrt|G|", "Z(G) = 1 implies k(G) <= sqrt|G|", plain(gr_center)},
      {"sherman", false, "r|G|^(1/r) - r + 1 <= k", "G nilpotent of class r implies k(G) >= r|G|^(1/r) - r + 1",
       plain(sherman)},
      {"permgroup_k", false, "k <= 2^(n-1), and k <= 5^((n-1)/3) for n >= 4",
       "G <= S_n implies k(G) <= 2^(n-1), and k(G) <= 5^((n-1)/3) for n >= 4", plain(permgroup_k)},
      {"fg_classcount", false, "q^r <= k <= 27.2 q^r (SL2); q^n - q^(n-1) <= k <= q^n (GL_n)",
       "q^r <= k(G) <= 27.2 q^r for groups of Lie type of rank r", plain(fg_classcount)},
      {"sl2_formulas", false, "|G| = p^3 - p, k = p + 4, b = p + 1", "SL2(p): |G| = p^3 - p, k = p + 4, b = p + 1",
       plain(sl2_formulas)},
      {"unitriangular_b", false, "b = q^floor((n-1)^2/4)", "b(U_n(q)) = q^mu(n), mu(n) = floor((n-1)^2/4)",
       plain(unitriangular_b)},
      {"glnq_order", false, "(1 - 1/q - 1/q^2) q^(n^2) <= |G| <= q^(n^2)",
       "(1 - 1/q - 1/q^2) q^(n^2) <= |GL_n(q)| <= q^(n^2)", plain(glnq_order)},
      {"mckay_sn", false, "sum rho(1) = #{x : x^2 = 1}", "f(S_n) equals the number of involutions in S_n",
       plain(mckay_sn)},
      {"lemma7_2", false, "sum g^2 = sum z_alpha", "A(G) = sum over classes of z_alpha", plain(lemma7_2)},
      {"thm1_1", false, "b^2/sqrt(k|G|) <= K <= b", "b(G)^2/(k(G)|G|)^(1/2) <= K(G) <= b(G)", plain(thm1_1)},
      {"prop7_4", false, "sqrt|G|/k^(3/2) <= K <= b", "|G|^(1/2)/k(G)^(3/2) <= K(G) <= b(G)", plain(prop7_4)},
      {"prop7_6", false, "rho(1)phi(1)/sqrt(k|G|) <= max_psi g <= min(rho(1), phi(1))",
       "rho(1)phi(1)/(k(G)|G|)^(1/2) <= K(G; rho, phi) <= min(rho(1), phi(1))", prop7_6},
      {"thm1_2", false, "exists rho: rho(1) >= b/(a sqrt k), g >= b/(a^2 k)",
       "phi(1), psi(1) >= b(G)/a implies some rho has rho(1) >= b/(a k^(1/2)) and g(rho,phi,psi) >= b/(a^2 k)",
       thm1_2},
      {"prop7_1", false, "g <= min(rho(1), phi(1), psi(1))",
       "g(rho,phi,psi) >= b/a implies rho(1), phi(1), psi(1) >= b/a", prop7_1},
      {"kron_upper", false, "g <= rho(1) min(phi(1)/psi(1), psi(1)/phi(1))",
       "g(rho,phi,psi) <= rho(1) min(phi(1)/psi(1), psi(1)/phi(1)) <= rho(1)", kron_upper},
      {"kron_sym", false, "g invariant under the symmetries of <conj(rho) phi psi, 1>",
       "g(rho,phi,psi) = g(conj(phi),conj(rho),psi) = g(conj(phi),psi,conj(rho)) = ...", kron_sym},
      {"lemma8_2", true, "sum c^2 = sum z_alpha(G)/z_alpha(H)",
       "sum over rho, pi of c(rho,pi)^2 = sum over Conj(H) of z_alpha(G)/z_alpha(H)", plain(lemma8_2)},
      {"thm1_3", true, "sqrt[G:H]/sqrt(k(H)k(G)) <= C <= sqrt[G:H]",
       "[G:H]^(1/2)/(k(H)k(G))^(1/2) <= C(G,H) <= [G:H]^(1/2)", plain(thm1_3)},
      {"thm1_4", true, "exists pi: pi(1) >= sqrt|H|/(a k(H)), c >= sqrt[G:H]/(a k(H))",
       "rho(1) >= |G|^(1/2)/a implies some pi has pi(1) >= |H|^(1/2)/(a k(H)) and c(rho,pi) >= [G:H]^(1/2)/(a k(H))",
       plain(thm1_4)},
      {"lemma8_4", true, "every row and column sum of c^2 <= [G:H]",
       "sum over rho of c(rho,pi)^2 <= [G:H] and sum over pi of c(rho,pi)^2 <= [G:H]", plain(lemma8_4)},
      {"cor8_3", true, "[G:H] <= sum c^2", "sum over rho, pi of c(rho,pi)^2 >= [G:H]", plain(cor8_3)},
      {"cor8_5", true, "[G:H] <= sum c^2 <= [G:H] min(k(G), k(H))",
       "[G:H] <= sum over rho, pi of c(rho,pi)^2 <= [G:H] min(k(G), k(H))", plain(cor8_5)},
      {"gallagher", true, "k(H)/[G:H] <= k(G) <= k(H)[G:H]", "k(H)/[G:H] <= k(G) <= k(H)[G:H]", plain(gallagher)},
      {"remark1_5_diag", true, "C(HxH, diag H) = K(H)", "C(H x H, H) = K(H) for the diagonal subgroup",
       plain(remark1_5_diag)},
      {"remark1_5_factor", true, "C(HxH, Hx1) = b(H)", "C(H x H, H x 1) = b(H)", plain(remark1_5_factor)},
      {"spec9_5", true, "C(G,H) <= sqrt(b(G)/b(H))", "C(G,H) <= (b(G)/b(H))^(1/2), an open speculation",
       plain(spec9_5)},
  };
  return entries;
}

const Entry* find_entry(std::string_view name) {
  for (const auto& e : registry()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

bool is_check(std::string_view name) { return find_entry(name) != nullptr; }

bool is_pair_check(std::string_view name) {
  const Entry* e = find_entry(name);
  return e && e->pair;
}

CheckResult run_check(std::string_view name, Subject& subject) {
  const Entry* e = find_entry(name);
  if (!e) throw MissingInput("unknown check: " + std::string(name));
  if (e->pair && !subject.is_pair()) throw MissingInput(e->name + " needs a subgroup pair, got " + subject.descriptor());
  if (!e->pair && subject.is_pair()) throw MissingInput(e->name + " needs a group, got " + subject.descriptor());
  CheckResult r = e->run(subject, subject.options().cube_cap);
  r.check = e->name;
  r.target = subject.descriptor();
  r.relation = e->relation;
  r.reference = e->reference;
  if (name == "spec9_5") r.observation = true;
  return r;
}

}  // namespace mbx::verify
