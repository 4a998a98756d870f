#include "mbx/character_table.hpp"

#include <algorithm>
#include <numeric>

#include "mbx/error.hpp"

namespace mbx::chartab {

namespace {

std::uint64_t lcm_conductor(std::span<const Cyclotomic> values) {
  std::uint64_t n = 1;
  for (const auto& v : values) n = std::lcm(n, v.conductor());
  return n;
}

/// Conductor bound below which sums are accumulated in one raw vector.
constexpr std::uint64_t kRawConductorLimit = 1u << 20;

}  // namespace

Int CharacterTable::max_degree() const {
  Int b = 0;
  for (const Int& d : degrees) b = std::max(b, d);
  return b;
}

std::uint64_t CharacterTable::conductor() const {
  std::uint64_t n = 1;
  for (std::size_t r = 0; r < values.size(); ++r) n = std::lcm(n, row_conductor(r));
  return n;
}

std::uint64_t CharacterTable::row_conductor(std::size_t row) const { return lcm_conductor(values[row]); }

Rational inner_product(const CharacterTable& t, std::span<const Cyclotomic> f, std::span<const Cyclotomic> g) {
  std::uint64_t n = std::lcm(lcm_conductor(f), lcm_conductor(g));
  Rational out;
  if (n <= kRawConductorLimit) {
    CyclotomicSum sum(n);
    for (std::size_t a = 0; a < t.k(); ++a) sum.add_product(t.class_sizes[a], {{&f[a], false}, {&g[a], true}});
    Cyclotomic v = sum.value();
    if (!v.is_rational()) throw IntegralityDefect("inner product " + v.to_string() + " is not rational");
    out = ratio(v.rational(), t.order);
  } else {
    for (std::size_t a = 0; a < t.k(); ++a) {
      out += Rational(t.class_sizes[a]) * (f[a] * g[a].conj()).normalized_trace();
    }
    out /= Rational(t.order);
  }
  out.canonicalize();
  return out;
}

Rational inner_product(const CharacterTable& t, std::size_t row_i, std::size_t row_j) {
  return inner_product(t, t.values[row_i], t.values[row_j]);
}

std::size_t conjugate_irrep(const CharacterTable& t, std::size_t row) { return t.conj_perm.at(row); }

std::vector<Cyclotomic> restrict(const CharacterTable& parent, const group::ClassFusion& fusion, std::size_t row) {
  const auto& g = *fusion.embedding.parent;
  bool same = Int(static_cast<unsigned long>(g.order())) == parent.order && g.class_count() == parent.k();
  for (std::size_t a = 0; same && a < parent.k(); ++a) {
    same = Int(static_cast<unsigned long>(g.classes()[a].centralizer_order)) == parent.centralizers[a];
  }
  if (!same) throw FusionMismatch("fusion parent " + g.name() + " does not match table " + parent.name);
  std::vector<Cyclotomic> out;
  out.reserve(fusion.fusion.size());
  for (std::uint32_t cls : fusion.fusion) out.push_back(parent.values.at(row)[cls]);
  return out;
}

void complete(CharacterTable& t) {
  std::size_t k = t.k();
  t.class_sizes.resize(k);
  for (std::size_t a = 0; a < k; ++a) {
    if (t.centralizers[a] <= 0 || t.order % t.centralizers[a] != 0) {
      throw ConsistencyError("centralizer order " + t.centralizers[a].get_str() + " does not divide |G|");
    }
    t.class_sizes[a] = t.order / t.centralizers[a];
  }
  if (t.values.empty()) return;
  t.degrees.resize(t.values.size());
  for (std::size_t r = 0; r < t.values.size(); ++r) t.degrees[r] = t.values[r][0].rational();
  t.conj_perm.assign(t.values.size(), 0);
  std::vector<std::vector<Cyclotomic>> conj_rows(t.values.size());
  for (std::size_t r = 0; r < t.values.size(); ++r) {
    conj_rows[r].reserve(k);
    for (const auto& v : t.values[r]) conj_rows[r].push_back(v.conj());
  }
  for (std::size_t r = 0; r < t.values.size(); ++r) {
    auto it = std::find(t.values.begin(), t.values.end(), conj_rows[r]);
    if (it == t.values.end()) throw ConsistencyError("row " + std::to_string(r) + " has no conjugate row");
    t.conj_perm[r] = static_cast<std::uint32_t>(it - t.values.begin());
  }
}

bool row_less(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] == b[i]) continue;
    if (a[i].conductor() != b[i].conductor()) return a[i].conductor() < b[i].conductor();
    const auto& ca = a[i].coefficients();
    const auto& cb = b[i].coefficients();
    for (std::size_t j = 0; j < ca.size(); ++j) {
      if (ca[j] != cb[j]) return ca[j] > cb[j];
    }
  }
  return a.size() < b.size();
}

void canonical_row_order(CharacterTable& t) {
  std::sort(t.values.begin(), t.values.end(), [](const auto& a, const auto& b) {
    const Int& da = a[0].rational();
    const Int& db = b[0].rational();
    if (da != db) return da < db;
    return row_less(a, b);
  });
  complete(t);
}

void validate(const CharacterTable& t) {
  std::size_t k = t.k();
  if (t.values.size() != k) throw ConsistencyError("table has " + std::to_string(t.values.size()) + " rows for " + std::to_string(k) + " classes");
  Int burnside = 0;
  for (const Int& d : t.degrees) burnside += d * d;
  if (burnside != t.order) throw ConsistencyError("sum of squared degrees " + burnside.get_str() + " != |G| = " + t.order.get_str());
  Int class_total = 0;
  for (const Int& s : t.class_sizes) class_total += s;
  if (class_total != t.order) throw ConsistencyError("class sizes sum to " + class_total.get_str());

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      Rational ip = inner_product(t, i, j);
      if (ip != (i == j ? 1 : 0)) {
        throw ConsistencyError("<chi_" + std::to_string(i) + ", chi_" + std::to_string(j) + "> = " + to_string(ip));
      }
    }
  }
  // Columns: sum_rho rho(a) conj(rho(b)) = delta_ab z_a.
  std::vector<std::vector<Cyclotomic>> columns(k, std::vector<Cyclotomic>(k));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t a = 0; a < k; ++a) columns[a][r] = t.values[r][a];
  }
  std::vector<std::uint64_t> col_cond(k);
  for (std::size_t a = 0; a < k; ++a) col_cond[a] = lcm_conductor(columns[a]);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      std::uint64_t n = std::lcm(col_cond[a], col_cond[b]);
      Rational s;
      if (n <= kRawConductorLimit) {
        CyclotomicSum sum(n);
        for (std::size_t r = 0; r < k; ++r) sum.add_product(Int(1), {{&columns[a][r], false}, {&columns[b][r], true}});
        Cyclotomic v = sum.value();
        if (!v.is_rational()) throw ConsistencyError("column product is irrational");
        s = v.rational();
      } else {
        for (std::size_t r = 0; r < k; ++r) s += (columns[a][r] * columns[b][r].conj()).normalized_trace();
      }
      Rational want = a == b ? Rational(t.centralizers[a]) : Rational(0);
      if (s != want) {
        throw ConsistencyError("column orthogonality fails at classes " + std::to_string(a) + ", " + std::to_string(b));
      }
    }
  }
  for (std::size_t r = 0; r < k; ++r) {
    std::uint32_t c = t.conj_perm[r];
    if (c >= k || t.conj_perm[c] != r) throw ConsistencyError("conjugation map is not an involution");
  }
}

}  // namespace mbx::chartab
