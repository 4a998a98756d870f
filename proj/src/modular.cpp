#include "mbx/modular.hpp"

#include <algorithm>

#include "mbx/error.hpp"

namespace mbx::modular {

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) {
  if (a % p == 0) throw Error("inverse of zero modulo " + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

u64 primitive_root(u64 p) {
  if (p == 2) return 1;
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    factors.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

Montgomery::Montgomery(u64 p) : p_(p) {
  if ((p & 1) == 0) throw Error("Montgomery modulus must be odd");
  u64 inv = p;
  for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
  inv_ = 0 - inv;
  u64 r = static_cast<u64>((static_cast<u128>(1) << 64) % p);
  r2_ = mul_mod(r, r, p);
}

std::vector<std::size_t> rref(Matrix& m, u64 p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    u64 inv = inv_mod(m[row][col], p);
    for (u64& v : m[row]) v = mul_mod(v, inv, p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      u64 f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (m[row][c] != 0) m[r][c] = sub_mod(m[r][c], mul_mod(f, m[row][c], p), p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

Matrix nullspace(const Matrix& a, u64 p) {
  if (a.empty()) return {};
  std::size_t cols = a[0].size();
  Matrix m = a;
  std::vector<std::size_t> pivots = rref(m, p);
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - m[r][free]) % p;
    basis.push_back(std::move(v));
  }
  rref(basis, p);
  return basis;
}

std::vector<u64> charpoly(Matrix a, u64 p) {
  std::size_t n = a.size();
  // Similarity transform to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && a[i][j] == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      std::swap(a[i], a[j + 1]);
      for (auto& row : a) std::swap(row[i], row[j + 1]);
    }
    u64 inv = inv_mod(a[j + 1][j], p);
    for (std::size_t r = j + 2; r < n; ++r) {
      u64 u = mul_mod(a[r][j], inv, p);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) a[r][c] = sub_mod(a[r][c], mul_mod(u, a[j + 1][c], p), p);
      for (std::size_t c = 0; c < n; ++c) a[c][j + 1] = add_mod(a[c][j + 1], mul_mod(u, a[c][r], p), p);
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod of subdiagonal) p_{m-i-1}
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<u64> next(m + 1, 0);
    const auto& prev = polys[m - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = add_mod(next[d + 1], prev[d], p);
      next[d] = sub_mod(next[d], mul_mod(a[m - 1][m - 1], prev[d], p), p);
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = mul_mod(t, a[m - i][m - i - 1], p);
      if (t == 0) break;
      u64 coef = mul_mod(t, a[m - 1 - i][m - 1], p);
      if (coef == 0) continue;
      const auto& older = polys[m - 1 - i];
      for (std::size_t d = 0; d < older.size(); ++d) next[d] = sub_mod(next[d], mul_mod(coef, older[d], p), p);
    }
    polys[m] = std::move(next);
  }
  return polys[n];
}

namespace {

using Poly = std::vector<u64>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, u64 p) {
  trim(a);
  u64 lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    u64 f = mul_mod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = sub_mod(a[shift + i], mul_mod(f, b[i], p), p);
    trim(a);
  }
  return a;
}

Poly mul_mod_poly(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add_mod(out[i + j], mul_mod(a[i], b[j], p), p);
  }
  return poly_mod(std::move(out), f, p);
}

Poly pow_mod_poly(Poly base, u64 e, const Poly& f, u64 p) {
  Poly result = poly_mod({1}, f, p);
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = mul_mod_poly(result, base, f, p);
    base = mul_mod_poly(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly monic(Poly f, u64 p) {
  trim(f);
  if (f.empty()) return f;
  u64 inv = inv_mod(f.back(), p);
  for (u64& v : f) v = mul_mod(v, inv, p);
  return f;
}

Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), p);
}

void split(const Poly& f, u64 p, std::mt19937_64& rng, std::vector<u64>& out) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    out.push_back(mul_mod(p - f[0], inv_mod(f[1], p), p));
    return;
  }
  while (true) {
    u64 a = rng() % p;
    Poly h = pow_mod_poly({a, 1}, (p - 1) / 2, f, p);
    if (h.empty()) h = {0};
    h[0] = sub_mod(h[0], 1, p);
    Poly g = gcd(f, h, p);
    if (g.size() > 1 && g.size() < f.size()) {
      split(g, p, rng, out);
      Poly q = f;
      // f / g by long division; remainder is zero.
      Poly quotient(f.size() - g.size() + 1, 0);
      for (std::size_t i = quotient.size(); i-- > 0;) {
        u64 c = q[i + g.size() - 1];
        quotient[i] = c;
        for (std::size_t j = 0; j < g.size(); ++j) q[i + j] = sub_mod(q[i + j], mul_mod(c, g[j], p), p);
      }
      split(quotient, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<u64> roots(std::vector<u64> f, u64 p, std::mt19937_64& rng) {
  f = monic(std::move(f), p);
  std::vector<u64> out;
  if (f.size() <= 1) return out;
  if (p < 4096) {
    for (u64 x = 0; x < p; ++x) {
      u64 v = 0;
      for (std::size_t i = f.size(); i-- > 0;) v = add_mod(mul_mod(v, x, p), f[i], p);
      if (v == 0) out.push_back(x);
    }
    return out;
  }
  // Product of the distinct linear factors: gcd(f, x^p - x).
  Poly xp = pow_mod_poly({0, 1}, p, f, p);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = sub_mod(xp[1], 1, p);
  Poly g = gcd(f, xp, p);
  if (!g.empty() && g[0] == 0) {
    out.push_back(0);
    g.erase(g.begin());
  }
  split(g, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mbx::modular
