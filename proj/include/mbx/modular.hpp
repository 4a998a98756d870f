#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mbx::modular {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
inline u64 add_mod(u64 a, u64 b, u64 p) { return a >= p - b ? a - (p - b) : a + b; }
inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }
u64 pow_mod(u64 a, u64 e, u64 p);
/// p must be prime and a nonzero mod p.
u64 inv_mod(u64 a, u64 p);

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(u64 n);
/// Smallest generator of the multiplicative group mod a prime p.
u64 primitive_root(u64 p);

/// Montgomery form for an odd modulus below 2^64. Values in [0, p).
class Montgomery {
 public:
  explicit Montgomery(u64 p);

  u64 modulus() const { return p_; }
  u64 to(u64 x) const { return mul(x % p_, r2_); }
  u64 reduce(u128 t) const {
    u64 m = static_cast<u64>(t) * inv_;
    u128 sum = t + static_cast<u128>(m) * p_;
    u64 hi = static_cast<u64>(sum >> 64);
    bool carry = sum < t;
    if (carry || hi >= p_) hi -= p_;
    return hi;
  }
  u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
  u64 add(u64 a, u64 b) const { return add_mod(a, b, p_); }
  u64 out(u64 x) const { return reduce(x); }

 private:
  u64 p_;
  u64 inv_;  // -p^-1 mod 2^64
  u64 r2_;   // 2^128 mod p
};

using Row = std::vector<u64>;
using Matrix = std::vector<Row>;

/// In-place reduced row echelon form; returns pivot columns, zero rows dropped.
std::vector<std::size_t> rref(Matrix& m, u64 p);

/// Basis of {x : A x = 0} as rows, in RREF.
Matrix nullspace(const Matrix& a, u64 p);

/// Characteristic polynomial det(xI - A), constant term first, monic.
std::vector<u64> charpoly(Matrix a, u64 p);

/// Distinct roots of f in F_p, ascending. Random splitting is seeded by `rng`.
std::vector<u64> roots(std::vector<u64> f, u64 p, std::mt19937_64& rng);

}  // namespace mbx::modular
