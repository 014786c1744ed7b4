#pragma once

// Residue arithmetic modulo word-sized integers, primality, and prime
// enumeration. Every residue handed to or returned from this module is a
// canonical representative in [0, m).

#include <cstdint>
#include <optional>
#include <vector>

#include "bernmod/error.hpp"

namespace bernmod {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// Generic 64-bit moduli (m < 2^63). Used for mod p^2 and mod q work.

u64 mulmod(u64 a, u64 b, u64 m);
u64 addmod(u64 a, u64 b, u64 m);
u64 submod(u64 a, u64 b, u64 m);

/// a^e mod m by square-and-multiply; e = 0 gives 1 mod m.
u64 powmod(u64 a, u64 e, u64 m);

/// b with a*b = 1 mod m, by extended Euclid. Throws NotInvertible.
u64 invmod(u64 a, u64 m);

/// Distinct prime divisors of n in ascending order (trial division).
std::vector<u64> distinct_prime_factors(u64 n);

/// Smallest g >= 2 generating (Z/pZ)^x. p must be prime.
u64 primitive_root(u64 p);

/// Least t >= 1 with a^t = 1 mod p. Throws ZeroResidue for a = 0 mod p.
u64 multiplicative_order(u64 a, u64 p);

/// Deterministic for every n < 2^64.
bool is_prime(u64 n);

// ---------------------------------------------------------------------------
// Fast arithmetic for moduli below 2^32. Products of two residues fit in a
// word, and reduction is a multiply-high against a precomputed reciprocal.

class Modulus {
 public:
  explicit Modulus(u64 m);

  u64 value() const noexcept { return m_; }
  bool is_odd() const noexcept { return (m_ & 1) != 0; }

  /// x mod m for any 64-bit x.
  u64 reduce(u64 x) const noexcept {
    const u64 q = static_cast<u64>((static_cast<u128>(x) * recip_) >> 64);
    u64 r = x - q * m_;
    if (r >= m_) r -= m_;
    if (r >= m_) r -= m_;
    return r;
  }

  /// x mod m for x < 2^128.
  u64 reduce(u128 x) const noexcept {
    const u64 hi = reduce(static_cast<u64>(x >> 64));
    return reduce(hi * pow64_ + reduce(static_cast<u64>(x)));
  }

  u64 add(u64 a, u64 b) const noexcept {
    const u64 s = a + b;
    return s >= m_ ? s - m_ : s;
  }
  u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + m_ - b; }
  u64 neg(u64 a) const noexcept { return a == 0 ? 0 : m_ - a; }
  u64 mul(u64 a, u64 b) const noexcept { return reduce(a * b); }

  /// a/2; requires an odd modulus.
  u64 half(u64 a) const noexcept { return (a & 1) ? (a + m_) >> 1 : a >> 1; }

  u64 pow(u64 a, u64 e) const noexcept;
  u64 inv(u64 a) const;

  friend bool operator==(const Modulus& x, const Modulus& y) noexcept {
    return x.m_ == y.m_;
  }

 private:
  u64 m_;
  u64 recip_;  // floor((2^64 - 1) / m)
  u64 pow64_;  // 2^64 mod m
};

/// Arithmetic context for an odd prime p < 2^32: the modulus, its smallest
/// primitive root, and 1/2. Immutable once built.
class FieldCtx {
 public:
  explicit FieldCtx(u64 p);

  u64 p() const noexcept { return mod_.value(); }
  u64 g() const noexcept { return g_; }
  u64 inv2() const noexcept { return inv2_; }
  const Modulus& mod() const noexcept { return mod_; }

 private:
  Modulus mod_;
  u64 g_;
  u64 inv2_;
};

// ---------------------------------------------------------------------------
// Prime enumeration by segmented sieve of Eratosthenes.

/// Primes p with lo <= p < hi, ascending.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

/// Number of primes p with lo <= p < hi.
u64 count_primes(u64 lo, u64 hi);

/// Incremental source of the primes in [lo, hi). Memory is one segment
/// plus the sieving primes up to sqrt(hi).
class PrimeStream {
 public:
  PrimeStream(u64 lo, u64 hi);

  std::optional<u64> next();

 private:
  void fill_segment();

  u64 lo_;
  u64 hi_;
  u64 seg_lo_;  // first odd number covered by the current segment
  std::vector<std::uint32_t> base_;
  std::vector<std::uint8_t> seg_;
  std::size_t pos_ = 0;
  bool emitted_two_ = false;
};

}  // namespace bernmod
