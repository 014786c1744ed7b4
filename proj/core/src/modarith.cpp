#include "bernmod/modarith.hpp"

#include <string>

namespace bernmod {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::ZeroResidue: return "ZeroResidue";
    case Errc::ModulusMismatch: return "ModulusMismatch";
    case Errc::EvenModulus: return "EvenModulus";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::CountOutOfRange: return "CountOutOfRange";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NonInvertibleLeadingTerm: return "NonInvertibleLeadingTerm";
    case Errc::BadRootOrder: return "BadRootOrder";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::OddIndex: return "OddIndex";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::DegenerateFactor: return "DegenerateFactor";
    case Errc::SchemeDisagreement: return "SchemeDisagreement";
    case Errc::MethodDisagreement: return "MethodDisagreement";
    case Errc::ConsistencyFailure: return "ConsistencyFailure";
    case Errc::FormatError: return "FormatError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

void check_modulus(u64 m) {
  if (m < 2 || m >= (u64{1} << 63))
    throw Error(Errc::InvalidArgument, "modulus out of range: " + std::to_string(m));
}

void check_canonical(u64 a, u64 m) {
  if (a >= m)
    throw Error(Errc::InvalidArgument,
                "residue " + std::to_string(a) + " not canonical mod " + std::to_string(m));
}

}  // namespace

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 addmod(u64 a, u64 b, u64 m) {
  const u64 s = a + b;  // no overflow: a, b < 2^63
  return s >= m ? s - m : s;
}

u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

u64 powmod(u64 a, u64 e, u64 m) {
  check_modulus(m);
  check_canonical(a, m);
  u64 r = 1 % m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 m) {
  check_modulus(m);
  check_canonical(a, m);
  // Extended Euclid on (a, m) with signed 128-bit cofactors.
  __int128 r0 = m, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1)
    throw Error(Errc::NotInvertible,
                std::to_string(a) + " mod " + std::to_string(m));
  if (s0 < 0) s0 += m;
  return static_cast<u64>(s0);
}

std::vector<u64> distinct_prime_factors(u64 n) {
  std::vector<u64> out;
  if (n < 2) return out;
  for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      do n /= d; while (n % d == 0);
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 primitive_root(u64 p) {
  if (!is_prime(p))
    throw Error(Errc::InvalidArgument, std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  const auto factors = distinct_prime_factors(p - 1);
  for (u64 g = 2;; ++g) {
    bool generates = true;
    for (u64 l : factors) {
      if (powmod(g, (p - 1) / l, p) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
}

u64 multiplicative_order(u64 a, u64 p) {
  check_modulus(p);
  a %= p;
  if (a == 0) throw Error(Errc::ZeroResidue, "order of 0 mod " + std::to_string(p));
  u64 t = p - 1;
  for (u64 l : distinct_prime_factors(p - 1)) {
    while (t % l == 0 && powmod(a, t / l, p) == 1) t /= l;
  }
  return t;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : small) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  if (n < 41 * 41) return true;

  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Sinclair's base set: deterministic for all n < 2^64.
  static constexpr u64 bases[] = {2, 325, 9375, 28178, 450775, 9780504, 1795265022};
  for (u64 a : bases) {
    a %= n;
    if (a == 0) continue;
    u64 x = 1;
    for (u64 e = d, b = a; e; e >>= 1) {
      if (e & 1) x = mulmod(x, b, n);
      b = mulmod(b, b, n);
    }
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Modulus::Modulus(u64 m) : m_(m) {
  if (m < 2 || m >= (u64{1} << 32))
    throw Error(Errc::InvalidArgument,
                "fast modulus must lie in [2, 2^32): " + std::to_string(m));
  recip_ = ~u64{0} / m;
  pow64_ = static_cast<u64>((static_cast<u128>(1) << 64) % m);
}

u64 Modulus::pow(u64 a, u64 e) const noexcept {
  u64 r = 1 % m_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 Modulus::inv(u64 a) const { return invmod(a, m_); }

FieldCtx::FieldCtx(u64 p) : mod_(p < 3 ? 3 : p) {
  if (p < 3 || !is_prime(p))
    throw Error(Errc::InvalidArgument, "FieldCtx needs an odd prime, got " + std::to_string(p));
  g_ = primitive_root(p);
  inv2_ = (p + 1) / 2;
}

}  // namespace bernmod
