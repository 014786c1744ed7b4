#include "bernmod/kv.hpp"

#include <string>

namespace bernmod {

namespace {

void require_pair(u64 p, u64 k) {
  if (p < 3 || !is_prime(p)) throw Error(Errc::InvalidArgument, "p must be an odd prime");
  if (k < 2 || k + 3 > p)
    throw Error(Errc::IndexOutOfRange, "k = " + std::to_string(k) + " outside [2, p - 3]");
  if (k % 2 != 0) throw Error(Errc::OddIndex, "k = " + std::to_string(k));
}

[[noreturn]] void degenerate(u64 c) {
  throw Error(Errc::DegenerateFactor, "z^c - z^-c = 0 at c = " + std::to_string(c));
}

}  // namespace

u64 smallest_q(u64 p) {
  if (p < 2 || !is_prime(p)) throw Error(Errc::InvalidArgument, "p must be prime");
  for (u64 t = 1; t <= 1'000'000; ++t)
    if (is_prime(1 + t * p)) return 1 + t * p;
  throw Error(Errc::SearchExhausted, "no prime 1 + t*p with t <= 10^6");
}

u64 pth_root_of_unity(u64 p, u64 q) {
  if ((q - 1) % p != 0)
    throw Error(Errc::InvalidArgument, "q - 1 not divisible by p");
  const u64 e = (q - 1) / p;
  for (u64 n = 2; n < q; ++n) {
    const u64 z = powmod(n, e, q);
    if (z != 1) return z;
  }
  throw Error(Errc::SearchExhausted, "no p-th root of unity mod q");
}

u64 vandiver_product_sequential(u64 p, u64 k, u64 q, u64 z, ExponentReduction r) {
  require_pair(p, k);
  const u64 zinv = invmod(z, q);
  const u64 emod = r == ExponentReduction::mod_p ? p : q - 1;
  u64 zc = 1, zmc = 1, v = 1;
  for (u64 c = 1; c <= (p - 1) / 2; ++c) {
    zc = mulmod(zc, z, q);
    zmc = mulmod(zmc, zinv, q);
    const u64 f = submod(zc, zmc, q);
    if (f == 0) degenerate(c);
    v = mulmod(v, powmod(f, powmod(c % emod, p - 1 - k, emod), q), q);
  }
  return v;
}

u64 vandiver_product_pow2(u64 p, u64 k, u64 q, u64 z) {
  require_pair(p, k);
  const u64 g = primitive_root(p);
  const u64 t = multiplicative_order(2, p);
  const u64 cosets = (p - 1) / t;
  const u64 half = (p - 1) / 2;
  const u64 step2 = powmod(2, p - 1 - k, p);
  const u64 stepg = powmod(g, p - 1 - k, p);
  const u64 zinv = invmod(z, q);

  // Outer state at c = g^j: c, c^(p-1-k) mod p, z^c, z^-c.
  u64 cj = 1, ej = 1, zj = z, zmj = zinv;
  u64 v = 1;
  for (u64 j = 0; j < cosets; ++j) {
    u64 c = cj, e = ej, zc = zj, zmc = zmj;
    for (u64 i = 0; i < t; ++i) {
      if (c <= half) {
        const u64 f = submod(zc, zmc, q);
        if (f == 0) degenerate(c);
        v = mulmod(v, powmod(f, e, q), q);
      }
      c = c * 2 % p;
      e = e * step2 % p;
      zc = mulmod(zc, zc, q);
      zmc = mulmod(zmc, zmc, q);
    }
    cj = cj * g % p;
    ej = ej * stepg % p;
    zj = powmod(zj, g, q);
    zmj = powmod(zmj, g, q);
  }
  return v;
}

VandiverResult vandiver_verdict(u64 p, u64 k, u64 q, u64 z, u64 v_sequential, u64 v_pow2) {
  if (v_sequential != v_pow2)
    throw Error(Errc::SchemeDisagreement,
                "p = " + std::to_string(p) + ", k = " + std::to_string(k) + ": sequential " +
                    std::to_string(v_sequential) + " vs pow2 " + std::to_string(v_pow2));
  VandiverResult r{p, k, q, z, v_pow2, false, VandiverScheme::pow2};
  r.passed = powmod(v_pow2, (q - 1) / p, q) != 1;
  return r;
}

VandiverResult vandiver_test(u64 p, u64 k) {
  require_pair(p, k);
  const u64 q = smallest_q(p);
  const u64 z = pth_root_of_unity(p, q);
  return vandiver_verdict(p, k, q, z, vandiver_product_sequential(p, k, q, z),
                          vandiver_product_pow2(p, k, q, z));
}

}  // namespace bernmod
