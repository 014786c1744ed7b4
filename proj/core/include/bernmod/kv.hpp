#pragma once

// Kummer-Vandiver check for an irregular pair (p, k): with q the least prime
// = 1 mod p and z a p-th root of unity mod q,
//   V = prod_{c=1}^{(p-1)/2} (z^c - z^-c)^(c^(p-1-k))  mod q
// must not be a p-th power, i.e. V^((q-1)/p) != 1.

#include "bernmod/modarith.hpp"

namespace bernmod {

enum class VandiverScheme { sequential, pow2 };

/// How c^(p-1-k) is reduced before raising a factor to it. Only its class
/// mod p affects whether V is a p-th power; mod_group gives the literal
/// value of V.
enum class ExponentReduction { mod_p, mod_group };

struct VandiverResult {
  u64 p = 0;
  u64 k = 0;
  u64 q = 0;
  u64 z = 0;
  u64 v = 0;
  bool passed = false;
  VandiverScheme scheme = VandiverScheme::pow2;

  friend bool operator==(const VandiverResult&, const VandiverResult&) = default;
};

/// Least prime q = 1 + t p. Throws SearchExhausted past t = 10^6.
u64 smallest_q(u64 p);

/// n^((q-1)/p) for the least n >= 2 where that is not 1.
u64 pth_root_of_unity(u64 p, u64 q);

/// c = 1, 2, ..., (p-1)/2 in order.
u64 vandiver_product_sequential(u64 p, u64 k, u64 q, u64 z,
                                ExponentReduction r = ExponentReduction::mod_p);

/// c = 2^i g^j mod p over the cosets of <2>, skipping c > (p-1)/2; the
/// exponent and z^c are carried along by one multiplication or squaring
/// per step. Exponents are reduced mod p.
u64 vandiver_product_pow2(u64 p, u64 k, u64 q, u64 z);

/// Compares the two scheme values and applies the power test. Throws
/// SchemeDisagreement when they differ.
VandiverResult vandiver_verdict(u64 p, u64 k, u64 q, u64 z, u64 v_sequential, u64 v_pow2);

VandiverResult vandiver_test(u64 p, u64 k);

}  // namespace bernmod
