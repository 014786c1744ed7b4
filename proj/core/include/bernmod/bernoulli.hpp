#pragma once

// Bernoulli numbers B_k mod p for all even k < p - 1, by two independent
// routes, plus the bookkeeping built on the table: irregular pairs, the
// consistency identity and certificate pairs.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bernmod/modarith.hpp"
#include "bernmod/polyring.hpp"

namespace bernmod {

enum class BernoulliMethod { voronoi, power_series };

/// values[j] = B_{2j} mod p for 0 <= 2j <= p - 3.
struct BernoulliTable {
  u64 p = 0;
  std::vector<u64> values;
  BernoulliMethod method = BernoulliMethod::voronoi;

  /// B_k mod p for even k in [0, p - 3].
  u64 at(u64 k) const { return values.at(k / 2); }

  friend bool operator==(const BernoulliTable&, const BernoulliTable&) = default;
};

struct IrregularPair {
  u64 p = 0;
  u64 k = 0;

  friend bool operator==(const IrregularPair&, const IrregularPair&) = default;
};

/// The N_p pairs (k, B_k mod p) with smallest (value, k), in that order.
struct CertificatePairs {
  u64 p = 0;
  std::vector<std::pair<u64, u64>> pairs;  // (k, value)

  friend bool operator==(const CertificatePairs&, const CertificatePairs&) = default;
};

/// h(g^i) for i in [0, (p - 3)/2], where
/// h(x) = (x - g * (x/g mod p)) / p + (g - 1)/2.
std::vector<u64> h_table(const FieldCtx& ctx);

/// sum_i c[i] * w^(i*k) for k in [0, n), n = c.size(), through a chirp
/// convolution. w must have order exactly n; throws BadRootOrder.
std::vector<u64> bluestein_dft(std::span<const u64> c, u64 w, const Modulus& mod,
                               const MulThresholds& t = kDefaultThresholds);

/// B_k = 2k/(1 - g^k) * sum_i g^((k-1) i) h(g^i), every k at once by one DFT
/// of length (p - 1)/2.
BernoulliTable bernoulli_all_voronoi(const FieldCtx& ctx,
                                     const MulThresholds& t = kDefaultThresholds);

/// B_k = k! [x^k] 1/E(x), E(x) = sum_j x^j/(j+1)!, by one series inversion.
BernoulliTable bernoulli_all_powerseries(const FieldCtx& ctx,
                                         const MulThresholds& t = kDefaultThresholds);

BernoulliTable bernoulli_all(const FieldCtx& ctx, BernoulliMethod method,
                             const MulThresholds& t = kDefaultThresholds);

/// One value in O(p), no transforms. Throws IndexOutOfRange or OddIndex.
u64 bernoulli_single(const FieldCtx& ctx, u64 k);

/// sum_{k=0}^{p-3} 2^k (k+1) B_k = -4 mod p, with B_1 = -1/2 and odd
/// B_k = 0 beyond. Vacuously true for p = 3, where the sum is empty of
/// testable indices.
bool consistency_check(const BernoulliTable& table);

/// Even k in [2, p - 3] with B_k = 0 mod p, ascending.
std::vector<IrregularPair> irregular_pairs(const BernoulliTable& table);

/// min(floor(2 ln p), (p - 3)/2).
std::size_t certificate_size(u64 p);

CertificatePairs certificate_pairs(const BernoulliTable& table);

}  // namespace bernmod
