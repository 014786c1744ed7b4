#pragma once

// Sufficient condition for lambda_p = i_p: for each irregular index k,
//   2^k != 1 mod p,
//   S(k-1) != S(p+k-2) mod p^2,
//   k S(k-1) != (k-1) S(p+k-2) mod p^2,
// with S(e) = sum_{a=1}^{(p-1)/2} a^e.

#include <optional>
#include <span>
#include <vector>

#include "bernmod/bernoulli.hpp"
#include "bernmod/modarith.hpp"

namespace bernmod {

struct LambdaResult {
  u64 p = 0;
  u64 k = 0;
  bool test1 = false;
  std::optional<bool> test2;  // unset when unsupported
  std::optional<bool> test3;
  bool supported = false;  // test1 holds

  bool all_true() const noexcept { return supported && *test2 && *test3; }

  friend bool operator==(const LambdaResult&, const LambdaResult&) = default;
};

enum class LambdaVerdict { established, inconclusive, failed };

struct LambdaReport {
  u64 p = 0;
  LambdaVerdict verdict = LambdaVerdict::established;
  std::vector<LambdaResult> pairs;
};

/// S(e) mod p^2.
u64 power_sum(u64 p, u64 e);

LambdaResult lambda_tests(u64 p, u64 k);

/// Same, from precomputed S(k-1) and S(p+k-2).
LambdaResult lambda_tests_from_sums(u64 p, u64 k, u64 s_low, u64 s_high);

/// established iff every pair passes all three tests; failed if some
/// supported pair fails test 2 or 3; otherwise inconclusive.
LambdaReport lambda_verdict(u64 p, std::span<const IrregularPair> pairs);

const char* to_string(LambdaVerdict v) noexcept;

}  // namespace bernmod
