#include "bernmod/lambda.hpp"

#include <string>

namespace bernmod {

u64 power_sum(u64 p, u64 e) {
  if (p < 3 || !is_prime(p)) throw Error(Errc::InvalidArgument, "p must be an odd prime");
  const u64 p2 = p * p;
  // Every a is a unit mod p^2, whose unit group has exponent p(p-1).
  const u64 group = p * (p - 1);
  const u64 er = e == 0 ? 0 : (e % group == 0 ? group : e % group);
  u64 s = 0;
  for (u64 a = 1; a <= (p - 1) / 2; ++a) s = addmod(s, powmod(a, er, p2), p2);
  return s;
}

LambdaResult lambda_tests_from_sums(u64 p, u64 k, u64 s_low, u64 s_high) {
  LambdaResult r;
  r.p = p;
  r.k = k;
  r.test1 = powmod(2, k, p) != 1;
  r.supported = r.test1;
  if (!r.supported) return r;
  const u64 p2 = p * p;
  r.test2 = s_low != s_high;
  r.test3 = mulmod(k % p2, s_low, p2) != mulmod((k - 1) % p2, s_high, p2);
  return r;
}

LambdaResult lambda_tests(u64 p, u64 k) {
  if (p < 5 || !is_prime(p)) throw Error(Errc::InvalidArgument, "p must be a prime >= 5");
  if (k < 2 || k + 3 > p)
    throw Error(Errc::IndexOutOfRange, "k = " + std::to_string(k) + " outside [2, p - 3]");
  if (k % 2 != 0) throw Error(Errc::OddIndex, "k = " + std::to_string(k));
  if (powmod(2, k, p) == 1) return lambda_tests_from_sums(p, k, 0, 0);
  return lambda_tests_from_sums(p, k, power_sum(p, k - 1), power_sum(p, p + k - 2));
}

LambdaReport lambda_verdict(u64 p, std::span<const IrregularPair> pairs) {
  LambdaReport rep{p, LambdaVerdict::established, {}};
  bool unsupported = false, failed = false;
  for (const auto& pr : pairs) {
    if (pr.p != p) throw Error(Errc::InvalidArgument, "pair belongs to another prime");
    auto r = lambda_tests(p, pr.k);
    if (!r.supported)
      unsupported = true;
    else if (!r.all_true())
      failed = true;
    rep.pairs.push_back(r);
  }
  if (failed)
    rep.verdict = LambdaVerdict::failed;
  else if (unsupported)
    rep.verdict = LambdaVerdict::inconclusive;
  return rep;
}

const char* to_string(LambdaVerdict v) noexcept {
  switch (v) {
    case LambdaVerdict::established: return "established";
    case LambdaVerdict::inconclusive: return "inconclusive";
    case LambdaVerdict::failed: return "failed";
  }
  return "?";
}

}  // namespace bernmod
