#include <doctest.h>

#include "bernmod/bernoulli.hpp"
#include "bernmod/lambda.hpp"

using namespace bernmod;

namespace {

// Unreduced exponents, plain summation.
u64 direct_sum(u64 p, u64 e, u64 m) {
  u64 s = 0;
  for (u64 a = 1; a <= (p - 1) / 2; ++a) {
    u64 t = 1;
    for (u64 i = 0; i < e; ++i) t = t * a % m;
    s = (s + t) % m;
  }
  return s;
}

}  // namespace

TEST_CASE("power_sum") {
  CHECK(power_sum(7, 0) == 3);
  CHECK(power_sum(5, 3) == 9);
  for (u64 p : primes_in_range(3, 200))
    for (u64 e = 0; e <= 50; ++e) {
      const u64 s = power_sum(p, e);
      CHECK(s == direct_sum(p, e, p * p));
      CHECK(s % p == direct_sum(p, e, p));
    }
  // Exponents beyond the group exponent p(p-1).
  CHECK(power_sum(11, 2 * 110 + 3) == direct_sum(11, 2 * 110 + 3, 121));
  CHECK(power_sum(11, 110) == direct_sum(11, 110, 121));
}

TEST_CASE("known pairs") {
  const auto r = lambda_tests(37, 32);
  CHECK(r.test1);
  CHECK(r.supported);
  CHECK(r.all_true());
  CHECK(lambda_tests(59, 44).all_true());
}

TEST_CASE("test2 fails when the sums coincide") {
  const auto r = lambda_tests_from_sums(37, 32, 100, 100);
  CHECK(r.supported);
  CHECK_FALSE(*r.test2);
  CHECK_FALSE(r.all_true());
}

TEST_CASE("unsupported when 2^k = 1 mod p") {
  // ord(2) mod 31 is 5, so 2^10 = 1.
  const auto r = lambda_tests(31, 10);
  CHECK_FALSE(r.test1);
  CHECK_FALSE(r.supported);
  CHECK_FALSE(r.test2.has_value());
  const std::vector<IrregularPair> pairs{{31, 10}};
  CHECK(lambda_verdict(31, pairs).verdict == LambdaVerdict::inconclusive);
}

TEST_CASE("verdict") {
  CHECK(lambda_verdict(5, {}).verdict == LambdaVerdict::established);
  const auto pairs = irregular_pairs(bernoulli_all_voronoi(FieldCtx(37)));
  const auto rep = lambda_verdict(37, pairs);
  CHECK(rep.verdict == LambdaVerdict::established);
  CHECK(rep.pairs.size() == 1);
}

TEST_CASE("literal test 3 fails for (9041, 4972)") {
  // Values from an independent big-integer computation: 2^4972 = -1 mod
  // 9041, S(4971) = 18669665 and S(14011) = 56723234 mod 9041^2, and
  // 4972 S(4971) = 4971 S(14011) mod 9041^2.
  CHECK(powmod(2, 4972, 9041) == 9040);
  CHECK(power_sum(9041, 4971) == 18669665);
  CHECK(power_sum(9041, 14011) == 56723234);
  const auto r = lambda_tests(9041, 4972);
  CHECK(r.supported);
  CHECK(*r.test2);
  CHECK_FALSE(*r.test3);
  const std::vector<IrregularPair> pairs{{9041, 4972}};
  CHECK(lambda_verdict(9041, pairs).verdict == LambdaVerdict::failed);
}

TEST_CASE("reruns are identical") {
  CHECK(lambda_tests(103, 24) == lambda_tests(103, 24));
}
