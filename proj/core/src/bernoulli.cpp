#include "bernmod/bernoulli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "poly_kernels.hpp"

namespace bernmod {

namespace {

// (x - g * (x/g mod p)) / p + (g - 1)/2 mod p; the division is exact.
u64 h_value(u64 x, u64 x_over_g, const FieldCtx& ctx) {
  const auto p = static_cast<std::int64_t>(ctx.p());
  const auto g = static_cast<std::int64_t>(ctx.g());
  std::int64_t q = (static_cast<std::int64_t>(x) - g * static_cast<std::int64_t>(x_over_g)) / p;
  q %= p;
  if (q < 0) q += p;
  const Modulus& m = ctx.mod();
  return m.add(static_cast<u64>(q), m.mul(ctx.g() - 1, ctx.inv2()));
}

void require_order(u64 w, std::size_t n, const Modulus& mod) {
  const auto bad = [&] {
    throw Error(Errc::BadRootOrder,
                std::to_string(w) + " does not have order " + std::to_string(n) + " mod " +
                    std::to_string(mod.value()));
  };
  if (mod.pow(w, n) != 1) bad();
  for (u64 r : distinct_prime_factors(n))
    if (mod.pow(w, n / r) == 1) bad();
}

BernoulliTable trivial_table(u64 p, BernoulliMethod method) { return {p, {1}, method}; }

}  // namespace

std::vector<u64> h_table(const FieldCtx& ctx) {
  const u64 p = ctx.p();
  const Modulus& m = ctx.mod();
  const u64 ginv = m.inv(ctx.g());
  const std::size_t n = (p - 1) / 2;
  std::vector<u64> h(n);
  u64 x = 1;
  for (std::size_t i = 0; i < n; ++i) {
    h[i] = h_value(x, m.mul(x, ginv), ctx);
    x = m.mul(x, ctx.g());
  }
  return h;
}

std::vector<u64> bluestein_dft(std::span<const u64> c, u64 w, const Modulus& mod,
                               const MulThresholds& t) {
  const std::size_t n = c.size();
  if (n == 0) return {};
  if (w >= mod.value())
    throw Error(Errc::InvalidArgument, "root not canonical");
  require_order(w, n, mod);

  std::vector<u64> wp(n);
  wp[0] = 1;
  for (std::size_t e = 1; e < n; ++e) wp[e] = mod.mul(wp[e - 1], w);

  // ik = T(i+k) - T(i) - T(k), T(j) = j(j+1)/2 taken mod n.
  std::vector<u64> chirp(2 * n - 1);
  std::vector<u64> alpha_rev(n);
  std::size_t tj = 0;
  for (std::size_t j = 0; j < 2 * n - 1; ++j) {
    chirp[j] = wp[tj];
    if (j < n) {
      const u64 winv = wp[tj == 0 ? 0 : n - tj];
      alpha_rev[n - 1 - j] = mod.mul(c[j] % mod.value(), winv);
    }
    tj = (tj + j + 1) % n;
  }

  auto out = detail::middle_product(chirp, alpha_rev, mod, t);
  tj = 0;
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = mod.mul(out[k], wp[tj == 0 ? 0 : n - tj]);
    tj = (tj + k + 1) % n;
  }
  return out;
}

BernoulliTable bernoulli_all_voronoi(const FieldCtx& ctx, const MulThresholds& t) {
  const u64 p = ctx.p();
  if (p == 3) return trivial_table(p, BernoulliMethod::voronoi);
  const Modulus& m = ctx.mod();
  const u64 g = ctx.g();
  const std::size_t n = (p - 1) / 2;

  // c_i = h(g^i) / g^i; the sum for index k is its transform at w = g^2.
  const auto h = h_table(ctx);
  const u64 ginv = m.inv(g);
  std::vector<u64> c(n);
  u64 gi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = m.mul(h[i], gi);
    gi = m.mul(gi, ginv);
  }
  const auto chat = bluestein_dft(c, m.mul(g, g), m, t);

  // Batch inversion of d_j = 1 - g^(2j), j in [1, n).
  std::vector<u64> d(n), prefix(n);
  const u64 g2 = m.mul(g, g);
  u64 gk = 1;
  for (std::size_t j = 1; j < n; ++j) {
    gk = m.mul(gk, g2);
    d[j] = m.sub(1, gk);
    prefix[j] = j == 1 ? d[j] : m.mul(prefix[j - 1], d[j]);
  }

  BernoulliTable table{p, std::vector<u64>(n), BernoulliMethod::voronoi};
  table.values[0] = 1;
  u64 inv = n > 1 ? m.inv(prefix[n - 1]) : 1;
  for (std::size_t j = n - 1; j >= 1; --j) {
    const u64 dinv = j == 1 ? inv : m.mul(inv, prefix[j - 1]);
    inv = m.mul(inv, d[j]);
    const u64 two_k = m.reduce(static_cast<u64>(4 * j));
    table.values[j] = m.mul(m.mul(two_k, dinv), chat[j]);
  }
  return table;
}

BernoulliTable bernoulli_all_powerseries(const FieldCtx& ctx, const MulThresholds& t) {
  const u64 p = ctx.p();
  if (p == 3) return trivial_table(p, BernoulliMethod::power_series);
  const Modulus& m = ctx.mod();
  const std::size_t len = p - 2;  // coefficients x^0 .. x^(p-3)

  // fact[j] = j! for j <= p - 2, ifact its inverse.
  std::vector<u64> fact(len + 1), ifact(len + 1);
  fact[0] = 1;
  for (std::size_t j = 1; j <= len; ++j) fact[j] = m.mul(fact[j - 1], j);
  ifact[len] = m.inv(fact[len]);
  for (std::size_t j = len; j >= 1; --j) ifact[j - 1] = m.mul(ifact[j], j);

  std::vector<u64> e(len);
  for (std::size_t j = 0; j < len; ++j) e[j] = ifact[j + 1];
  const auto inv = detail::series_inverse(e, len, m, t);

  const std::size_t n = (p - 1) / 2;
  BernoulliTable table{p, std::vector<u64>(n), BernoulliMethod::power_series};
  for (std::size_t j = 0; j < n; ++j) table.values[j] = m.mul(fact[2 * j], inv[2 * j]);
  return table;
}

BernoulliTable bernoulli_all(const FieldCtx& ctx, BernoulliMethod method,
                             const MulThresholds& t) {
  return method == BernoulliMethod::voronoi ? bernoulli_all_voronoi(ctx, t)
                                            : bernoulli_all_powerseries(ctx, t);
}

u64 bernoulli_single(const FieldCtx& ctx, u64 k) {
  const u64 p = ctx.p();
  if (k < 2 || k > p - 3)
    throw Error(Errc::IndexOutOfRange,
                "k = " + std::to_string(k) + " outside [2, " + std::to_string(p) + " - 3]");
  if (k % 2 != 0) throw Error(Errc::OddIndex, "k = " + std::to_string(k));

  const Modulus& m = ctx.mod();
  const u64 g = ctx.g();
  const u64 ginv = m.inv(g);
  const u64 step = m.pow(g, k - 1);
  const u64 half_g1 = m.mul(g - 1, ctx.inv2());

  // Running x = g^i and weight = g^((k-1) i).
  u64 x = 1, x_over_g = ginv, weight = 1, acc = 0;
  const auto pi = static_cast<std::int64_t>(p), gs = static_cast<std::int64_t>(g);
  for (u64 i = 0; i < (p - 1) / 2; ++i) {
    std::int64_t q = (static_cast<std::int64_t>(x) - gs * static_cast<std::int64_t>(x_over_g)) / pi;
    if (q < 0) q += pi;
    const u64 h = m.add(static_cast<u64>(q), half_g1);
    acc = m.add(acc, m.mul(weight, h));
    x = m.mul(x, g);
    x_over_g = m.mul(x_over_g, g);
    weight = m.mul(weight, step);
  }
  const u64 denom = m.sub(1, m.pow(g, k));
  return m.mul(m.mul(m.reduce(2 * k), m.inv(denom)), acc);
}

bool consistency_check(const BernoulliTable& table) {
  const u64 p = table.p;
  if (p == 3) return true;
  const Modulus m(p);
  if (table.values.size() != (p - 1) / 2) return false;
  // k = 0 and k = 1 terms: B_0 + 2 * 2 * (-1/2).
  u64 acc = m.sub(table.values[0], 2);
  u64 pow2 = 1;  // 2^k
  for (u64 k = 2; k <= p - 3; k += 2) {
    pow2 = m.mul(pow2, 4);
    acc = m.add(acc, m.mul(m.mul(pow2, m.reduce(k + 1)), table.values[k / 2]));
  }
  return acc == m.neg(4 % p);
}

std::vector<IrregularPair> irregular_pairs(const BernoulliTable& table) {
  std::vector<IrregularPair> out;
  for (std::size_t j = 1; j < table.values.size(); ++j)
    if (table.values[j] == 0) out.push_back({table.p, 2 * j});
  return out;
}

std::size_t certificate_size(u64 p) {
  if (p < 5) return 0;
  const auto byLog = static_cast<std::size_t>(std::floor(2.0 * std::log(static_cast<double>(p))));
  return std::min<std::size_t>(byLog, (p - 3) / 2);
}

CertificatePairs certificate_pairs(const BernoulliTable& table) {
  const std::size_t count = table.values.size() > 0 ? table.values.size() - 1 : 0;
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), std::size_t{1});
  const std::size_t keep = std::min(certificate_size(table.p), count);
  const auto less = [&](std::size_t a, std::size_t b) {
    return std::pair(table.values[a], a) < std::pair(table.values[b], b);
  };
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(keep), idx.end(),
                    less);
  CertificatePairs cert{table.p, {}};
  cert.pairs.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i)
    cert.pairs.emplace_back(2 * idx[i], table.values[idx[i]]);
  return cert;
}

}  // namespace bernmod
