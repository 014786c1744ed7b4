#include <algorithm>
#include <string>

#include "poly_kernels.hpp"

namespace bernmod {

namespace detail {

std::vector<u64> middle_product_slice(Coeffs a, Coeffs b, const Modulus& mod,
                                      const MulThresholds& t) {
  const std::size_t n = b.size();
  const auto full = mul(a, b, mod, t);
  return std::vector<u64>(full.begin() + static_cast<std::ptrdiff_t>(n - 1),
                          full.begin() + static_cast<std::ptrdiff_t>(2 * n - 1));
}

std::vector<u64> middle_product_transposed(Coeffs a, Coeffs b, const Modulus& mod,
                                           const MulThresholds& t) {
  const std::size_t n = b.size();
  std::vector<u64> rb(b.rbegin(), b.rend());
  const Schonhage plan(mod, n, t);
  return plan.multiply_transposed(plan.transform(rb, n), a);
}

std::vector<u64> middle_product(Coeffs a, Coeffs b, const Modulus& mod,
                                const MulThresholds& t) {
  if (b.size() >= t.middle_product && mod.is_odd())
    return middle_product_transposed(a, b, mod, t);
  return middle_product_slice(a, b, mod, t);
}

namespace {

// Term-by-term inversion, O(n^2).
std::vector<u64> inverse_by_division(Coeffs f, std::size_t n, u64 inv0, const Modulus& mod) {
  std::vector<u64> g(n, 0);
  g[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    u128 acc = 0;
    const std::size_t top = std::min(k, f.size() - 1);
    for (std::size_t j = 1; j <= top; ++j) acc += static_cast<u128>(f[j]) * g[k - j];
    g[k] = mod.mul(mod.neg(mod.reduce(acc)), inv0);
  }
  return g;
}

}  // namespace

// Newton iteration g <- g - g (f g - 1), organised after the middle-product
// inversion of Hanrot, Quercia and Zimmermann: the error f g - 1 mod x^2k
// is a middle product, and the correction g * e mod x^k is read off the
// high half of rev(g) * rev(e), so both products share one transform of
// rev(g).
std::vector<u64> series_inverse(Coeffs f, std::size_t n, const Modulus& mod,
                                const MulThresholds& t) {
  if (n == 0) return {};
  const u64 inv0 = mod.inv(f[0]);
  const std::size_t base = std::max<std::size_t>(t.newton_base, 1);

  std::vector<std::size_t> sizes{n};
  while (sizes.back() > base) sizes.push_back((sizes.back() + 1) / 2);
  std::vector<u64> g = inverse_by_division(f, sizes.back(), inv0, mod);

  for (auto it = sizes.rbegin() + 1; it != sizes.rend(); ++it) {
    const std::size_t k = g.size();
    const std::size_t k2 = *it;
    const std::size_t d = k2 - k;

    std::vector<u64> fa(2 * k - 1, 0);
    for (std::size_t i = 0; i < fa.size() && i + 1 < f.size(); ++i) fa[i] = f[i + 1];

    std::vector<u64> corr(d);
    if (k >= t.middle_product && mod.is_odd()) {
      const std::vector<u64> rg(g.rbegin(), g.rend());
      const Schonhage plan(mod, k, t);
      const auto rg_hat = plan.transform(rg, k);
      auto e = plan.multiply_transposed(rg_hat, fa);
      std::fill(e.begin() + static_cast<std::ptrdiff_t>(d), e.end(), u64{0});
      std::reverse(e.begin(), e.end());
      const auto prod = plan.multiply(rg_hat, e);
      for (std::size_t i = 0; i < d; ++i) corr[i] = prod[2 * k - 2 - i];
    } else {
      auto e = middle_product(fa, g, mod, t);
      e.resize(d);
      const auto prod = mul(g, e, mod, t);
      std::copy_n(prod.begin(), d, corr.begin());
    }

    g.resize(k2);
    for (std::size_t i = 0; i < d; ++i) g[k + i] = mod.neg(corr[i]);
  }
  return g;
}

}  // namespace detail

namespace {

void check_mp_shape(const ModPoly& a, const ModPoly& b) {
  if (!(a.modulus() == b.modulus()))
    throw Error(Errc::ModulusMismatch, "middle product over different rings");
  const std::size_t n = b.size();
  if (n == 0 || a.size() != 2 * n - 1)
    throw Error(Errc::LengthMismatch, "middle product needs lengths (2n-1, n), got (" +
                                          std::to_string(a.size()) + ", " +
                                          std::to_string(n) + ")");
}

}  // namespace

ModPoly middle_product(const ModPoly& a, const ModPoly& b, const MulThresholds& t) {
  check_mp_shape(a, b);
  return ModPoly(a.modulus(), detail::middle_product(a.coeffs(), b.coeffs(), a.modulus(), t));
}

ModPoly middle_product_by_slice(const ModPoly& a, const ModPoly& b, const MulThresholds& t) {
  check_mp_shape(a, b);
  return ModPoly(a.modulus(),
                 detail::middle_product_slice(a.coeffs(), b.coeffs(), a.modulus(), t));
}

ModPoly middle_product_transposed(const ModPoly& a, const ModPoly& b, const MulThresholds& t) {
  check_mp_shape(a, b);
  return ModPoly(a.modulus(),
                 detail::middle_product_transposed(a.coeffs(), b.coeffs(), a.modulus(), t));
}

ModPoly series_inverse(const ModPoly& f, std::size_t n, const MulThresholds& t) {
  if (f.empty() || f[0] == 0)
    throw Error(Errc::NonInvertibleLeadingTerm, "constant term is zero");
  try {
    (void)f.modulus().inv(f[0]);
  } catch (const Error&) {
    throw Error(Errc::NonInvertibleLeadingTerm,
                "constant term " + std::to_string(f[0]) + " not a unit mod " +
                    std::to_string(f.modulus().value()));
  }
  return ModPoly(f.modulus(), detail::series_inverse(f.coeffs(), n, f.modulus(), t));
}

}  // namespace bernmod
