#include <algorithm>
#include <bit>
#include <string>

#include "poly_kernels.hpp"

namespace bernmod {

namespace {

void require_canonical(const Modulus& m, std::span<const u64> c) {
  for (u64 v : c)
    if (v >= m.value())
      throw Error(Errc::InvalidArgument,
                  "coefficient " + std::to_string(v) + " not canonical mod " +
                      std::to_string(m.value()));
}

void require_same_modulus(const ModPoly& f, const ModPoly& g) {
  if (!(f.modulus() == g.modulus()))
    throw Error(Errc::ModulusMismatch, std::to_string(f.modulus().value()) + " vs " +
                                           std::to_string(g.modulus().value()));
}

void require_odd(const Modulus& m) {
  if (!m.is_odd())
    throw Error(Errc::EvenModulus, "2 is not invertible mod " + std::to_string(m.value()));
}

}  // namespace

ModPoly::ModPoly(Modulus m, std::vector<u64> coeffs) : mod_(m), coeffs_(std::move(coeffs)) {
  require_canonical(mod_, coeffs_);
}

bool ModPoly::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](u64 v) { return v == 0; });
}

ModPoly ModPoly::truncated(std::size_t n) const {
  std::vector<u64> c(n, 0);
  std::copy_n(coeffs_.begin(), std::min(n, coeffs_.size()), c.begin());
  return ModPoly(mod_, std::move(c));
}

bool operator==(const ModPoly& a, const ModPoly& b) noexcept {
  if (!(a.mod_ == b.mod_)) return false;
  const auto& x = a.coeffs_.size() >= b.coeffs_.size() ? a.coeffs_ : b.coeffs_;
  const auto& y = a.coeffs_.size() >= b.coeffs_.size() ? b.coeffs_ : a.coeffs_;
  if (!std::equal(y.begin(), y.end(), x.begin())) return false;
  return std::all_of(x.begin() + static_cast<std::ptrdiff_t>(y.size()), x.end(),
                     [](u64 v) { return v == 0; });
}

NegacyclicElem::NegacyclicElem(Modulus m, std::vector<u64> coeffs)
    : mod_(m), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || !std::has_single_bit(coeffs_.size()))
    throw Error(Errc::SizeMismatch,
                "negacyclic length must be a power of two, got " +
                    std::to_string(coeffs_.size()));
  require_canonical(mod_, coeffs_);
}

SchonhageParams schonhage_params(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "schonhage_params needs n >= 1");
  // M = 2^a with a least such that 2^(2a-1) >= n, i.e. a = ceil((1 + log2 n)/2).
  std::size_t a = 1;
  while ((std::size_t{1} << (2 * a - 1)) < n) ++a;
  const std::size_t M = std::size_t{1} << a;
  // K = 2^b with b least such that 2^b * M >= 4n.
  std::size_t K = 1;
  while (K * M < 4 * n) K <<= 1;
  return {n, M, K};
}

namespace detail {

std::vector<u64> mul_schoolbook(Coeffs a, Coeffs b, const Modulus& mod) {
  if (a.empty() || b.empty()) return {};
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t n = a.size() + b.size() - 1;
  std::vector<u64> out(n);
  // Accumulate in 128 bits; 2^66 products of 62-bit terms fit.
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t jlo = k >= a.size() ? k - a.size() + 1 : 0;
    const std::size_t jhi = std::min(k, b.size() - 1);
    u128 acc = 0;
    for (std::size_t j = jlo; j <= jhi; ++j) acc += static_cast<u128>(a[k - j]) * b[j];
    out[k] = mod.reduce(acc);
  }
  return out;
}

namespace {

void pack(std::vector<u64>& limbs, Coeffs c, unsigned bits) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::size_t off = i * bits;
    const std::size_t w = off / 64;
    const unsigned s = off % 64;
    limbs[w] |= c[i] << s;
    if (s > 32) limbs[w + 1] |= c[i] >> (64 - s);
  }
}

u128 unpack(const std::vector<u64>& limbs, std::size_t off, unsigned bits) {
  const std::size_t w = off / 64;
  const unsigned s = off % 64;
  u128 v = limbs[w] >> s;
  unsigned have = 64 - s;
  for (std::size_t k = w + 1; have < bits && k < limbs.size(); ++k, have += 64)
    v |= static_cast<u128>(limbs[k]) << have;
  if (bits < 128) v &= (static_cast<u128>(1) << bits) - 1;
  return v;
}

}  // namespace

std::vector<u64> mul_kronecker(Coeffs a, Coeffs b, const Modulus& mod) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size() + b.size() - 1;
  // Slot width: product coefficients are at most min(len)*(m-1)^2.
  const u128 bound = static_cast<u128>(std::min(a.size(), b.size())) *
                     (mod.value() - 1) * (mod.value() - 1);
  unsigned bits = 1;
  while (bits < 128 && (bound >> bits) != 0) ++bits;

  std::vector<u64> pa((a.size() * bits + 63) / 64 + 1, 0);
  std::vector<u64> pb((b.size() * bits + 63) / 64 + 1, 0);
  pack(pa, a, bits);
  pack(pb, b, bits);
  const auto prod = bigint_mul(pa, pb);

  std::vector<u64> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = mod.reduce(unpack(prod, i * bits, bits));
  return out;
}

std::vector<u64> mul(Coeffs a, Coeffs b, const Modulus& mod, const MulThresholds& t) {
  const std::size_t shortest = std::min(a.size(), b.size());
  if (shortest == 0) return {};
  if (shortest < t.kronecker || shortest == 1) return mul_schoolbook(a, b, mod);
  if (shortest < t.schonhage || !mod.is_odd()) return mul_kronecker(a, b, mod);
  return mul_schonhage(a, b, mod, t);
}

}  // namespace detail

ModPoly mul_schoolbook(const ModPoly& f, const ModPoly& g) {
  require_same_modulus(f, g);
  return ModPoly(f.modulus(), detail::mul_schoolbook(f.coeffs(), g.coeffs(), f.modulus()));
}

ModPoly mul_kronecker(const ModPoly& f, const ModPoly& g) {
  require_same_modulus(f, g);
  return ModPoly(f.modulus(), detail::mul_kronecker(f.coeffs(), g.coeffs(), f.modulus()));
}

ModPoly mul_schonhage(const ModPoly& f, const ModPoly& g, const MulThresholds& t) {
  require_same_modulus(f, g);
  require_odd(f.modulus());
  return ModPoly(f.modulus(),
                 detail::mul_schonhage(f.coeffs(), g.coeffs(), f.modulus(), t));
}

ModPoly mul(const ModPoly& f, const ModPoly& g, const MulThresholds& t) {
  require_same_modulus(f, g);
  return ModPoly(f.modulus(), detail::mul(f.coeffs(), g.coeffs(), f.modulus(), t));
}

}  // namespace bernmod
