// Polynomial product by embedding into R[y, z]/(y^M + 1, z^K - 1).
//
// Operands are cut into segments of M/2 coefficients; segment j becomes the
// coefficient of z^j, an element of R[y]/(y^M + 1) whose top half is zero,
// so segment products never wrap in y. A truncated transform in z with root
// y^(2M/K) turns the product into pointwise negacyclic products, and the
// inverse transform plus an overlap-add (z = x^(M/2)) reassembles it.
//
// multiply_transposed is the exact transpose of x -> x * c through the same
// pipeline, read right to left. Transposing over R rather than over
// R[y]/(y^M + 1) conjugates every ring scalar (y -> y^-1), so the transposed
// transforms run at the inverse root and the pointwise factors are
// conjugated.

#include <algorithm>
#include <string>

#include "poly_kernels.hpp"

namespace bernmod::detail {

Schonhage::Schonhage(const Modulus& mod, std::size_t n, const MulThresholds& t)
    : mod_(mod), params_(schonhage_params(std::max<std::size_t>(n, 1))), thresholds_(t) {
  if (!mod.is_odd()) throw Error(Errc::EvenModulus, "Schonhage product needs 1/2");
}

std::size_t Schonhage::segments_for(std::size_t length) const noexcept {
  const std::size_t half = params_.M / 2;
  return (length + half - 1) / half;
}

std::vector<u64> Schonhage::segment(Coeffs c, std::size_t segments) const {
  const std::size_t M = params_.M, half = M / 2;
  std::vector<u64> data(params_.K * M, 0);
  for (std::size_t j = 0; j < segments; ++j) {
    const std::size_t lo = j * half;
    const std::size_t len = std::min(half, c.size() - lo);
    std::copy_n(c.begin() + static_cast<std::ptrdiff_t>(lo), len, data.begin() + j * M);
  }
  return data;
}

SchonhageOperand Schonhage::transform(Coeffs c, std::size_t partner_len) const {
  SchonhageOperand op;
  op.length = c.size();
  op.segments = segments_for(c.size());
  op.outputs = op.segments + segments_for(partner_len) - 1;
  if (op.outputs > params_.K)
    throw Error(Errc::LengthMismatch, "operands too long for this Schonhage plan");
  op.data = segment(c, op.segments);
  ElemFft fft(mod_, params_.M);
  fft.forward(op.data.data(), params_.K, op.segments, op.outputs,
              2 * params_.M / params_.K);
  op.data.resize(op.outputs * params_.M);
  op.data.shrink_to_fit();
  return op;
}

std::vector<u64> Schonhage::multiply(const SchonhageOperand& c, Coeffs x) const {
  const std::size_t M = params_.M, K = params_.K, half = M / 2;
  const std::size_t sx = segments_for(x.size());
  const std::size_t L = c.outputs;
  if (x.empty() || c.length == 0) return {};
  if (sx + c.segments - 1 != L)
    throw Error(Errc::LengthMismatch, "operand was transformed for a different partner length");

  auto X = segment(x, sx);
  ElemFft fft(mod_, M);
  const std::size_t shift = 2 * M / K;
  fft.forward(X.data(), K, sx, L, shift);
  for (std::size_t s = 0; s < L; ++s)
    negacyclic_mul(X.data() + s * M, X.data() + s * M, c.data.data() + s * M, M, mod_,
                   thresholds_);
  std::fill(X.begin() + static_cast<std::ptrdiff_t>(L * M), X.end(), u64{0});
  fft.inverse(X.data(), K, L, shift);

  std::vector<u64> out(x.size() + c.length - 1, 0);
  for (std::size_t j = 0; j < L; ++j) {
    const u64* seg = X.data() + j * M;
    const std::size_t base = j * half;
    const std::size_t len = std::min(M, out.size() - std::min(out.size(), base));
    for (std::size_t i = 0; i < len; ++i) out[base + i] = mod_.add(out[base + i], seg[i]);
  }
  return out;
}

std::vector<u64> Schonhage::multiply_transposed(const SchonhageOperand& c, Coeffs a) const {
  const std::size_t M = params_.M, K = params_.K, half = M / 2;
  if (c.length == 0 || a.size() < c.length)
    throw Error(Errc::LengthMismatch, "transposed product needs a.size() >= c.length");
  const std::size_t partner = a.size() - c.length + 1;
  const std::size_t sx = segments_for(partner);
  const std::size_t L = c.outputs;
  if (sx + c.segments - 1 != L)
    throw Error(Errc::LengthMismatch, "operand was transformed for a different partner length");

  // Transpose of the overlap-add: overlapping windows of length M.
  std::vector<u64> Y(K * M, 0);
  for (std::size_t j = 0; j < L; ++j) {
    const std::size_t base = j * half;
    if (base >= a.size()) break;
    const std::size_t len = std::min(M, a.size() - base);
    std::copy_n(a.begin() + static_cast<std::ptrdiff_t>(base), len, Y.begin() + j * M);
  }

  ElemFft fft(mod_, M);
  const std::size_t conj_shift = 2 * M - 2 * M / K;
  fft.inverse_transposed(Y.data(), K, L, conj_shift);

  std::vector<u64> cbar(M);
  for (std::size_t s = 0; s < L; ++s) {
    const u64* cs = c.data.data() + s * M;
    cbar[0] = cs[0];
    for (std::size_t j = 1; j < M; ++j) cbar[M - j] = mod_.neg(cs[j]);
    negacyclic_mul(Y.data() + s * M, Y.data() + s * M, cbar.data(), M, mod_, thresholds_);
  }

  fft.transposed(Y.data(), K, sx, L, conj_shift);

  // Transpose of segmenting: keep the low half of each element.
  std::vector<u64> out(partner);
  for (std::size_t j = 0; j < sx; ++j) {
    const std::size_t base = j * half;
    const std::size_t len = std::min(half, partner - base);
    std::copy_n(Y.begin() + static_cast<std::ptrdiff_t>(j * M), len,
                out.begin() + static_cast<std::ptrdiff_t>(base));
  }
  return out;
}

std::vector<u64> mul_schonhage(Coeffs a, Coeffs b, const Modulus& mod,
                               const MulThresholds& t) {
  if (a.empty() || b.empty()) return {};
  const Schonhage plan(mod, std::max(a.size(), b.size()), t);
  return plan.multiply(plan.transform(b, a.size()), a);
}

}  // namespace bernmod::detail
