// Multiplication in R[y]/(y^M + 1).
//
// Nussbaumer: write M = m1 * r with r = 2^ceil(log2(M)/2), z = y^m1, so an
// element is a polynomial of degree < m1 in y over B = R[z]/(z^r + 1). The
// product of two such polynomials has length 2*m1 - 1 and is computed by a
// length-2*m1 transform over B with root z^(r/m1); the wrap y^m1 = z then
// folds it back. Pointwise products recurse at length r.

#include <algorithm>
#include <bit>
#include <string>

#include "poly_kernels.hpp"

namespace bernmod {

namespace detail {

void negacyclic_mul_kronecker(u64* out, const u64* a, const u64* b, std::size_t M,
                              const Modulus& mod) {
  const auto full = mul_kronecker(Coeffs(a, M), Coeffs(b, M), mod);
  for (std::size_t j = 0; j < M; ++j) {
    const u64 hi = j + M < full.size() ? full[j + M] : 0;
    out[j] = mod.sub(full[j], hi);
  }
}

namespace {

void nussbaumer(u64* out, const u64* a, const u64* b, std::size_t M, const Modulus& mod,
                const MulThresholds& t) {
  const unsigned lg = static_cast<unsigned>(std::countr_zero(M));
  const std::size_t r = std::size_t{1} << ((lg + 1) / 2);
  const std::size_t m1 = M / r;
  const std::size_t N = 2 * m1;

  std::vector<u64> A(N * r, 0), B(N * r, 0);
  for (std::size_t j = 0; j < m1; ++j)
    for (std::size_t l = 0; l < r; ++l) {
      A[j * r + l] = a[j + m1 * l];
      B[j * r + l] = b[j + m1 * l];
    }

  ElemFft fft(mod, r);
  const std::size_t shift = r / m1;  // z^(2r/N)
  fft.forward(A.data(), N, m1, N, shift);
  fft.forward(B.data(), N, m1, N, shift);
  for (std::size_t s = 0; s < N; ++s)
    negacyclic_mul(A.data() + s * r, A.data() + s * r, B.data() + s * r, r, mod, t);
  fft.inverse(A.data(), N, N, shift);

  // Fold y^m1 = z: coefficient j collects C_j + z * C_(j + m1).
  std::vector<u64> zc(r);
  for (std::size_t j = 0; j < m1; ++j) {
    fft.rotate(zc.data(), A.data() + (j + m1) * r, 1);
    const u64* cj = A.data() + j * r;
    for (std::size_t l = 0; l < r; ++l) out[j + m1 * l] = mod.add(cj[l], zc[l]);
  }
}

}  // namespace

void negacyclic_mul(u64* out, const u64* a, const u64* b, std::size_t M,
                    const Modulus& mod, const MulThresholds& t) {
  if (M <= std::max<std::size_t>(t.nussbaumer, 1) || !mod.is_odd())
    negacyclic_mul_kronecker(out, a, b, M, mod);
  else
    nussbaumer(out, a, b, M, mod, t);
}

}  // namespace detail

NegacyclicElem negacyclic_mul(const NegacyclicElem& a, const NegacyclicElem& b,
                              const MulThresholds& t) {
  if (a.length() != b.length())
    throw Error(Errc::SizeMismatch, std::to_string(a.length()) + " vs " +
                                        std::to_string(b.length()));
  if (!(a.modulus() == b.modulus()))
    throw Error(Errc::ModulusMismatch, "negacyclic operands over different rings");
  std::vector<u64> out(a.length());
  detail::negacyclic_mul(out.data(), a.coeffs().data(), b.coeffs().data(), a.length(),
                         a.modulus(), t);
  return NegacyclicElem(a.modulus(), std::move(out));
}

}  // namespace bernmod
