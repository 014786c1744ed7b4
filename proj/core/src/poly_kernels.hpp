#pragma once

// Raw-buffer kernels behind the polyring API. Inputs are canonical residues;
// lengths are validated by the public wrappers.

#include <cstddef>
#include <span>
#include <vector>

#include "bernmod/modarith.hpp"
#include "bernmod/polyring.hpp"

namespace bernmod::detail {

using Coeffs = std::span<const u64>;

// Big integers as little-endian 64-bit limbs.
std::vector<u64> bigint_mul(Coeffs a, Coeffs b);

std::vector<u64> mul_schoolbook(Coeffs a, Coeffs b, const Modulus& mod);
std::vector<u64> mul_kronecker(Coeffs a, Coeffs b, const Modulus& mod);
std::vector<u64> mul_schonhage(Coeffs a, Coeffs b, const Modulus& mod,
                               const MulThresholds& t);
std::vector<u64> mul(Coeffs a, Coeffs b, const Modulus& mod, const MulThresholds& t);

/// out = a*b in R[y]/(y^M + 1). out may alias a or b.
void negacyclic_mul(u64* out, const u64* a, const u64* b, std::size_t M,
                    const Modulus& mod, const MulThresholds& t);
void negacyclic_mul_kronecker(u64* out, const u64* a, const u64* b, std::size_t M,
                              const Modulus& mod);

/// In-place transforms on K consecutive elements of R[y]/(y^len + 1). The
/// root is y^shift and must have order exactly K (shift taken mod 2*len).
class ElemFft {
 public:
  ElemFft(const Modulus& mod, std::size_t len);

  std::size_t len() const noexcept { return len_; }

  /// Positions >= n_in are not read. Writes outputs [0, n_out); may clobber
  /// any of the K positions.
  void forward(u64* x, std::size_t K, std::size_t n_in, std::size_t n_out,
               std::size_t shift);
  /// On entry [0, n) holds outputs and [n, K) the known inputs; on exit
  /// [0, n) holds inputs.
  void inverse(u64* x, std::size_t K, std::size_t n, std::size_t shift);
  /// Transpose of forward: reads [0, n_out), writes [0, n_in).
  void transposed(u64* x, std::size_t K, std::size_t n_in, std::size_t n_out,
                  std::size_t shift);
  /// Transpose of inverse with respect to its first n inputs; [n, K) must
  /// be zero on entry.
  void inverse_transposed(u64* x, std::size_t K, std::size_t n, std::size_t shift);

  /// dst = src * y^s. dst must not alias src.
  void rotate(u64* dst, const u64* src, std::size_t s) const;

 private:
  u64* elem(u64* x, std::size_t i) const noexcept { return x + i * len_; }
  std::size_t mod2len(std::size_t s) const noexcept { return s % (2 * len_); }
  std::size_t negate_shift(std::size_t s) const noexcept {
    s = mod2len(s);
    return s == 0 ? 0 : 2 * len_ - s;
  }

  Modulus mod_;
  std::size_t len_;
  std::vector<u64> tmp_;
};

/// One operand transformed for the Schonhage product, reusable across
/// several products with partners of a fixed length.
struct SchonhageOperand {
  std::size_t length = 0;    // coefficients in the original operand
  std::size_t segments = 0;  // nonzero transform inputs
  std::size_t outputs = 0;   // transform outputs kept
  std::vector<u64> data;     // outputs * M residues
};

class Schonhage {
 public:
  /// Plan for operands of length at most n.
  Schonhage(const Modulus& mod, std::size_t n, const MulThresholds& t);

  const SchonhageParams& params() const noexcept { return params_; }
  std::size_t segments_for(std::size_t length) const noexcept;

  /// Transform c for products against partners of length partner_len.
  SchonhageOperand transform(Coeffs c, std::size_t partner_len) const;

  /// x * c, length x.size() + c.length - 1. x.size() must equal the
  /// partner length c was transformed for.
  std::vector<u64> multiply(const SchonhageOperand& c, Coeffs x) const;

  /// Transpose of x -> x * c applied to a: returns out with
  /// out[i] = sum_j a[i + j] * c[j], i < partner length. a.size() must be
  /// partner length + c.length - 1.
  std::vector<u64> multiply_transposed(const SchonhageOperand& c, Coeffs a) const;

 private:
  std::vector<u64> segment(Coeffs c, std::size_t segments) const;

  Modulus mod_;
  SchonhageParams params_;
  MulThresholds thresholds_;
};

std::vector<u64> middle_product_slice(Coeffs a, Coeffs b, const Modulus& mod,
                                      const MulThresholds& t);
std::vector<u64> middle_product_transposed(Coeffs a, Coeffs b, const Modulus& mod,
                                           const MulThresholds& t);
std::vector<u64> middle_product(Coeffs a, Coeffs b, const Modulus& mod,
                                const MulThresholds& t);

std::vector<u64> series_inverse(Coeffs f, std::size_t n, const Modulus& mod,
                                const MulThresholds& t);

}  // namespace bernmod::detail
