#pragma once

// Dense polynomials and truncated power series over Z/mZ, m odd and below
// 2^32. Multiplication is layered the usual way for this size range:
// schoolbook, then Kronecker substitution into big integers, then a
// Schonhage-style split into negacyclic convolutions over R[y]/(y^M + 1)
// driven by truncated Fourier transforms, with Nussbaumer's algorithm for
// the negacyclic pieces. Everything is integer arithmetic.

#include <cstddef>
#include <span>
#include <vector>

#include "bernmod/modarith.hpp"

namespace bernmod {

/// Coefficient sequence over Z/mZ; index i holds the coefficient of x^i.
/// Trailing zeros are allowed and ignored by equality.
class ModPoly {
 public:
  ModPoly(Modulus m, std::vector<u64> coeffs);
  explicit ModPoly(Modulus m) : mod_(m) {}

  const Modulus& modulus() const noexcept { return mod_; }
  std::span<const u64> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool empty() const noexcept { return coeffs_.empty(); }
  u64 operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const noexcept;

  /// First n coefficients, zero-extended when n > size().
  ModPoly truncated(std::size_t n) const;

  std::vector<u64> release() && { return std::move(coeffs_); }

  friend bool operator==(const ModPoly& a, const ModPoly& b) noexcept;

 private:
  Modulus mod_;
  std::vector<u64> coeffs_;
};

/// Element of R[y]/(y^M + 1) with M a power of two.
class NegacyclicElem {
 public:
  NegacyclicElem(Modulus m, std::vector<u64> coeffs);

  const Modulus& modulus() const noexcept { return mod_; }
  std::size_t length() const noexcept { return coeffs_.size(); }
  std::span<const u64> coeffs() const noexcept { return coeffs_; }
  u64 operator[](std::size_t i) const { return coeffs_[i]; }

  friend bool operator==(const NegacyclicElem&, const NegacyclicElem&) = default;

 private:
  Modulus mod_;
  std::vector<u64> coeffs_;
};

/// Shape of the Schonhage split for inputs of length n: segments of M/2
/// coefficients, a length-K transform over R[y]/(y^M + 1) with root
/// y^(2M/K). Always M*K >= 4n and K | 2M.
struct SchonhageParams {
  std::size_t n;
  std::size_t M;
  std::size_t K;
};

SchonhageParams schonhage_params(std::size_t n);

/// Crossover points for the multiplication dispatch. Results never depend
/// on these; only speed does. Defaults come from benchmarks/mul_bench.
struct MulThresholds {
  std::size_t kronecker = 48;       // schoolbook when min length is below
  std::size_t schonhage = 6000;     // Kronecker when min length is below
  std::size_t nussbaumer = 32;      // negacyclic length at or below: Kronecker
  std::size_t middle_product = 1500;  // transposed route at or above
  std::size_t newton_base = 32;     // series inversion by long division below
};

inline constexpr MulThresholds kDefaultThresholds{};

ModPoly mul_schoolbook(const ModPoly& f, const ModPoly& g);
ModPoly mul_kronecker(const ModPoly& f, const ModPoly& g);
ModPoly mul_schonhage(const ModPoly& f, const ModPoly& g,
                      const MulThresholds& t = kDefaultThresholds);

/// Dispatching product; identical output to mul_schoolbook.
ModPoly mul(const ModPoly& f, const ModPoly& g,
            const MulThresholds& t = kDefaultThresholds);

/// Product in R[y]/(y^M + 1): Nussbaumer above t.nussbaumer, Kronecker
/// substitution with an explicit wrap at or below it.
NegacyclicElem negacyclic_mul(const NegacyclicElem& a, const NegacyclicElem& b,
                              const MulThresholds& t = kDefaultThresholds);

// Truncated Fourier transforms over R[y]/(y^M + 1), length K | 2M, root
// w = y^(2M/K). Transform outputs are in bit-reversed order: output s is the
// evaluation at w^rev(s), rev reversing log2(K) bits.

/// data holds K elements; those at index >= nonzero_in are treated as zero.
/// Returns the first wanted_out outputs.
std::vector<NegacyclicElem> tft_forward(std::span<const NegacyclicElem> data,
                                        std::size_t nonzero_in,
                                        std::size_t wanted_out);

/// Recovers the n input coefficients of a length-K transform from its first
/// n outputs, given that inputs at index >= n are zero. Needs
/// values.size() >= n.
std::vector<NegacyclicElem> tft_inverse(std::span<const NegacyclicElem> values,
                                        std::size_t K, std::size_t n);

/// Transpose of tft_forward(., nonzero_in, values.size()) for the pairing
/// <u, v> = sum_s u_s * v_s computed in R[y]/(y^M + 1).
std::vector<NegacyclicElem> tft_transposed(std::span<const NegacyclicElem> values,
                                           std::size_t K, std::size_t nonzero_in);

/// Transpose of tft_inverse(., K, n) for the same pairing.
std::vector<NegacyclicElem> tft_inverse_transposed(
    std::span<const NegacyclicElem> coeffs, std::size_t K);

/// Coefficients n-1 .. 2n-2 of a*b, for a.size() == 2n-1, b.size() == n.
ModPoly middle_product(const ModPoly& a, const ModPoly& b,
                       const MulThresholds& t = kDefaultThresholds);

/// The two routes middle_product dispatches between.
ModPoly middle_product_by_slice(const ModPoly& a, const ModPoly& b,
                                const MulThresholds& t = kDefaultThresholds);
ModPoly middle_product_transposed(const ModPoly& a, const ModPoly& b,
                                  const MulThresholds& t = kDefaultThresholds);

/// g of length n with f*g = 1 mod x^n, by Newton iteration built on middle
/// products. Throws NonInvertibleLeadingTerm.
ModPoly series_inverse(const ModPoly& f, std::size_t n,
                       const MulThresholds& t = kDefaultThresholds);

}  // namespace bernmod
