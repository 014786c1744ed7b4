// Truncated Fourier transforms over R[y]/(y^len + 1), their inverses, and
// the transposes of both.
//
// One radix-2 layer maps (x_i, x_{i+h}) to (u_i, v_i) = (x_i + x_{i+h},
// (x_i - x_{i+h}) w^i); the first half of the outputs is the transform of u
// and the second half that of v, both at root w^2. Truncation skips the
// butterflies whose results are never read. The inverse follows van der
// Hoeven: with n outputs known and the inputs past n known, each layer
// recovers the missing half from whichever half is fully determined.
// The transposed routines run the same layers backwards with every 2x2
// butterfly matrix transposed.

#include <algorithm>
#include <bit>
#include <string>

#include "poly_kernels.hpp"

namespace bernmod {

namespace detail {

ElemFft::ElemFft(const Modulus& mod, std::size_t len) : mod_(mod), len_(len), tmp_(len) {}

void ElemFft::rotate(u64* dst, const u64* src, std::size_t s) const {
  s = mod2len(s);
  const std::size_t L = len_;
  const bool flip = s >= L;
  if (flip) s -= L;
  const std::size_t keep = L - s;
  if (!flip) {
    std::copy(src, src + keep, dst + s);
    for (std::size_t j = keep; j < L; ++j) dst[j - keep] = mod_.neg(src[j]);
  } else {
    for (std::size_t j = 0; j < keep; ++j) dst[j + s] = mod_.neg(src[j]);
    std::copy(src + keep, src + L, dst);
  }
}

void ElemFft::forward(u64* x, std::size_t K, std::size_t n_in, std::size_t n_out,
                      std::size_t shift) {
  if (n_out == 0) return;
  if (n_in == 0) {
    std::fill(x, x + n_out * len_, u64{0});
    return;
  }
  if (K == 1) return;
  const std::size_t h = K / 2;
  const std::size_t half_in = std::min(n_in, h);
  shift = mod2len(shift);

  if (n_out <= h) {
    for (std::size_t i = 0; i + h < n_in; ++i) {
      u64* a = elem(x, i);
      const u64* b = elem(x, i + h);
      for (std::size_t j = 0; j < len_; ++j) a[j] = mod_.add(a[j], b[j]);
    }
    forward(x, h, half_in, n_out, 2 * shift);
    return;
  }

  u64* t = tmp_.data();
  for (std::size_t i = 0; i < half_in; ++i) {
    u64* a = elem(x, i);
    u64* b = elem(x, i + h);
    if (i + h < n_in) {
      for (std::size_t j = 0; j < len_; ++j) {
        t[j] = mod_.sub(a[j], b[j]);
        a[j] = mod_.add(a[j], b[j]);
      }
      rotate(b, t, i * shift);
    } else {
      rotate(b, a, i * shift);
    }
  }
  forward(x, h, half_in, h, 2 * shift);
  forward(elem(x, h), h, half_in, n_out - h, 2 * shift);
}

void ElemFft::inverse(u64* x, std::size_t K, std::size_t n, std::size_t shift) {
  if (n == 0 || K == 1) return;
  const std::size_t h = K / 2;
  shift = mod2len(shift);
  u64* t = tmp_.data();

  if (n >= h) {
    // First half of the outputs is the whole transform of u.
    inverse(x, h, h, 2 * shift);
    // Where x_{i+h} is known: x_i = u_i - x_{i+h}, v_i = (x_i - x_{i+h}) w^i.
    for (std::size_t i = n - h; i < h; ++i) {
      u64* a = elem(x, i);
      u64* b = elem(x, i + h);
      for (std::size_t j = 0; j < len_; ++j) {
        a[j] = mod_.sub(a[j], b[j]);
        t[j] = mod_.sub(a[j], b[j]);
      }
      rotate(b, t, i * shift);
    }
    inverse(elem(x, h), h, n - h, 2 * shift);
    for (std::size_t i = 0; i + h < n; ++i) {
      u64* a = elem(x, i);
      u64* b = elem(x, i + h);
      rotate(t, b, negate_shift(i * shift));
      for (std::size_t j = 0; j < len_; ++j) {
        const u64 u = a[j], w = t[j];
        a[j] = mod_.half(mod_.add(u, w));
        b[j] = mod_.half(mod_.sub(u, w));
      }
    }
    return;
  }

  // n < h: every x_{i+h} is known, so u_i is known for i >= n.
  for (std::size_t i = n; i < h; ++i) {
    u64* a = elem(x, i);
    const u64* b = elem(x, i + h);
    for (std::size_t j = 0; j < len_; ++j) a[j] = mod_.add(a[j], b[j]);
  }
  inverse(x, h, n, 2 * shift);
  for (std::size_t i = 0; i < n; ++i) {
    u64* a = elem(x, i);
    const u64* b = elem(x, i + h);
    for (std::size_t j = 0; j < len_; ++j) a[j] = mod_.sub(a[j], b[j]);
  }
}

void ElemFft::transposed(u64* x, std::size_t K, std::size_t n_in, std::size_t n_out,
                         std::size_t shift) {
  if (n_in == 0) return;
  if (n_out == 0) {
    std::fill(x, x + n_in * len_, u64{0});
    return;
  }
  if (K == 1) return;
  const std::size_t h = K / 2;
  const std::size_t half_in = std::min(n_in, h);
  shift = mod2len(shift);

  if (n_out <= h) {
    transposed(x, h, half_in, n_out, 2 * shift);
    for (std::size_t i = 0; i + h < n_in; ++i)
      std::copy(elem(x, i), elem(x, i) + len_, elem(x, i + h));
    return;
  }

  transposed(x, h, half_in, h, 2 * shift);
  transposed(elem(x, h), h, half_in, n_out - h, 2 * shift);
  u64* t = tmp_.data();
  for (std::size_t i = 0; i < half_in; ++i) {
    u64* a = elem(x, i);
    u64* b = elem(x, i + h);
    rotate(t, b, i * shift);
    if (i + h < n_in) {
      for (std::size_t j = 0; j < len_; ++j) {
        const u64 u = a[j];
        a[j] = mod_.add(u, t[j]);
        b[j] = mod_.sub(u, t[j]);
      }
    } else {
      for (std::size_t j = 0; j < len_; ++j) a[j] = mod_.add(a[j], t[j]);
    }
  }
}

void ElemFft::inverse_transposed(u64* x, std::size_t K, std::size_t n, std::size_t shift) {
  if (n == 0 || K == 1) return;
  const std::size_t h = K / 2;
  shift = mod2len(shift);
  u64* t = tmp_.data();

  if (n >= h) {
    for (std::size_t i = 0; i + h < n; ++i) {
      u64* a = elem(x, i);
      u64* b = elem(x, i + h);
      for (std::size_t j = 0; j < len_; ++j) {
        const u64 u = a[j], w = b[j];
        a[j] = mod_.half(mod_.add(u, w));
        t[j] = mod_.half(mod_.sub(u, w));
      }
      rotate(b, t, negate_shift(i * shift));
    }
    inverse_transposed(elem(x, h), h, n - h, 2 * shift);
    for (std::size_t i = n - h; i < h; ++i) {
      u64* a = elem(x, i);
      u64* b = elem(x, i + h);
      rotate(t, b, i * shift);
      for (std::size_t j = 0; j < len_; ++j) {
        const u64 u = a[j], w = t[j];
        a[j] = mod_.add(u, w);
        b[j] = mod_.neg(mod_.add(u, mod_.add(w, w)));
      }
    }
    inverse_transposed(x, h, h, 2 * shift);
    return;
  }

  for (std::size_t i = 0; i < n; ++i) {
    const u64* a = elem(x, i);
    u64* b = elem(x, i + h);
    for (std::size_t j = 0; j < len_; ++j) b[j] = mod_.sub(b[j], a[j]);
  }
  inverse_transposed(x, h, n, 2 * shift);
  for (std::size_t i = n; i < h; ++i) {
    const u64* a = elem(x, i);
    u64* b = elem(x, i + h);
    for (std::size_t j = 0; j < len_; ++j) b[j] = mod_.add(b[j], a[j]);
  }
}

}  // namespace detail

namespace {

struct Layout {
  Modulus mod;
  std::size_t M;
};

Layout check_elems(std::span<const NegacyclicElem> v, std::size_t K) {
  if (K == 0 || !std::has_single_bit(K))
    throw Error(Errc::SizeMismatch, "transform length must be a power of two");
  if (v.empty()) throw Error(Errc::CountOutOfRange, "no transform data");
  const Layout lay{v.front().modulus(), v.front().length()};
  for (const auto& e : v) {
    if (e.length() != lay.M) throw Error(Errc::SizeMismatch, "mixed element lengths");
    if (!(e.modulus() == lay.mod)) throw Error(Errc::ModulusMismatch, "mixed moduli");
  }
  if ((2 * lay.M) % K != 0)
    throw Error(Errc::SizeMismatch, "K = " + std::to_string(K) + " does not divide 2M = " +
                                        std::to_string(2 * lay.M));
  return lay;
}

void check_count(std::size_t c, std::size_t K, const char* what) {
  if (c > K)
    throw Error(Errc::CountOutOfRange,
                std::string(what) + " = " + std::to_string(c) + " exceeds K = " +
                    std::to_string(K));
}

std::vector<u64> flatten(std::span<const NegacyclicElem> v, std::size_t K, std::size_t M) {
  std::vector<u64> flat(K * M, 0);
  for (std::size_t i = 0; i < v.size() && i < K; ++i)
    std::copy(v[i].coeffs().begin(), v[i].coeffs().end(), flat.begin() + i * M);
  return flat;
}

std::vector<NegacyclicElem> unflatten(const std::vector<u64>& flat, std::size_t count,
                                      const Layout& lay) {
  std::vector<NegacyclicElem> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto first = flat.begin() + static_cast<std::ptrdiff_t>(i * lay.M);
    out.emplace_back(lay.mod, std::vector<u64>(first, first + static_cast<std::ptrdiff_t>(lay.M)));
  }
  return out;
}

void require_odd(const Modulus& m) {
  if (!m.is_odd()) throw Error(Errc::EvenModulus, "inverse transform needs 1/2");
}

}  // namespace

std::vector<NegacyclicElem> tft_forward(std::span<const NegacyclicElem> data,
                                        std::size_t nonzero_in, std::size_t wanted_out) {
  const std::size_t K = data.size();
  const Layout lay = check_elems(data, K);
  check_count(nonzero_in, K, "nonzero_in");
  check_count(wanted_out, K, "wanted_out");
  auto flat = flatten(data.first(nonzero_in), K, lay.M);
  detail::ElemFft(lay.mod, lay.M).forward(flat.data(), K, nonzero_in, wanted_out,
                                          2 * lay.M / K);
  return unflatten(flat, wanted_out, lay);
}

std::vector<NegacyclicElem> tft_inverse(std::span<const NegacyclicElem> values,
                                        std::size_t K, std::size_t n) {
  if (n == 0 && values.empty()) return {};
  const Layout lay = check_elems(values, K);
  check_count(n, K, "n");
  if (values.size() < n)
    throw Error(Errc::CountOutOfRange, "need " + std::to_string(n) + " transform values, got " +
                                           std::to_string(values.size()));
  require_odd(lay.mod);
  auto flat = flatten(values.first(n), K, lay.M);
  detail::ElemFft(lay.mod, lay.M).inverse(flat.data(), K, n, 2 * lay.M / K);
  return unflatten(flat, n, lay);
}

std::vector<NegacyclicElem> tft_transposed(std::span<const NegacyclicElem> values,
                                           std::size_t K, std::size_t nonzero_in) {
  if (nonzero_in == 0) return {};
  const Layout lay = check_elems(values, K);
  check_count(values.size(), K, "wanted_out");
  check_count(nonzero_in, K, "nonzero_in");
  auto flat = flatten(values, K, lay.M);
  detail::ElemFft(lay.mod, lay.M).transposed(flat.data(), K, nonzero_in, values.size(),
                                             2 * lay.M / K);
  return unflatten(flat, nonzero_in, lay);
}

std::vector<NegacyclicElem> tft_inverse_transposed(std::span<const NegacyclicElem> coeffs,
                                                   std::size_t K) {
  if (coeffs.empty()) return {};
  const Layout lay = check_elems(coeffs, K);
  check_count(coeffs.size(), K, "n");
  require_odd(lay.mod);
  auto flat = flatten(coeffs, K, lay.M);
  detail::ElemFft(lay.mod, lay.M).inverse_transposed(flat.data(), K, coeffs.size(),
                                                     2 * lay.M / K);
  return unflatten(flat, coeffs.size(), lay);
}

}  // namespace bernmod
