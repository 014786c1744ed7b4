// Unsigned big-integer product for Kronecker substitution: schoolbook on
// short operands, Karatsuba above, slicing for unbalanced shapes.

#include <algorithm>

#include "poly_kernels.hpp"

namespace bernmod::detail {

namespace {

constexpr std::size_t kKaratsubaLimbs = 40;

// out[0, na + nb) = a * b; out must be zeroed by the caller.
void mul_basecase(u64* out, const u64* a, std::size_t na, const u64* b, std::size_t nb) {
  for (std::size_t i = 0; i < na; ++i) {
    u64 carry = 0;
    const u64 ai = a[i];
    u64* row = out + i;
    for (std::size_t j = 0; j < nb; ++j) {
      const u128 t = static_cast<u128>(ai) * b[j] + row[j] + carry;
      row[j] = static_cast<u64>(t);
      carry = static_cast<u64>(t >> 64);
    }
    row[nb] = carry;
  }
}

// r[0, n) += a[0, na), propagating the carry through r[na, n).
void add_into(u64* r, std::size_t n, const u64* a, std::size_t na) {
  u64 carry = 0;
  std::size_t i = 0;
  for (; i < na; ++i) {
    const u128 t = static_cast<u128>(r[i]) + a[i] + carry;
    r[i] = static_cast<u64>(t);
    carry = static_cast<u64>(t >> 64);
  }
  for (; carry && i < n; ++i) {
    r[i] += 1;
    carry = r[i] == 0;
  }
}

// r[0, n) -= a[0, na); the caller guarantees r >= a.
void sub_from(u64* r, std::size_t n, const u64* a, std::size_t na) {
  u64 borrow = 0;
  std::size_t i = 0;
  for (; i < na; ++i) {
    const u64 ri = r[i];
    const u64 d = ri - a[i] - borrow;
    borrow = (ri < a[i]) || (ri - a[i] < borrow);
    r[i] = d;
  }
  for (; borrow && i < n; ++i) {
    borrow = r[i] == 0;
    r[i] -= 1;
  }
}

// s[0, max(na, nb) + 1) = a + b.
std::vector<u64> add(const u64* a, std::size_t na, const u64* b, std::size_t nb) {
  if (na < nb) {
    std::swap(a, b);
    std::swap(na, nb);
  }
  std::vector<u64> s(na + 1, 0);
  std::copy(a, a + na, s.begin());
  add_into(s.data(), s.size(), b, nb);
  return s;
}

void mul_into(u64* out, const u64* a, std::size_t na, const u64* b, std::size_t nb);

void karatsuba(u64* out, const u64* a, std::size_t na, const u64* b, std::size_t nb) {
  // na >= nb > h; a = a0 + a1 X, b = b0 + b1 X with X = 2^(64h).
  const std::size_t h = (na + 1) / 2;
  const u64 *a0 = a, *a1 = a + h, *b0 = b, *b1 = b + h;
  const std::size_t na1 = na - h, nb1 = nb - h;

  std::vector<u64> z0(2 * h, 0), z2(na1 + nb1, 0);
  mul_into(z0.data(), a0, h, b0, h);
  mul_into(z2.data(), a1, na1, b1, nb1);

  const auto sa = add(a0, h, a1, na1);
  const auto sb = add(b0, h, b1, nb1);
  std::vector<u64> z1(sa.size() + sb.size(), 0);
  mul_into(z1.data(), sa.data(), sa.size(), sb.data(), sb.size());
  sub_from(z1.data(), z1.size(), z0.data(), z0.size());
  sub_from(z1.data(), z1.size(), z2.data(), z2.size());

  const std::size_t n = na + nb;
  std::copy(z0.begin(), z0.end(), out);
  std::copy(z2.begin(), z2.end(), out + 2 * h);
  // z1 may carry leading zero limbs past the product length.
  std::size_t n1 = z1.size();
  while (n1 > 0 && z1[n1 - 1] == 0) --n1;
  add_into(out + h, n - h, z1.data(), n1);
}

void mul_into(u64* out, const u64* a, std::size_t na, const u64* b, std::size_t nb) {
  if (na < nb) {
    std::swap(a, b);
    std::swap(na, nb);
  }
  if (nb == 0) return;
  if (nb < kKaratsubaLimbs) {
    mul_basecase(out, a, na, b, nb);
    return;
  }
  if (nb <= (na + 1) / 2) {
    // Unbalanced: slice a into nb-limb pieces.
    std::vector<u64> part(2 * nb, 0);
    for (std::size_t off = 0; off < na; off += nb) {
      const std::size_t len = std::min(nb, na - off);
      std::fill(part.begin(), part.end(), 0);
      mul_into(part.data(), a + off, len, b, nb);
      add_into(out + off, na + nb - off, part.data(), len + nb);
    }
    return;
  }
  karatsuba(out, a, na, b, nb);
}

}  // namespace

std::vector<u64> bigint_mul(Coeffs a, Coeffs b) {
  std::vector<u64> out(a.size() + b.size(), 0);
  mul_into(out.data(), a.data(), a.size(), b.data(), b.size());
  return out;
}

}  // namespace bernmod::detail
