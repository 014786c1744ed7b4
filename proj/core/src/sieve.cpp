#include <algorithm>
#include <cmath>

#include "bernmod/modarith.hpp"

namespace bernmod {

namespace {

// Odd numbers per segment; one byte each.
constexpr u64 kSegmentOdds = u64{1} << 18;

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint32_t> odd_primes_upto(u64 limit) {
  std::vector<std::uint32_t> out;
  if (limit < 3) return out;
  std::vector<bool> composite(limit / 2 + 1, false);  // index i <-> 2i + 1
  for (u64 i = 1; 2 * i + 1 <= limit; ++i) {
    if (composite[i]) continue;
    const u64 q = 2 * i + 1;
    out.push_back(static_cast<std::uint32_t>(q));
    for (u64 j = q * q; j <= limit; j += 2 * q) composite[j / 2] = true;
  }
  return out;
}

}  // namespace

PrimeStream::PrimeStream(u64 lo, u64 hi) : lo_(lo), hi_(hi) {
  if (hi > (u64{1} << 62))
    throw Error(Errc::InvalidArgument, "sieve bound too large");
  base_ = odd_primes_upto(hi > 0 ? isqrt(hi) : 0);
  emitted_two_ = !(lo <= 2 && 2 < hi);
  seg_lo_ = std::max<u64>(lo, 3) | 1;
  fill_segment();
}

void PrimeStream::fill_segment() {
  seg_.clear();
  pos_ = 0;
  if (seg_lo_ >= hi_) return;
  const u64 odds = std::min<u64>(kSegmentOdds, (hi_ - seg_lo_ + 1) / 2);
  seg_.assign(odds, 1);
  const u64 seg_hi = seg_lo_ + 2 * odds;  // exclusive
  for (std::uint32_t q32 : base_) {
    const u64 q = q32;
    if (q * q >= seg_hi) break;
    u64 start = std::max(q * q, (seg_lo_ + q - 1) / q * q);
    if ((start & 1) == 0) start += q;
    for (u64 j = (start - seg_lo_) / 2; j < odds; j += q) seg_[j] = 0;
  }
  if (seg_lo_ == 1) seg_[0] = 0;
}

std::optional<u64> PrimeStream::next() {
  if (!emitted_two_) {
    emitted_two_ = true;
    return 2;
  }
  while (!seg_.empty()) {
    while (pos_ < seg_.size()) {
      const std::size_t i = pos_++;
      if (seg_[i]) {
        const u64 n = seg_lo_ + 2 * i;
        if (n >= hi_) return std::nullopt;
        return n;
      }
    }
    seg_lo_ += 2 * seg_.size();
    fill_segment();
  }
  return std::nullopt;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (lo >= hi) return out;
  PrimeStream stream(lo, hi);
  while (auto p = stream.next()) out.push_back(*p);
  return out;
}

u64 count_primes(u64 lo, u64 hi) {
  if (lo >= hi) return 0;
  PrimeStream stream(lo, hi);
  u64 n = 0;
  while (stream.next()) ++n;
  return n;
}

}  // namespace bernmod
