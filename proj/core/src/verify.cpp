#include "bernmod/verify.hpp"

#include <algorithm>
#include <random>

#include <fmt/format.h>

namespace bernmod {

namespace {

// Uniform in [0, n) by rejection; std distributions differ across
// standard libraries.
u64 bounded(std::mt19937_64& rng, u64 n) {
  const u64 limit = ~u64{0} - (~u64{0} % n);
  u64 x;
  do x = rng(); while (x >= limit);
  return x % n;
}

}  // namespace

std::vector<std::size_t> sample_indices(std::size_t population, std::size_t n, u64 seed) {
  n = std::min(n, population);
  std::vector<std::size_t> idx(population);
  for (std::size_t i = 0; i < population; ++i) idx[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < n; ++i)
    std::swap(idx[i], idx[i + bounded(rng, population - i)]);
  idx.resize(n);
  std::sort(idx.begin(), idx.end());
  return idx;
}

VerifyReport verify_certificate(const CertificateFile& file, const VerifyMode& mode) {
  struct Entry {
    std::size_t rec, pair;
  };
  std::vector<Entry> entries;
  for (std::size_t r = 0; r < file.records.size(); ++r)
    for (std::size_t j = 0; j < file.records[r].pairs.size(); ++j) entries.push_back({r, j});

  std::vector<std::size_t> chosen;
  if (mode.sample) {
    chosen = sample_indices(entries.size(), *mode.sample, mode.seed);
  } else {
    chosen.resize(entries.size());
    for (std::size_t i = 0; i < chosen.size(); ++i) chosen[i] = i;
  }

  VerifyReport rep;
  std::optional<FieldCtx> ctx;
  for (std::size_t i : chosen) {
    const auto& rec = file.records[entries[i].rec];
    const auto [k, v] = rec.pairs[entries[i].pair];
    const std::size_t line = file.line_numbers[entries[i].rec];
    if (!ctx || ctx->p() != rec.p) {
      if (rec.p < 5 || !is_prime(rec.p))
        throw Error(Errc::FormatError, fmt::format("line {}: {} is not a prime >= 5", line, rec.p));
      ctx.emplace(rec.p);
    }
    if (k < 2 || k + 3 > rec.p || k % 2 != 0)
      throw Error(Errc::FormatError, fmt::format("line {}: bad index k = {}", line, k));
    const u64 got = bernoulli_single(*ctx, k);
    ++rep.checked;
    if (got != v) rep.mismatches.push_back({line, rec.p, k, v, got});
  }
  return rep;
}

VerifyReport verify_certificate(const std::filesystem::path& path, const VerifyMode& mode) {
  return verify_certificate(read_certificate(path), mode);
}

}  // namespace bernmod
