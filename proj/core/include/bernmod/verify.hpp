#pragma once

// Spot checks of certificate files: each selected (p, k, value) is
// recomputed with the O(p) single-index evaluation, which shares nothing
// with the table code beyond modarith.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <vector>

#include "bernmod/certificate.hpp"

namespace bernmod {

struct VerifyMode {
  std::optional<std::size_t> sample;  // unset: check every pair
  u64 seed = 0;
};

struct Mismatch {
  std::size_t line = 0;
  u64 p = 0;
  u64 k = 0;
  u64 recorded = 0;
  u64 computed = 0;
};

struct VerifyReport {
  std::size_t checked = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

/// n distinct indices from [0, population), ascending, reproducible for a
/// seed on every platform. n is capped at population.
std::vector<std::size_t> sample_indices(std::size_t population, std::size_t n, u64 seed);

VerifyReport verify_certificate(const CertificateFile& file, const VerifyMode& mode);
VerifyReport verify_certificate(const std::filesystem::path& path, const VerifyMode& mode);

}  // namespace bernmod
