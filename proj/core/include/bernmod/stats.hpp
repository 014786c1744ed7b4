#pragma once

// Index-of-irregularity statistics over a certificate covering a range,
// set against the Poisson(1/2) model p_i = e^(-1/2) / (2^i i!).

#include <filesystem>
#include <string>
#include <vector>

#include "bernmod/certificate.hpp"

namespace bernmod {

struct StatsTable {
  u64 lo = 0;
  u64 hi = 0;
  u64 N = 0;
  std::vector<u64> counts;  // counts[i] = N_i
  double sum_inv_p = 0;     // over irregular pairs

  double ratio(std::size_t i) const;
};

double poisson_half(unsigned i);

/// Requires one record for every prime in [lo, hi); throws FormatError
/// otherwise.
StatsTable compute_stats(const CertificateFile& file);
StatsTable compute_stats(const std::filesystem::path& path);

/// Columns i, N_i, N_i/N, p_i, N*p_i for i up to max(7, largest index),
/// then the sum of 1/p.
std::string format_stats(const StatsTable& t);

}  // namespace bernmod
