#pragma once

// Range scan: every prime in [lo, hi) goes through Bernoulli table,
// consistency identity, certificate, and (unless bernoulli_only) the
// Vandiver and lambda checks on each irregular pair. Records are written in
// ascending p whatever the worker count, and a checkpoint lets an
// interrupted scan resume to a byte-identical file.
//
// Checkpoint file:
//
//   #bernmod-checkpoint v1
//   range <lo> <hi>
//   method <voronoi|power-series|both>
//   bernoulli_only <0|1>
//   last_p <p or 0>
//   offset <bytes of output that are final>

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bernmod/certificate.hpp"

namespace bernmod {

enum class ScanMethod { voronoi, power_series, both };

std::string_view to_string(ScanMethod m) noexcept;
std::optional<ScanMethod> parse_scan_method(std::string_view s) noexcept;

struct ScanConfig {
  u64 lo = 3;
  u64 hi = 4;
  ScanMethod method = ScanMethod::voronoi;
  unsigned workers = 1;
  std::filesystem::path out;         // empty: no certificate file
  std::filesystem::path checkpoint;  // empty: no checkpointing
  bool bernoulli_only = false;
  MulThresholds thresholds = kDefaultThresholds;
  std::size_t checkpoint_every = 64;

  // Called on each computed table before the consistency check; lets tests
  // inject faults.
  std::function<void(BernoulliTable&)> tamper;
  // Called in ascending p for every accepted record.
  std::function<void(const PrimeRecord&)> on_record;
  // Test hook: abandon the scan (no final checkpoint) after this many
  // records have been written. 0 disables.
  std::size_t stop_after = 0;
};

struct FaultReport {
  u64 p = 0;
  Errc code = Errc::ConsistencyFailure;
  std::string message;
};

struct ScanSummary {
  u64 primes = 0;  // records written in this run
  u64 irregular_primes = 0;
  u64 irregular_pairs = 0;
  u64 max_index = 0;
  std::vector<FaultReport> faults;
  std::vector<std::string> discoveries;  // machine-readable DISCOVERY lines
  std::vector<std::string> lambda_unsupported;  // LAMBDA-UNSUPPORTED lines
  bool resumed = false;
  bool stopped_early = false;
};

/// The full pipeline for one prime. Throws MethodDisagreement or
/// ConsistencyFailure.
PrimeRecord process_prime(u64 p, const ScanConfig& cfg);

ScanSummary scan(const ScanConfig& cfg);

/// Discovery lines for one record (failed Vandiver or lambda tests).
std::vector<std::string> discoveries(const PrimeRecord& r);

}  // namespace bernmod
