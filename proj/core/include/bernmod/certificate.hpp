#pragma once

// Certificate files. Line oriented text:
//
//   #bernmod-cert v1 <lo> <hi>
//   <p> <i_p> <N_p> <k1>:<v1> <k2>:<v2> ...
//
// one line per prime in ascending order, pairs sorted by (value, k).

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bernmod/bernoulli.hpp"
#include "bernmod/kv.hpp"
#include "bernmod/lambda.hpp"

namespace bernmod {

struct CertificateRecord {
  u64 p = 0;
  u64 i_p = 0;
  std::vector<std::pair<u64, u64>> pairs;  // (k, value)

  friend bool operator==(const CertificateRecord&, const CertificateRecord&) = default;
};

struct CertificateFile {
  u64 lo = 0;
  u64 hi = 0;
  std::vector<CertificateRecord> records;
  std::vector<std::size_t> line_numbers;  // 1-based, parallel to records
};

/// Everything the scan learns about one prime.
struct PrimeRecord {
  u64 p = 0;
  u64 i_p = 0;
  CertificatePairs certificate;
  bool consistency_ok = false;
  std::vector<VandiverResult> vandiver;
  std::optional<LambdaReport> lambda;

  CertificateRecord certificate_record() const;
};

std::string format_header(u64 lo, u64 hi);

/// Newline terminated.
std::string format_record(const CertificateRecord& r);

/// Parses "#bernmod-cert v1 lo hi". Throws FormatError.
std::pair<u64, u64> parse_header(std::string_view line, std::size_t line_no = 1);

/// Parses one record line (without the newline). Throws FormatError naming
/// line_no.
CertificateRecord parse_record(std::string_view line, std::size_t line_no);

CertificateFile parse_certificate(std::string_view text);
CertificateFile read_certificate(const std::filesystem::path& path);

}  // namespace bernmod
