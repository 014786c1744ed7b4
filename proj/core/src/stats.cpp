#include "bernmod/stats.hpp"

#include <cmath>

#include <fmt/format.h>

namespace bernmod {

double StatsTable::ratio(std::size_t i) const {
  return N == 0 || i >= counts.size() ? 0.0 : static_cast<double>(counts[i]) / N;
}

double poisson_half(unsigned i) {
  double v = std::exp(-0.5);
  for (unsigned j = 1; j <= i; ++j) v /= 2.0 * j;
  return v;
}

StatsTable compute_stats(const CertificateFile& file) {
  StatsTable t;
  t.lo = file.lo;
  t.hi = file.hi;
  PrimeStream primes(file.lo, file.hi);
  for (std::size_t r = 0; r < file.records.size(); ++r) {
    const auto& rec = file.records[r];
    const auto expect = primes.next();
    if (!expect || *expect != rec.p)
      throw Error(Errc::FormatError,
                  fmt::format("line {}: p = {} but the next prime in range is {}",
                              file.line_numbers[r], rec.p, expect ? *expect : 0));
    if (rec.i_p >= t.counts.size()) t.counts.resize(rec.i_p + 1, 0);
    ++t.counts[rec.i_p];
    ++t.N;
    t.sum_inv_p += static_cast<double>(rec.i_p) / static_cast<double>(rec.p);
  }
  if (const auto missing = primes.next())
    throw Error(Errc::FormatError, fmt::format("certificate stops before prime {}", *missing));
  if (t.counts.empty()) t.counts.push_back(0);
  return t;
}

StatsTable compute_stats(const std::filesystem::path& path) {
  return compute_stats(read_certificate(path));
}

namespace {

// Fixed notation with four significant digits.
std::string sig4(double x) {
  if (x == 0) return "0";
  const int mag = static_cast<int>(std::floor(std::log10(x)));
  return fmt::format("{:.{}f}", x, std::max(0, 3 - mag));
}

}  // namespace

std::string format_stats(const StatsTable& t) {
  std::string s = fmt::format("# range [{}, {}), N = {}\n", t.lo, t.hi, t.N);
  s += fmt::format("{:>2} {:>10} {:>12} {:>12} {:>12}\n", "i", "N_i", "N_i/N", "p_i", "N*p_i");
  const std::size_t rows = std::max<std::size_t>(8, t.counts.size());
  for (std::size_t i = 0; i < rows; ++i) {
    const u64 ni = i < t.counts.size() ? t.counts[i] : 0;
    const double pi = poisson_half(static_cast<unsigned>(i));
    s += fmt::format("{:>2} {:>10} {:>12} {:>12} {:>12.0f}\n", i, ni, sig4(t.ratio(i)), sig4(pi),
                     pi * static_cast<double>(t.N));
  }
  s += fmt::format("sum 1/p over irregular pairs = {:.6f}\n", t.sum_inv_p);
  return s;
}

}  // namespace bernmod
