#include "bernmod/certificate.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace bernmod {

namespace {

[[noreturn]] void bad(std::size_t line_no, std::string_view what) {
  throw Error(Errc::FormatError, fmt::format("line {}: {}", line_no, what));
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const std::size_t j = s.find(' ', i);
    const std::size_t end = j == std::string_view::npos ? s.size() : j;
    out.push_back(s.substr(i, end - i));
    i = end + 1;
  }
  if (!s.empty() && s.back() == ' ') out.emplace_back();
  return out;
}

u64 number(std::string_view tok, std::size_t line_no) {
  u64 v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    bad(line_no, fmt::format("expected a decimal integer, got '{}'", tok));
  return v;
}

}  // namespace

CertificateRecord PrimeRecord::certificate_record() const {
  return {p, i_p, certificate.pairs};
}

std::string format_header(u64 lo, u64 hi) {
  return fmt::format("#bernmod-cert v1 {} {}\n", lo, hi);
}

std::string format_record(const CertificateRecord& r) {
  std::string s = fmt::format("{} {} {}", r.p, r.i_p, r.pairs.size());
  for (const auto& [k, v] : r.pairs) fmt::format_to(std::back_inserter(s), " {}:{}", k, v);
  s += '\n';
  return s;
}

std::pair<u64, u64> parse_header(std::string_view line, std::size_t line_no) {
  const auto tok = split(line);
  if (tok.size() != 4 || tok[0] != "#bernmod-cert" || tok[1] != "v1")
    bad(line_no, "expected '#bernmod-cert v1 <lo> <hi>'");
  return {number(tok[2], line_no), number(tok[3], line_no)};
}

CertificateRecord parse_record(std::string_view line, std::size_t line_no) {
  const auto tok = split(line);
  if (tok.size() < 3) bad(line_no, "expected '<p> <i_p> <N_p> pairs...'");
  CertificateRecord r;
  r.p = number(tok[0], line_no);
  r.i_p = number(tok[1], line_no);
  const u64 n = number(tok[2], line_no);
  if (tok.size() - 3 != n)
    bad(line_no, fmt::format("N_p = {} but {} pairs present", n, tok.size() - 3));
  u64 zeros = 0;
  for (std::size_t i = 3; i < tok.size(); ++i) {
    const auto colon = tok[i].find(':');
    if (colon == std::string_view::npos) bad(line_no, fmt::format("pair '{}' lacks ':'", tok[i]));
    const u64 k = number(tok[i].substr(0, colon), line_no);
    const u64 v = number(tok[i].substr(colon + 1), line_no);
    if (v >= r.p) bad(line_no, fmt::format("value {} not reduced mod {}", v, r.p));
    if (!r.pairs.empty() && std::pair(v, k) <= std::pair(r.pairs.back().second, r.pairs.back().first))
      bad(line_no, "pairs not sorted by (value, k)");
    zeros += v == 0;
    r.pairs.emplace_back(k, v);
  }
  if (zeros != r.i_p)
    bad(line_no, fmt::format("i_p = {} but {} zero values", r.i_p, zeros));
  return r;
}

CertificateFile parse_certificate(std::string_view text) {
  CertificateFile f;
  std::size_t line_no = 0, pos = 0;
  bool header = false;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) bad(line_no + 1, "missing final newline");
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!header) {
      std::tie(f.lo, f.hi) = parse_header(line, line_no);
      header = true;
      continue;
    }
    auto r = parse_record(line, line_no);
    if (r.p < f.lo || r.p >= f.hi) bad(line_no, fmt::format("p = {} outside the header range", r.p));
    if (!f.records.empty() && r.p <= f.records.back().p) bad(line_no, "primes not ascending");
    f.records.push_back(std::move(r));
    f.line_numbers.push_back(line_no);
  }
  if (!header) bad(1, "empty certificate");
  return f;
}

CertificateFile read_certificate(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_certificate(ss.str());
}

}  // namespace bernmod
