#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "bernmod/scan.hpp"
#include "bernmod/stats.hpp"
#include "bernmod/verify.hpp"

using namespace bernmod;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "bernmod_test_harness";
  fs::create_directories(dir);
  const auto p = dir / name;
  fs::remove(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << s;
}

// B_k mod p for even k by the recurrence, for an independent scan oracle.
std::vector<u64> oracle_irregular(u64 p) {
  const std::size_t n = p - 2;
  std::vector<std::vector<u64>> C(n + 1, std::vector<u64>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    C[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) C[i][j] = (C[i - 1][j - 1] + (j < i ? C[i - 1][j] : 0)) % p;
  }
  std::vector<u64> B(n, 0), ks;
  B[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    u64 s = 0;
    for (std::size_t j = 0; j < k; ++j) s = (s + C[k + 1][j] * B[j]) % p;
    B[k] = mulmod(p - s, invmod(C[k + 1][k] % p, p), p);
    if (k % 2 == 0 && B[k] == 0) ks.push_back(k);
  }
  return ks;
}

}  // namespace

TEST_CASE("record format round trip") {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 500; ++it) {
    CertificateRecord r;
    r.p = 5 + rng() % 1000000;
    const std::size_t n = rng() % 40;
    std::vector<std::pair<u64, u64>> vk;
    for (std::size_t i = 0; i < n; ++i) vk.emplace_back(rng() % 4 == 0 ? 0 : rng() % r.p, 2 * (rng() % 500000));
    std::sort(vk.begin(), vk.end());
    vk.erase(std::unique(vk.begin(), vk.end()), vk.end());
    for (const auto& [v, k] : vk) {
      r.pairs.emplace_back(k, v);
      r.i_p += v == 0;
    }
    std::string line = format_record(r);
    REQUIRE(line.back() == '\n');
    line.pop_back();
    CHECK(parse_record(line, 1) == r);
  }
  CHECK(format_record({37, 1, {{32, 0}, {2, 1}}}) == "37 1 2 32:0 2:1\n");
  CHECK(format_header(3, 100) == "#bernmod-cert v1 3 100\n");
}

TEST_CASE("parser rejects malformed lines") {
  const auto code = [](const std::string& s) {
    try {
      parse_record(s, 7);
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("line 7") != std::string::npos);
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  CHECK(code("37 1 2 32:0") == Errc::FormatError);       // N_p mismatch
  CHECK(code("37 0 1 32:0") == Errc::FormatError);       // i_p mismatch
  CHECK(code("37 1 2 32:0  2:1") == Errc::FormatError);  // double space
  CHECK(code("37 0 2 2:5 4:1") == Errc::FormatError);    // unsorted
  CHECK(code("37 0 1 2:40") == Errc::FormatError);       // unreduced
  CHECK(code("37 0 1 2-4") == Errc::FormatError);
  CHECK(code("x 0 0") == Errc::FormatError);
  CHECK_THROWS_AS(parse_header("#bernmod-cert v2 3 4"), Error);
  CHECK_THROWS_AS(parse_certificate("#bernmod-cert v1 3 100\n37 1 1 32:0"), Error);
}

TEST_CASE("scan(3, 100)") {
  ScanConfig cfg;
  cfg.lo = 3;
  cfg.hi = 100;
  cfg.method = ScanMethod::both;
  std::vector<PrimeRecord> recs;
  cfg.on_record = [&](const PrimeRecord& r) { recs.push_back(r); };
  const auto s = scan(cfg);
  CHECK(s.faults.empty());
  CHECK(s.discoveries.empty());
  REQUIRE(recs.size() == count_primes(3, 100));
  for (const auto& r : recs) {
    const auto ks = oracle_irregular(r.p);
    CHECK(r.i_p == ks.size());
    CHECK(r.consistency_ok);
    if (r.p < 37) CHECK(r.i_p == 0);
    CHECK(r.vandiver.size() == r.i_p);
    REQUIRE(r.lambda.has_value());
    CHECK(r.lambda->verdict == LambdaVerdict::established);
    for (std::size_t i = 0; i < r.i_p; ++i) {
      CHECK(r.certificate.pairs[i].first == ks[i]);
      CHECK(r.certificate.pairs[i].second == 0);
      CHECK(r.vandiver[i].passed);
    }
  }
  CHECK(recs.front().p == 3);
  CHECK(recs.front().certificate.pairs.empty());
}

TEST_CASE("output is identical across worker counts") {
  std::string first;
  for (unsigned w : {1u, 2u, 5u}) {
    ScanConfig cfg;
    cfg.lo = 3;
    cfg.hi = 3000;
    cfg.workers = w;
    cfg.out = scratch("workers_" + std::to_string(w) + ".cert");
    const auto s = scan(cfg);
    CHECK(s.faults.empty());
    const auto text = slurp(cfg.out);
    if (first.empty())
      first = text;
    else
      CHECK(text == first);
  }
  const auto file = parse_certificate(first);
  CHECK(file.records.size() == count_primes(3, 3000));
  for (const auto& r : file.records) CHECK(r.pairs.size() == certificate_size(r.p));
}

TEST_CASE("interrupted scan resumes to a byte-identical file") {
  ScanConfig full;
  full.lo = 100;
  full.hi = 4000;
  full.workers = 2;
  full.out = scratch("full.cert");
  scan(full);
  const auto want = slurp(full.out);

  for (std::size_t stop : {1u, 17u, 64u, 200u}) {
    ScanConfig cfg = full;
    cfg.out = scratch("resumed.cert");
    cfg.checkpoint = scratch("resumed.ckpt");
    cfg.checkpoint_every = 16;
    cfg.stop_after = stop;
    const auto first = scan(cfg);
    CHECK(first.stopped_early);
    CHECK(slurp(cfg.out) != want);
    cfg.stop_after = 0;
    cfg.workers = 3;
    const bool had_checkpoint = fs::exists(cfg.checkpoint);
    CHECK(had_checkpoint == (stop >= 16));
    const auto second = scan(cfg);
    CHECK(second.resumed == had_checkpoint);
    CHECK(slurp(cfg.out) == want);
  }

  // A checkpoint from another configuration is refused.
  ScanConfig other = full;
  other.out = scratch("other.cert");
  other.checkpoint = scratch("other.ckpt");
  scan(other);
  other.method = ScanMethod::power_series;
  CHECK_THROWS_AS(scan(other), Error);
}

TEST_CASE("injected corruption is caught before anything is written") {
  ScanConfig cfg;
  cfg.lo = 3;
  cfg.hi = 200;
  cfg.out = scratch("faulty.cert");
  cfg.tamper = [](BernoulliTable& t) {
    if (t.p == 101) t.values[10] = (t.values[10] + 1) % t.p;
  };
  const auto s = scan(cfg);
  REQUIRE(s.faults.size() == 1);
  CHECK(s.faults[0].p == 101);
  CHECK(s.faults[0].code == Errc::ConsistencyFailure);
  const auto file = read_certificate(cfg.out);
  for (const auto& r : file.records) CHECK(r.p != 101);
  CHECK(file.records.size() == count_primes(3, 200) - 1);

  cfg.method = ScanMethod::both;
  const auto s2 = scan(cfg);
  REQUIRE(s2.faults.size() == 1);
  CHECK(s2.faults[0].code == Errc::MethodDisagreement);
}

TEST_CASE("scan argument checks") {
  ScanConfig cfg;
  cfg.lo = 2;
  cfg.hi = 10;
  CHECK_THROWS_AS(scan(cfg), Error);
  cfg.lo = 10;
  cfg.hi = 10;
  CHECK_THROWS_AS(scan(cfg), Error);
  cfg.hi = u64{1} << 31;
  CHECK_THROWS_AS(scan(cfg), Error);
}

TEST_CASE("verify_certificate") {
  ScanConfig cfg;
  cfg.lo = 3;
  cfg.hi = 1000;
  cfg.out = scratch("verify.cert");
  cfg.bernoulli_only = true;
  scan(cfg);
  const auto rep = verify_certificate(cfg.out, {});
  CHECK(rep.ok());
  CHECK(rep.checked > 1000);

  // Flip one digit: the last digit of the largest value on some line, moved
  // up by one so the line stays sorted and reduced.
  const auto text = slurp(cfg.out);
  const auto file = parse_certificate(text);
  std::string flipped;
  std::size_t line = 0;
  u64 prime = 0;
  for (std::size_t i = 0; i < file.records.size() && !line; ++i) {
    const auto& r = file.records[i];
    if (r.pairs.empty() || r.pairs.back().second % 10 == 9 || r.pairs.back().second + 1 >= r.p ||
        r.pairs.back().second == 0)
      continue;
    std::string row = format_record(r);
    const std::size_t d = row.size() - 2;
    row[d] = static_cast<char>(row[d] + 1);
    const auto at = text.find("\n" + format_record(r));
    REQUIRE(at != std::string::npos);
    flipped = text.substr(0, at + 1) + row + text.substr(at + 1 + row.size());
    line = file.line_numbers[i];
    prime = r.p;
  }
  REQUIRE(line != 0);
  const auto bad = scratch("flipped.cert");
  spit(bad, flipped);
  const auto r2 = verify_certificate(bad, {});
  REQUIRE(r2.mismatches.size() == 1);
  CHECK(r2.mismatches[0].p == prime);
  CHECK(r2.mismatches[0].line == line);

  const auto s1 = verify_certificate(cfg.out, {std::size_t{25}, 99});
  const auto s2 = verify_certificate(cfg.out, {std::size_t{25}, 99});
  CHECK(s1.checked == 25);
  CHECK(s2.checked == 25);
  CHECK(s1.ok());
  CHECK(sample_indices(1000, 25, 99) == sample_indices(1000, 25, 99));
  CHECK(sample_indices(1000, 25, 99) != sample_indices(1000, 25, 100));
  CHECK(sample_indices(10, 25, 1).size() == 10);
  // Pinned so that a change of generator or draw is noticed.
  CHECK(sample_indices(100, 5, 42) == std::vector<std::size_t>{6, 16, 57, 78, 98});

  spit(bad, "#bernmod-cert v1 3 100\n5 0 1 2:x\n");
  try {
    verify_certificate(bad, {});
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FormatError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("stats") {
  CHECK(poisson_half(0) == doctest::Approx(0.60653).epsilon(1e-5));
  CHECK(poisson_half(7) == doctest::Approx(9.4e-7).epsilon(0.01));
  ScanConfig cfg;
  cfg.lo = 3;
  cfg.hi = 2000;
  cfg.out = scratch("stats.cert");
  cfg.bernoulli_only = true;
  scan(cfg);
  const auto t = compute_stats(cfg.out);
  CHECK(t.N == count_primes(3, 2000));
  u64 total = 0;
  for (u64 c : t.counts) total += c;
  CHECK(total == t.N);
  CHECK(t.counts[0] > t.counts[1]);
  const auto text = format_stats(t);
  CHECK(text.find("0.6065") != std::string::npos);

  // A hole in the range is rejected.
  auto cert = slurp(cfg.out);
  const auto pos = cert.find("\n101 ");
  cert.erase(pos + 1, cert.find('\n', pos + 1) - pos);
  const auto holed = scratch("holed.cert");
  spit(holed, cert);
  CHECK_THROWS_AS(compute_stats(holed), Error);
}
