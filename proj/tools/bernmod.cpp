// bernmod: command-line front end.
//
// Exit codes: 0 success, 1 usage or format error, 2 cross-check fault,
// 3 mathematical discovery.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "bernmod/bernoulli.hpp"
#include "bernmod/certificate.hpp"
#include "bernmod/kv.hpp"
#include "bernmod/lambda.hpp"
#include "bernmod/scan.hpp"
#include "bernmod/stats.hpp"
#include "bernmod/verify.hpp"

using namespace bernmod;

namespace {

enum Exit { kOk = 0, kUsage = 1, kFault = 2, kDiscovery = 3 };

// Irregular pairs from a certificate (zero values) or from "p k" lines.
std::vector<IrregularPair> read_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  std::vector<IrregularPair> out;
  if (text.rfind("#bernmod-cert", 0) == 0) {
    for (const auto& r : parse_certificate(text).records)
      for (const auto& [k, v] : r.pairs)
        if (v == 0) out.push_back({r.p, k});
    return out;
  }
  std::istringstream lines(text);
  std::string line;
  std::size_t no = 0;
  while (std::getline(lines, line)) {
    ++no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    u64 p = 0, k = 0;
    std::string rest;
    if (!(fields >> p >> k) || (fields >> rest))
      throw Error(Errc::FormatError, fmt::format("{}:{}: expected 'p k'", path, no));
    out.push_back({p, k});
  }
  return out;
}

int run_vandiver(const std::vector<IrregularPair>& pairs) {
  int rc = kOk;
  for (const auto& pr : pairs) {
    const auto r = vandiver_test(pr.p, pr.k);
    fmt::print("p={} k={} q={} z={} v={} {}\n", r.p, r.k, r.q, r.z, r.v,
               r.passed ? "PASS" : "FAIL");
    if (!r.passed) {
      fmt::print("DISCOVERY vandiver p={} k={} q={} z={} v={}\n", r.p, r.k, r.q, r.z, r.v);
      rc = kDiscovery;
    }
  }
  return rc;
}

int run_lambda(const std::vector<IrregularPair>& pairs) {
  int rc = kOk;
  for (const auto& pr : pairs) {
    const auto r = lambda_tests(pr.p, pr.k);
    if (!r.supported) {
      fmt::print("p={} k={} test1=0\nLAMBDA-UNSUPPORTED p={} k={}\n", r.p, r.k, r.p, r.k);
      continue;
    }
    fmt::print("p={} k={} test1=1 test2={} test3={} {}\n", r.p, r.k, int(*r.test2),
               int(*r.test3), r.all_true() ? "PASS" : "FAIL");
    if (!r.all_true()) {
      fmt::print("DISCOVERY lambda p={} k={} test2={} test3={}\n", r.p, r.k, int(*r.test2),
                 int(*r.test3));
      rc = kDiscovery;
    }
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bernoulli numbers mod p, irregular primes, Vandiver and lambda checks"};
  app.require_subcommand(1);

  ScanConfig scfg;
  std::string method = "voronoi";
  auto* scan_cmd = app.add_subcommand("scan", "scan the primes in [from, to)");
  scan_cmd->add_option("--from", scfg.lo, "first candidate")->required();
  scan_cmd->add_option("--to", scfg.hi, "end of range (exclusive)")->required();
  scan_cmd->add_option("--method", method, "voronoi, power-series or both")
      ->check(CLI::IsMember({"voronoi", "power-series", "both"}));
  scan_cmd->add_option("--workers", scfg.workers, "worker threads")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--out", scfg.out, "certificate file");
  scan_cmd->add_option("--checkpoint", scfg.checkpoint, "checkpoint file");
  scan_cmd->add_flag("--bernoulli-only", scfg.bernoulli_only, "skip Vandiver and lambda");

  std::string cert_file;
  std::size_t sample = 0;
  u64 seed = 0;
  auto* verify_cmd = app.add_subcommand("verify-cert", "recheck certificate pairs");
  verify_cmd->add_option("--file", cert_file)->required();
  auto* sample_opt = verify_cmd->add_option("--sample", sample, "number of pairs to check");
  verify_cmd->add_option("--seed", seed);

  u64 p = 0, k = 0;
  std::string pairs_file;
  auto* vandiver_cmd = app.add_subcommand("vandiver", "Kummer-Vandiver check");
  auto* lambda_cmd = app.add_subcommand("lambda", "lambda_p = i_p check");
  for (auto* cmd : {vandiver_cmd, lambda_cmd}) {
    auto* po = cmd->add_option("--p", p);
    auto* ko = cmd->add_option("--k", k);
    auto* fo = cmd->add_option("--pairs", pairs_file, "certificate or 'p k' lines");
    po->needs(ko);
    ko->needs(po);
    fo->excludes(po)->excludes(ko);
  }

  auto* bern_cmd = app.add_subcommand("bernoulli", "B_k mod p");
  bern_cmd->add_option("--p", p)->required();
  auto* bern_k = bern_cmd->add_option("--k", k, "single index; omit for the full table");

  auto* stats_cmd = app.add_subcommand("stats", "index statistics of a certificate");
  stats_cmd->add_option("--file", cert_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (scan_cmd->parsed()) {
      scfg.method = *parse_scan_method(method);
      const auto s = scan(scfg);
      for (const auto& f : s.faults) fmt::print("FAULT p={} {}\n", f.p, f.message);
      for (const auto& l : s.lambda_unsupported) fmt::print("{}\n", l);
      for (const auto& d : s.discoveries) fmt::print("{}\n", d);
      fmt::print("primes={} irregular={} pairs={} max_index={}{}\n", s.primes,
                 s.irregular_primes, s.irregular_pairs, s.max_index,
                 s.resumed ? " (resumed)" : "");
      if (!s.faults.empty()) return kFault;
      return s.discoveries.empty() ? kOk : kDiscovery;
    }
    if (verify_cmd->parsed()) {
      VerifyMode mode;
      if (*sample_opt) mode.sample = sample;
      mode.seed = seed;
      const auto rep = verify_certificate(cert_file, mode);
      for (const auto& m : rep.mismatches)
        fmt::print("MISMATCH line={} p={} k={} recorded={} computed={}\n", m.line, m.p, m.k,
                   m.recorded, m.computed);
      fmt::print("checked={} mismatches={}\n", rep.checked, rep.mismatches.size());
      return rep.ok() ? kOk : kFault;
    }
    if (vandiver_cmd->parsed() || lambda_cmd->parsed()) {
      std::vector<IrregularPair> pairs;
      if (!pairs_file.empty())
        pairs = read_pairs(pairs_file);
      else if (p != 0)
        pairs.push_back({p, k});
      else
        throw Error(Errc::InvalidArgument, "give --p and --k, or --pairs");
      return vandiver_cmd->parsed() ? run_vandiver(pairs) : run_lambda(pairs);
    }
    if (bern_cmd->parsed()) {
      const FieldCtx ctx(p);
      if (*bern_k) {
        fmt::print("{}\n", bernoulli_single(ctx, k));
      } else {
        const auto t = bernoulli_all_voronoi(ctx);
        for (std::size_t j = 0; j < t.values.size(); ++j) fmt::print("{} {}\n", 2 * j, t.values[j]);
      }
      return kOk;
    }
    if (stats_cmd->parsed()) {
      fmt::print("{}", format_stats(compute_stats(cert_file)));
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "bernmod: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::MethodDisagreement:
      case Errc::ConsistencyFailure:
      case Errc::SchemeDisagreement:
        return kFault;
      default:
        return kUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "bernmod: " << e.what() << "\n";
    return kFault;
  }
  return kUsage;
}
