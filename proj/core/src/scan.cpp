#include "bernmod/scan.hpp"

#include <condition_variable>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <variant>

#include <fmt/format.h>

namespace bernmod {

std::string_view to_string(ScanMethod m) noexcept {
  switch (m) {
    case ScanMethod::voronoi: return "voronoi";
    case ScanMethod::power_series: return "power-series";
    case ScanMethod::both: return "both";
  }
  return "?";
}

std::optional<ScanMethod> parse_scan_method(std::string_view s) noexcept {
  if (s == "voronoi") return ScanMethod::voronoi;
  if (s == "power-series") return ScanMethod::power_series;
  if (s == "both") return ScanMethod::both;
  return std::nullopt;
}

PrimeRecord process_prime(u64 p, const ScanConfig& cfg) {
  PrimeRecord rec;
  rec.p = p;
  const FieldCtx ctx(p);

  BernoulliTable table;
  if (cfg.method == ScanMethod::power_series) {
    table = bernoulli_all_powerseries(ctx, cfg.thresholds);
  } else {
    table = bernoulli_all_voronoi(ctx, cfg.thresholds);
  }
  if (cfg.tamper) cfg.tamper(table);
  if (cfg.method == ScanMethod::both) {
    const auto other = bernoulli_all_powerseries(ctx, cfg.thresholds);
    for (std::size_t j = 0; j < table.values.size(); ++j)
      if (table.values[j] != other.values[j])
        throw Error(Errc::MethodDisagreement,
                    fmt::format("p = {}, k = {}: voronoi {} vs power-series {}", p, 2 * j,
                                table.values[j], other.values[j]));
  }
  if (!consistency_check(table))
    throw Error(Errc::ConsistencyFailure,
                fmt::format("p = {}: sum 2^k (k+1) B_k != -4 mod p", p));
  rec.consistency_ok = true;

  const auto pairs = irregular_pairs(table);
  rec.i_p = pairs.size();
  rec.certificate = certificate_pairs(table);
  if (!cfg.bernoulli_only) {
    for (const auto& pr : pairs) rec.vandiver.push_back(vandiver_test(p, pr.k));
    rec.lambda = lambda_verdict(p, pairs);
  }
  return rec;
}

std::vector<std::string> discoveries(const PrimeRecord& r) {
  std::vector<std::string> out;
  for (const auto& v : r.vandiver)
    if (!v.passed)
      out.push_back(fmt::format("DISCOVERY vandiver p={} k={} q={} z={} v={}", v.p, v.k, v.q,
                                v.z, v.v));
  if (r.lambda)
    for (const auto& l : r.lambda->pairs)
      if (l.supported && !l.all_true())
        out.push_back(fmt::format("DISCOVERY lambda p={} k={} test2={} test3={}", l.p, l.k,
                                  int(*l.test2), int(*l.test3)));
  return out;
}

namespace {

struct Checkpoint {
  u64 lo = 0, hi = 0;
  std::string method;
  bool bernoulli_only = false;
  u64 last_p = 0;
  u64 offset = 0;
};

std::string format_checkpoint(const Checkpoint& c) {
  return fmt::format(
      "#bernmod-checkpoint v1\nrange {} {}\nmethod {}\nbernoulli_only {}\nlast_p {}\n"
      "offset {}\n",
      c.lo, c.hi, c.method, int(c.bernoulli_only), c.last_p, c.offset);
}

Checkpoint read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open checkpoint " + path.string());
  std::string magic, version, key;
  Checkpoint c;
  int bo = 0;
  in >> magic >> version;
  if (magic != "#bernmod-checkpoint" || version != "v1")
    throw Error(Errc::FormatError, "not a v1 checkpoint: " + path.string());
  const auto expect = [&](const char* want) {
    if (!(in >> key) || key != want)
      throw Error(Errc::FormatError, fmt::format("checkpoint: expected '{}'", want));
  };
  expect("range");
  in >> c.lo >> c.hi;
  expect("method");
  in >> c.method;
  expect("bernoulli_only");
  in >> bo;
  expect("last_p");
  in >> c.last_p;
  expect("offset");
  in >> c.offset;
  if (!in) throw Error(Errc::FormatError, "truncated checkpoint " + path.string());
  c.bernoulli_only = bo != 0;
  return c;
}

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& c) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << format_checkpoint(c);
    out.flush();
    if (!out) throw Error(Errc::IoError, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

using Outcome = std::variant<PrimeRecord, FaultReport>;

}  // namespace

ScanSummary scan(const ScanConfig& cfg) {
  if (cfg.lo < 3 || cfg.lo >= cfg.hi || cfg.hi >= (u64{1} << 31))
    throw Error(Errc::InvalidArgument,
                fmt::format("scan range must satisfy 3 <= lo < hi < 2^31, got [{}, {})",
                            cfg.lo, cfg.hi));
  ScanSummary summary;
  Checkpoint cp{cfg.lo, cfg.hi, std::string(to_string(cfg.method)), cfg.bernoulli_only, 0, 0};

  // Resume or start the output.
  std::ofstream out;
  if (!cfg.checkpoint.empty() && std::filesystem::exists(cfg.checkpoint)) {
    const Checkpoint old = read_checkpoint(cfg.checkpoint);
    if (old.lo != cp.lo || old.hi != cp.hi || old.method != cp.method ||
        old.bernoulli_only != cp.bernoulli_only)
      throw Error(Errc::InvalidArgument, "checkpoint belongs to a different scan configuration");
    cp = old;
    summary.resumed = true;
    if (!cfg.out.empty()) {
      if (!std::filesystem::exists(cfg.out) || std::filesystem::file_size(cfg.out) < cp.offset)
        throw Error(Errc::IoError, "output file shorter than the checkpoint offset");
      std::filesystem::resize_file(cfg.out, cp.offset);
      out.open(cfg.out, std::ios::binary | std::ios::app);
    }
  } else if (!cfg.out.empty()) {
    out.open(cfg.out, std::ios::binary | std::ios::trunc);
    out << format_header(cfg.lo, cfg.hi);
    out.flush();
    cp.offset = static_cast<u64>(out.tellp());
  }
  if (!cfg.out.empty() && !out) throw Error(Errc::IoError, "cannot open " + cfg.out.string());

  PrimeStream primes(std::max(cfg.lo, cp.last_p + 1), cfg.hi);
  const unsigned workers = std::max(1u, cfg.workers);
  const std::size_t window = 4 * std::size_t{workers} + 4;

  std::mutex mu;
  std::condition_variable cv;
  std::map<std::size_t, Outcome> done;
  std::size_t dispatched = 0, written = 0, active = workers;
  bool exhausted = false, stop = false;
  std::exception_ptr failure;

  const auto worker = [&] {
    for (;;) {
      std::size_t seq;
      u64 p;
      {
        std::unique_lock lk(mu);
        cv.wait(lk, [&] { return stop || exhausted || dispatched < written + window; });
        if (stop || exhausted) break;
        const auto next = primes.next();
        if (!next) {
          exhausted = true;
          cv.notify_all();
          break;
        }
        seq = dispatched++;
        p = *next;
      }
      Outcome result;
      try {
        result = process_prime(p, cfg);
      } catch (const Error& e) {
        if (e.code() != Errc::MethodDisagreement && e.code() != Errc::ConsistencyFailure) {
          std::lock_guard lk(mu);
          if (!failure) failure = std::current_exception();
          stop = true;
          cv.notify_all();
          break;
        }
        result = FaultReport{p, e.code(), e.what()};
      } catch (...) {
        std::lock_guard lk(mu);
        if (!failure) failure = std::current_exception();
        stop = true;
        cv.notify_all();
        break;
      }
      std::lock_guard lk(mu);
      done.emplace(seq, std::move(result));
      cv.notify_all();
    }
    std::lock_guard lk(mu);
    --active;
    cv.notify_all();
  };

  std::vector<std::thread> pool;
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);

  std::size_t since_checkpoint = 0;
  for (;;) {
    Outcome item;
    {
      std::unique_lock lk(mu);
      cv.wait(lk, [&] {
        return stop || done.count(written) != 0 || (active == 0 && written == dispatched);
      });
      if (stop || done.count(written) == 0) break;
      auto node = done.extract(written);
      item = std::move(node.mapped());
    }

    if (auto* rec = std::get_if<PrimeRecord>(&item)) {
      if (out.is_open()) out << format_record(rec->certificate_record());
      ++summary.primes;
      if (rec->i_p > 0) ++summary.irregular_primes;
      summary.irregular_pairs += rec->i_p;
      summary.max_index = std::max(summary.max_index, rec->i_p);
      for (auto& d : discoveries(*rec)) summary.discoveries.push_back(std::move(d));
      if (rec->lambda)
        for (const auto& l : rec->lambda->pairs)
          if (!l.supported)
            summary.lambda_unsupported.push_back(
                fmt::format("LAMBDA-UNSUPPORTED p={} k={}", l.p, l.k));
      if (cfg.on_record) cfg.on_record(*rec);
      cp.last_p = rec->p;
    } else {
      auto& fault = std::get<FaultReport>(item);
      cp.last_p = fault.p;
      summary.faults.push_back(std::move(fault));
    }

    {
      std::lock_guard lk(mu);
      ++written;
      cv.notify_all();
    }

    if (cfg.stop_after != 0 && summary.primes >= cfg.stop_after) {
      if (out.is_open()) out.flush();
      summary.stopped_early = true;
      std::lock_guard lk(mu);
      stop = true;
      cv.notify_all();
      break;
    }
    if (++since_checkpoint >= std::max<std::size_t>(cfg.checkpoint_every, 1)) {
      since_checkpoint = 0;
      if (out.is_open()) {
        out.flush();
        cp.offset = static_cast<u64>(out.tellp());
      }
      if (!cfg.checkpoint.empty()) write_checkpoint(cfg.checkpoint, cp);
    }
  }

  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  if (summary.stopped_early) return summary;

  if (out.is_open()) {
    out.flush();
    if (!out) throw Error(Errc::IoError, "write failed on " + cfg.out.string());
    cp.offset = static_cast<u64>(out.tellp());
  }
  if (!cfg.checkpoint.empty()) write_checkpoint(cfg.checkpoint, cp);
  return summary;
}

}  // namespace bernmod
