// Conjecture verification scans over ranges of odd t, with deterministic
// parallel execution, CSV/JSON-lines persistence and a resumable checkpoint.
//
// A scan walks every odd t in [1, t_max], computes an exact (value, bound)
// pair and the three-way relation between them, and aggregates a report.
// Work is partitioned into contiguous chunks handed to worker threads;
// results are emitted strictly in t order, so output is byte-identical for
// any thread count.  A violation never aborts a scan: it is recorded and
// reflected in the exit code, since a genuine counterexample would be the
// most valuable possible output.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rational.hpp"

namespace sodcorr {

enum class Relation { Greater, Equal, Less };

const char* relation_name(Relation r);

enum class ScanKind {
  Cusick,          // c_t > 1/2
  Extreme,         // c_t >= c_{t_N}, N = number of ones-blocks of t
  AppendOnes,      // breve_c(t) >= 0, equality expected exactly at 5 and 107
  AppendZeroOnes,  // c_t > c over the expansion with (inf, 1) prepended
  Reversal,        // c_t = c_{t'} with t' the binary reversal (a theorem)
};

const char* scan_kind_name(ScanKind kind);

struct ScanRecord {
  std::uint64_t t = 0;
  unsigned n_blocks = 0;  // number of maximal ones-blocks
  Rational value;
  Rational bound;
  Relation relation = Relation::Equal;
};

struct ScanOptions {
  std::uint64_t t_max = 0;
  unsigned threads = 0;   // 0 = default_thread_count()
  std::string out_path;   // empty = no persistence
  bool resume = false;    // continue from the checkpoint next to out_path
};

struct ScanReport {
  ScanKind kind = ScanKind::Cusick;
  std::uint64_t lo = 0, hi = 0;
  std::uint64_t checked = 0;
  std::vector<ScanRecord> violations;
  std::vector<ScanRecord> equalities;
  double wall_seconds = 0.0;

  bool ok() const { return violations.empty(); }
};

ScanReport run_scan(ScanKind kind, const ScanOptions& options);

// Recomputes one record from scratch; used to audit scan soundness.
ScanRecord evaluate_scan_record(ScanKind kind, std::uint64_t t);

// SODCORR_THREADS if set and positive, else hardware concurrency, else 1.
unsigned default_thread_count();

inline constexpr const char* kCsvHeader =
    "t,N,c_num,c_den,bound_num,bound_den,relation";

}  // namespace sodcorr
