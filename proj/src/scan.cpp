#include "scan.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "blocks.hpp"
#include "special.hpp"
#include "tails.hpp"

namespace sodcorr {

namespace {

constexpr std::uint64_t kOddPerChunk = 256;

// Route per t: word enumeration is cheap for few blocks, the rational
// function route has no N cap.
Rational density(const BlockExpansion& t) {
  return t.pair_count() <= 10 ? cusick_via_corollary(t) : cusick(t);
}

Relation compare(const Rational& value, const Rational& bound) {
  if (value > bound) return Relation::Greater;
  if (value == bound) return Relation::Equal;
  return Relation::Less;
}

bool is_violation(ScanKind kind, Relation r) {
  if (kind == ScanKind::Reversal) return r != Relation::Equal;
  return r == Relation::Less;
}

bool record_equalities(ScanKind kind) { return kind != ScanKind::Reversal; }

BlockExpansion append_zero_ones(const BlockExpansion& t) {
  std::vector<ExtNat> entries;
  entries.reserve(t.size() + 2);
  entries.push_back(ExtNat::infinity());
  entries.push_back(ExtNat::finite(1));
  entries.insert(entries.end(), t.entries().begin(), t.entries().end());
  return BlockExpansion(std::move(entries));
}

class OrderedWriter {
 public:
  OrderedWriter(ScanKind kind, const ScanOptions& options, std::uint64_t first_chunk,
                ScanReport& report)
      : kind_(kind), report_(report), next_chunk_(first_chunk) {
    if (options.out_path.empty()) return;
    persist_ = true;
    csv_path_ = options.out_path;
    jsonl_path_ = options.out_path + ".jsonl";
    ckpt_path_ = options.out_path + ".ckpt";
    t_max_ = options.t_max;
    const auto mode = options.resume ? std::ios::app : std::ios::trunc;
    csv_.open(csv_path_, std::ios::out | mode);
    jsonl_.open(jsonl_path_, std::ios::out | mode);
    if (!csv_ || !jsonl_)
      throw std::runtime_error("cannot open scan output: " + csv_path_);
    if (!options.resume) csv_ << kCsvHeader << "\n";
  }

  void submit(std::uint64_t chunk_index, std::vector<ScanRecord> records) {
    std::lock_guard<std::mutex> lock(mutex_);
    pending_.emplace(chunk_index, std::move(records));
    while (!pending_.empty() && pending_.begin()->first == next_chunk_) {
      flush(pending_.begin()->second);
      pending_.erase(pending_.begin());
      ++next_chunk_;
    }
  }

 private:
  void flush(const std::vector<ScanRecord>& records) {
    for (const ScanRecord& record : records) {
      report_.checked += 1;
      if (is_violation(kind_, record.relation))
        report_.violations.push_back(record);
      else if (record.relation == Relation::Equal && record_equalities(kind_))
        report_.equalities.push_back(record);
      if (persist_) {
        csv_ << record.t << ',' << record.n_blocks << ','
             << numerator(record.value) << ',' << denominator(record.value) << ','
             << numerator(record.bound) << ',' << denominator(record.bound) << ','
             << relation_name(record.relation) << '\n';
        jsonl_ << "{\"t\":" << record.t << ",\"N\":" << record.n_blocks
               << ",\"c\":\"" << to_wire(record.value) << "\",\"bound\":\""
               << to_wire(record.bound) << "\",\"relation\":\""
               << relation_name(record.relation) << "\"}\n";
      }
    }
    if (persist_ && !records.empty()) {
      csv_.flush();
      jsonl_.flush();
      std::ofstream ckpt(ckpt_path_, std::ios::out | std::ios::trunc);
      ckpt << scan_kind_name(kind_) << ' ' << t_max_ << ' ' << records.back().t << '\n';
    }
  }

  ScanKind kind_;
  ScanReport& report_;
  std::mutex mutex_;
  std::map<std::uint64_t, std::vector<ScanRecord>> pending_;
  std::uint64_t next_chunk_;
  bool persist_ = false;
  std::uint64_t t_max_ = 0;
  std::string csv_path_, jsonl_path_, ckpt_path_;
  std::ofstream csv_, jsonl_;
};

std::uint64_t read_checkpoint(ScanKind kind, const ScanOptions& options) {
  std::ifstream ckpt(options.out_path + ".ckpt");
  if (!ckpt) return 1;  // no checkpoint: start from scratch
  std::string kind_name;
  std::uint64_t t_max = 0, last_t = 0;
  ckpt >> kind_name >> t_max >> last_t;
  if (kind_name != scan_kind_name(kind) || t_max != options.t_max)
    throw std::runtime_error("checkpoint does not match this scan");
  return last_t + 2;
}

}  // namespace

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::Greater: return "greater";
    case Relation::Equal: return "equal";
    case Relation::Less: return "less";
  }
  return "?";
}

const char* scan_kind_name(ScanKind kind) {
  switch (kind) {
    case ScanKind::Cusick: return "cusick";
    case ScanKind::Extreme: return "conj-extreme";
    case ScanKind::AppendOnes: return "append-ones";
    case ScanKind::AppendZeroOnes: return "append-zero-ones";
    case ScanKind::Reversal: return "reversal";
  }
  return "?";
}

ScanRecord evaluate_scan_record(ScanKind kind, std::uint64_t t) {
  if (t == 0 || t % 2 == 0) throw std::invalid_argument("scans walk odd t only");
  const BlockExpansion blocks = to_blocks(t);
  ScanRecord record;
  record.t = t;
  record.n_blocks = static_cast<unsigned>(blocks.pair_count());
  switch (kind) {
    case ScanKind::Cusick:
      record.value = density(blocks);
      record.bound = Rational(1, 2);
      break;
    case ScanKind::Extreme:
      record.value = density(blocks);
      record.bound = c_tn_closed(record.n_blocks);
      break;
    case ScanKind::AppendOnes:
      record.value = breve_c(t);
      record.bound = 0;
      break;
    case ScanKind::AppendZeroOnes:
      record.value = density(blocks);
      record.bound = density(append_zero_ones(blocks));
      break;
    case ScanKind::Reversal:
      record.value = density(blocks);
      record.bound = density(to_blocks(reverse_binary(t)));
      break;
  }
  record.relation = compare(record.value, record.bound);
  return record;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("SODCORR_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed > 0) return static_cast<unsigned>(parsed);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

ScanReport run_scan(ScanKind kind, const ScanOptions& options) {
  const auto start_time = std::chrono::steady_clock::now();
  ScanReport report;
  report.kind = kind;

  std::uint64_t start_t = 1;
  if (options.resume && !options.out_path.empty())
    start_t = read_checkpoint(kind, options);
  report.lo = start_t;
  report.hi = options.t_max;

  if (start_t > options.t_max) {
    report.wall_seconds = 0.0;
    return report;
  }

  const std::uint64_t odd_count = (options.t_max - start_t) / 2 + 1;
  const std::uint64_t chunk_count = (odd_count + kOddPerChunk - 1) / kOddPerChunk;
  unsigned threads = options.threads > 0 ? options.threads : default_thread_count();
  if (threads > chunk_count) threads = static_cast<unsigned>(chunk_count);

  OrderedWriter writer(kind, options, 0, report);
  std::atomic<std::uint64_t> next_chunk{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (;;) {
        const std::uint64_t chunk = next_chunk.fetch_add(1);
        if (chunk >= chunk_count) return;
        const std::uint64_t lo = start_t + 2 * chunk * kOddPerChunk;
        std::vector<ScanRecord> records;
        records.reserve(kOddPerChunk);
        for (std::uint64_t i = 0; i < kOddPerChunk; ++i) {
          const std::uint64_t t = lo + 2 * i;
          if (t > options.t_max) break;
          records.push_back(evaluate_scan_record(kind, t));
        }
        writer.submit(chunk, std::move(records));
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next_chunk.store(chunk_count);
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }
  if (failure) std::rethrow_exception(failure);

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time)
          .count();
  return report;
}

}  // namespace sodcorr
