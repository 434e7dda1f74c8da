#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "scan.hpp"
#include "special.hpp"
#include "tails.hpp"
#include "test_support.hpp"

using namespace sodcorr;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("sodcorr-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int value = 0;
    return value;
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("record evaluation") {
  const ScanRecord cusick_record = evaluate_scan_record(ScanKind::Cusick, 153);
  CHECK(cusick_record.value == cusick_t(153));
  CHECK(cusick_record.bound == Rational(1, 2));
  CHECK(cusick_record.relation == Relation::Greater);
  CHECK(cusick_record.n_blocks == 3);

  const ScanRecord extreme = evaluate_scan_record(ScanKind::Extreme, 7);
  CHECK(extreme.bound == Rational(2, 3));
  CHECK(extreme.relation == Relation::Greater);

  const ScanRecord append_ones = evaluate_scan_record(ScanKind::AppendOnes, 5);
  CHECK(append_ones.value == 0);
  CHECK(append_ones.relation == Relation::Equal);

  const ScanRecord reversal = evaluate_scan_record(ScanKind::Reversal, 19);
  CHECK(reversal.relation == Relation::Equal);
  CHECK(reversal.bound == cusick_t(25));

  CHECK_THROWS_AS(evaluate_scan_record(ScanKind::Cusick, 4), std::invalid_argument);
}

TEST_CASE("appending a zero and ones strictly decreases the density") {
  const ScanRecord record = evaluate_scan_record(ScanKind::AppendZeroOnes, 1);
  CHECK(record.value == Rational(3, 4));
  const BlockExpansion appended = interleave(
      {ExtNat::infinity(), ExtNat::finite(1)}, {ExtNat::finite(1), ExtNat::infinity()});
  CHECK(record.bound == cusick(appended));
  CHECK(record.relation == Relation::Greater);
}

TEST_CASE("small scans are clean") {
  ScanOptions options;
  options.t_max = 1023;
  options.threads = 2;
  for (const ScanKind kind : {ScanKind::Cusick, ScanKind::Extreme,
                              ScanKind::AppendZeroOnes, ScanKind::Reversal}) {
    const ScanReport report = run_scan(kind, options);
    REQUIRE(report.checked == 512);
    REQUIRE(report.violations.empty());
    if (kind == ScanKind::Cusick || kind == ScanKind::AppendZeroOnes)
      REQUIRE(report.equalities.empty());
  }
}

TEST_CASE("equality cases of the appending-ones scan") {
  ScanOptions options;
  options.t_max = 4095;
  const ScanReport report = run_scan(ScanKind::AppendOnes, options);
  REQUIRE(report.violations.empty());
  REQUIRE(report.equalities.size() == 2);
  CHECK(report.equalities[0].t == 5);
  CHECK(report.equalities[1].t == 107);
}

TEST_CASE("csv output is byte-identical across thread counts") {
  TempDir dir;
  ScanOptions serial;
  serial.t_max = 2047;
  serial.threads = 1;
  serial.out_path = dir.file("serial.csv");
  run_scan(ScanKind::Extreme, serial);

  ScanOptions parallel = serial;
  parallel.threads = 8;
  parallel.out_path = dir.file("parallel.csv");
  run_scan(ScanKind::Extreme, parallel);

  const std::string serial_bytes = slurp(serial.out_path);
  REQUIRE_FALSE(serial_bytes.empty());
  CHECK(serial_bytes == slurp(parallel.out_path));
  CHECK(slurp(serial.out_path + ".jsonl") == slurp(parallel.out_path + ".jsonl"));

  const std::vector<std::string> lines = lines_of(serial_bytes);
  REQUIRE(lines.size() == 1025);  // header + 1024 odd values
  CHECK(lines[0] == kCsvHeader);
  CHECK(lines[1].substr(0, 2) == "1,");
}

TEST_CASE("csv rows are reproducible from the exact routes") {
  TempDir dir;
  ScanOptions options;
  options.t_max = 511;
  options.out_path = dir.file("audit.csv");
  run_scan(ScanKind::Extreme, options);

  const std::vector<std::string> lines = lines_of(slurp(options.out_path));
  auto rng = testsupport::fixed_rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const std::string& line = lines[1 + rng() % (lines.size() - 1)];
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() == 7);
    const std::uint64_t t = std::stoull(fields[0]);
    const BlockExpansion blocks = to_blocks(t);
    REQUIRE(std::stoul(fields[1]) == blocks.pair_count());
    const Rational value = cusick(blocks);
    const Rational bound = c_tn_closed(static_cast<unsigned>(blocks.pair_count()));
    REQUIRE(rational_from_wire(fields[2] + "/" + fields[3]) == value);
    REQUIRE(rational_from_wire(fields[4] + "/" + fields[5]) == bound);
    Relation relation = Relation::Less;
    if (value > bound)
      relation = Relation::Greater;
    else if (value == bound)
      relation = Relation::Equal;
    REQUIRE(fields[6] == relation_name(relation));
  }
}

TEST_CASE("resume continues from the checkpoint") {
  TempDir dir;
  ScanOptions full;
  full.t_max = 1023;
  full.out_path = dir.file("full.csv");
  run_scan(ScanKind::AppendOnes, full);
  const std::vector<std::string> full_lines = lines_of(slurp(full.out_path));

  // reconstruct a partial run: header + first 200 rows, checkpoint after them
  ScanOptions partial = full;
  partial.out_path = dir.file("partial.csv");
  {
    std::ofstream csv(partial.out_path);
    for (std::size_t i = 0; i < 201; ++i) csv << full_lines[i] << "\n";
    std::ofstream jsonl(partial.out_path + ".jsonl");
    const std::vector<std::string> full_jsonl = lines_of(slurp(full.out_path + ".jsonl"));
    for (std::size_t i = 0; i < 200; ++i) jsonl << full_jsonl[i] << "\n";
    std::ofstream ckpt(partial.out_path + ".ckpt");
    const std::string last_t = full_lines[200].substr(0, full_lines[200].find(','));
    ckpt << scan_kind_name(ScanKind::AppendOnes) << " 1023 " << last_t << "\n";
  }

  partial.resume = true;
  const ScanReport resumed = run_scan(ScanKind::AppendOnes, partial);
  CHECK(resumed.checked == 512 - 200);
  CHECK(slurp(partial.out_path) == slurp(full.out_path));
  CHECK(slurp(partial.out_path + ".jsonl") == slurp(full.out_path + ".jsonl"));

  // a mismatched checkpoint is rejected
  ScanOptions wrong = partial;
  wrong.t_max = 2047;
  CHECK_THROWS_AS(run_scan(ScanKind::AppendOnes, wrong), std::runtime_error);
}

TEST_CASE("thread count defaults are sane") { CHECK(default_thread_count() >= 1); }
