#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sodcorr/sodcorr.h>

#include <unistd.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  sodcorr_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status names") {
  CHECK(std::strcmp(sodcorr_status_name(SODCORR_OK), "ok") == 0);
  CHECK(std::strcmp(sodcorr_status_name(SODCORR_ERR_RANGE), "out of range") == 0);
}

TEST_CASE("digit helpers") {
  uint32_t small = 0;
  REQUIRE(sodcorr_digit_sum(995, &small) == SODCORR_OK);
  CHECK(small == 7);
  REQUIRE(sodcorr_carry_count(5, 3, &small) == SODCORR_OK);
  CHECK(small == 3);
  uint64_t reversed = 0;
  REQUIRE(sodcorr_reverse_binary(19, &reversed) == SODCORR_OK);
  CHECK(reversed == 25);
  CHECK(sodcorr_digit_sum(1, nullptr) == SODCORR_ERR_INVALID);
}

TEST_CASE("densities through the boundary") {
  char* value = nullptr;
  REQUIRE(sodcorr_cusick_t(153, &value) == SODCORR_OK);
  CHECK(take(value) == "153/256");
  REQUIRE(sodcorr_cusick_t(0, &value) == SODCORR_OK);
  CHECK(take(value) == "1/1");
  REQUIRE(sodcorr_mu_t(1, 1, &value) == SODCORR_OK);
  CHECK(take(value) == "1/2");
  REQUIRE(sodcorr_delta_t(1, 1, &value) == SODCORR_OK);
  CHECK(take(value) == "1/2");
}

TEST_CASE("block expansion handles") {
  sodcorr_blocks* blocks = nullptr;
  REQUIRE(sodcorr_blocks_parse("inf,1,inf,inf", &blocks) == SODCORR_OK);
  uint32_t pairs = 0;
  REQUIRE(sodcorr_blocks_pair_count(blocks, &pairs) == SODCORR_OK);
  CHECK(pairs == 2);
  char* text = nullptr;
  REQUIRE(sodcorr_blocks_format(blocks, &text) == SODCORR_OK);
  CHECK(take(text) == "(inf,1,inf,inf)");
  char* value = nullptr;
  REQUIRE(sodcorr_cusick_blocks(blocks, &value) == SODCORR_OK);
  CHECK(take(value) == "5/9");
  REQUIRE(sodcorr_total_mass(blocks, &value) == SODCORR_OK);
  CHECK(take(value) == "1/1");
  sodcorr_blocks_free(blocks);

  CHECK(sodcorr_blocks_parse("1,2,3", &blocks) == SODCORR_ERR_INVALID);
  CHECK(sodcorr_blocks_parse("0,inf", &blocks) == SODCORR_ERR_INVALID);
  CHECK(sodcorr_blocks_parse("a,b", &blocks) == SODCORR_ERR_INVALID);
  CHECK(sodcorr_blocks_of_odd(6, &blocks) == SODCORR_ERR_INVALID);
  CHECK(std::string(sodcorr_last_error()).find("odd") != std::string::npos);
}

TEST_CASE("component handles") {
  sodcorr_blocks* blocks = nullptr;
  REQUIRE(sodcorr_blocks_of_odd(153, &blocks) == SODCORR_OK);
  sodcorr_components* components = nullptr;
  REQUIRE(sodcorr_components_compute(blocks, &components) == SODCORR_OK);
  uint32_t count = 0;
  REQUIRE(sodcorr_components_count(components, &count) == SODCORR_OK);
  CHECK(count == 4);
  uint32_t terms = 0;
  REQUIRE(sodcorr_components_term_count(components, 3, &terms) == SODCORR_OK);
  CHECK(terms == 1);
  int64_t frequency = 0;
  char* coeff = nullptr;
  REQUIRE(sodcorr_components_term(components, 3, 0, &frequency, &coeff) == SODCORR_OK);
  CHECK(frequency == 4);
  CHECK(take(coeff) == "-1/16");
  CHECK(sodcorr_components_term(components, 3, 1, &frequency, &coeff) ==
        SODCORR_ERR_RANGE);
  CHECK(sodcorr_components_term_count(components, 9, &terms) == SODCORR_ERR_RANGE);
  sodcorr_components_free(components);
  sodcorr_blocks_free(blocks);
}

TEST_CASE("value table and diagonal array") {
  char** row = nullptr;
  size_t count = 0;
  REQUIRE(sodcorr_tm_table_row(1, &row, &count) == SODCORR_OK);
  REQUIRE(count == 3);
  CHECK(std::string(row[0]) == "1/1");
  CHECK(std::string(row[1]) == "-1/1");
  CHECK(std::string(row[2]) == "1/1");
  sodcorr_string_array_free(row, count);

  char* value = nullptr;
  REQUIRE(sodcorr_tm_gamma(19, &value) == SODCORR_OK);
  CHECK(take(value) == "-1/12");
  REQUIRE(sodcorr_sign_change_density(19, &value) == SODCORR_OK);
  CHECK(take(value) == "13/24");

  REQUIRE(sodcorr_frak_b(2, 0, &value) == SODCORR_OK);
  CHECK(take(value) == "16/27");
  REQUIRE(sodcorr_c_extreme(2, &value) == SODCORR_OK);
  CHECK(take(value) == "5/9");
  REQUIRE(sodcorr_c_ones_over_zeros(2, &value) == SODCORR_OK);
  CHECK(take(value) == "11/16");
  REQUIRE(sodcorr_oeis_entry(5, 5, &value) == SODCORR_OK);
  CHECK(take(value) == "10802/19683");
  int32_t mismatch = 0;
  REQUIRE(sodcorr_oeis_diagonal_check(10, &mismatch) == SODCORR_OK);
  CHECK(mismatch == -1);
}

TEST_CASE("oracle and scans") {
  char* value = nullptr;
  REQUIRE(sodcorr_oracle_ct(3, 0, 1, &value) == SODCORR_OK);
  CHECK(take(value) == "11/16");
  CHECK(sodcorr_oracle_ct(3, 40, 1, &value) == SODCORR_ERR_INVALID);

  const std::string csv_path =
      (std::filesystem::temp_directory_path() /
       ("sodcorr-capi-" + std::to_string(::getpid()) + ".csv"))
          .string();
  sodcorr_scan_report* report = nullptr;
  REQUIRE(sodcorr_scan_run(SODCORR_SCAN_APPEND_ONES, 511, 2, csv_path.c_str(), 0,
                           &report) == SODCORR_OK);
  CHECK(sodcorr_scan_checked(report) == 256);
  CHECK(sodcorr_scan_violation_count(report) == 0);
  REQUIRE(sodcorr_scan_equality_count(report) == 2);
  uint64_t t5 = 0, t107 = 0;
  REQUIRE(sodcorr_scan_equality(report, 0, &t5) == SODCORR_OK);
  REQUIRE(sodcorr_scan_equality(report, 1, &t107) == SODCORR_OK);
  CHECK(t5 == 5);
  CHECK(t107 == 107);
  CHECK(sodcorr_scan_equality(report, 2, &t5) == SODCORR_ERR_RANGE);
  sodcorr_scan_report_free(report);
  {
    std::ifstream csv(csv_path);
    std::string header;
    std::getline(csv, header);
    CHECK(header == "t,N,c_num,c_den,bound_num,bound_den,relation");
  }
  std::filesystem::remove(csv_path);
  std::filesystem::remove(csv_path + ".jsonl");
  std::filesystem::remove(csv_path + ".ckpt");
}

TEST_CASE("closed-form checks") {
  int holds = 0;
  REQUIRE(sodcorr_check_monotone_extreme(50, &holds) == SODCORR_OK);
  CHECK(holds == 1);
  uint32_t fail_n = 0, fail_q = 0;
  REQUIRE(sodcorr_check_problem_anq(60, &holds, &fail_n, &fail_q) == SODCORR_OK);
  CHECK(holds == 1);
}
