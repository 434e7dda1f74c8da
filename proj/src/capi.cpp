// extern "C" implementation of the public interface.  Exceptions from the
// core are caught at the boundary and mapped to status codes; the message of
// the most recent failure is kept per thread for sodcorr_last_error.
#include "sodcorr/sodcorr.h"

#include <cstring>
#include <iterator>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "blocks.hpp"
#include "components.hpp"
#include "oracle.hpp"
#include "scan.hpp"
#include "special.hpp"
#include "tails.hpp"
#include "transfer.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::operator new(s.size() + 1, std::nothrow));
  if (out == nullptr) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sodcorr_status fail(sodcorr_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs `body`, mapping exceptions onto status codes.
template <typename Body>
sodcorr_status guarded(Body&& body) {
  try {
    return body();
  } catch (const std::length_error& e) {
    return fail(SODCORR_ERR_RANGE, e.what());
  } catch (const std::out_of_range& e) {
    return fail(SODCORR_ERR_RANGE, e.what());
  } catch (const std::overflow_error& e) {
    return fail(SODCORR_ERR_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SODCORR_ERR_INVALID, e.what());
  } catch (const std::domain_error& e) {
    return fail(SODCORR_ERR_INVALID, e.what());
  } catch (const std::runtime_error& e) {
    return fail(SODCORR_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SODCORR_ERR_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(SODCORR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SODCORR_ERR_INTERNAL, "unknown error");
  }
}

sodcorr_status write_string(const std::string& s, char** out) {
  if (out == nullptr) return fail(SODCORR_ERR_INVALID, "null output pointer");
  char* copy = dup_string(s);
  if (copy == nullptr) return fail(SODCORR_ERR_NOMEM, "out of memory");
  *out = copy;
  return SODCORR_OK;
}

sodcorr_status write_rational(const sodcorr::Rational& r, char** out) {
  return write_string(sodcorr::to_wire(r), out);
}

sodcorr::ExtNat parse_entry(const std::string& token) {
  if (token == "inf" || token == "INF" || token == "oo") return sodcorr::ExtNat::infinity();
  std::size_t used = 0;
  const unsigned long long value = std::stoull(token, &used, 10);
  if (used != token.size()) throw std::invalid_argument("bad block entry: " + token);
  return sodcorr::ExtNat::finite(value);
}

}  // namespace

struct sodcorr_blocks {
  sodcorr::BlockExpansion value;
};

struct sodcorr_components {
  sodcorr::ComponentSet value;
};

struct sodcorr_scan_report {
  sodcorr::ScanReport value;
};

extern "C" {

const char* sodcorr_status_name(sodcorr_status status) {
  switch (status) {
    case SODCORR_OK: return "ok";
    case SODCORR_ERR_INVALID: return "invalid argument";
    case SODCORR_ERR_RANGE: return "out of range";
    case SODCORR_ERR_IO: return "i/o error";
    case SODCORR_ERR_NOMEM: return "out of memory";
    case SODCORR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* sodcorr_last_error(void) { return g_last_error.c_str(); }

void sodcorr_string_free(char* s) { ::operator delete(s); }

sodcorr_status sodcorr_digit_sum(uint64_t n, uint32_t* out) {
  return guarded([&]() -> sodcorr_status {
    if (out == nullptr) return fail(SODCORR_ERR_INVALID, "null output pointer");
    *out = sodcorr::digit_sum(n);
    return SODCORR_OK;
  });
}

sodcorr_status sodcorr_carry_count(uint64_t n, uint64_t t, uint32_t* out) {
  return guarded([&]() -> sodcorr_status {
    if (out == nullptr) return fail(SODCORR_ERR_INVALID, "null output pointer");
    *out = sodcorr::carry_count(n, t);
    return SODCORR_OK;
  });
}

sodcorr_status sodcorr_reverse_binary(uint64_t odd_t, uint64_t* out) {
  return guarded([&]() -> sodcorr_status {
    if (out == nullptr) return fail(SODCORR_ERR_INVALID, "null output pointer");
    *out = sodcorr::reverse_binary(odd_t);
    return SODCORR_OK;
  });
}

sodcorr_status sodcorr_blocks_parse(const char* text, sodcorr_blocks** out) {
  return guarded([&]() -> sodcorr_status {
    if (text == nullptr || out == nullptr)
      return fail(SODCORR_ERR_INVALID, "null argument");
    std::vector<sodcorr::ExtNat> entries;
    std::string token;
    for (const char* p = text;; ++p) {
      if (*p == ',' || *p == '\0') {
        if (token.empty()) throw std::invalid_argument("empty block entry");
        entries.push_back(parse_entry(token));
        token.clear();
        if (*p == '\0') break;
      } else if (*p != ' ') {
        token.push_back(*p);
      }
    }
    *out = new sodcorr_blocks{sodcorr::BlockExpansion(std::move(entries))};
    return SODCORR_OK;
  });
}

sodcorr_status sodcorr_blocks_of_odd(uint64_t odd_t, sodcorr_blocks** out) {
  return guarded([&]() -> sodcorr_status {
    if (out == nullptr) return fail(SODCORR_ERR_INVALID, "null output pointer");
    *out = new sodcorr_blocks{sodcorr::to_blocks(odd_t)};
    return SODCORR_OK;
  });
}

void sodcorr_blocks_free(sodcorr_blocks* blocks) { delete blocks; }

sodcorr_status sodcorr_blocks_format(const sodcorr_blocks* blocks, char** out) {
  return guarded([&]() -> sodcorr_status {
    if (blocks == nullptr) return fail(SODCORR_ERR_INVALID, "null handle");
    return write_string(blocks->value.to_string(), out);
  });
}

sodcorr_status sodcorr_blocks_pair_count(const sodcorr_blocks* blocks, uint32_t* out) {
  return guarded([&]() -> sodcorr_status {
    if (blocks == nullptr || out == nullptr)
      return fail(SODCORR_ERR_INVALID, "null argument");
    *out = static_cast<uint32_t>(blocks->value.pair_count());
    return SODCORR_OK;
  });
}

sodcorr_status sodcorr_cusick_t(uint64_t t, char** out) {
  return guarded([&] { return write_rational(sodcorr::cusick_t(t), out); });
}

sodcorr_status sodcorr_mu_t(uint64_t t, int64_t m, char** out) {
  return guarded([&] { return write_rational(sodcorr::mu_t(t, m), out); });
}

sodcorr_status sodcorr_delta_t(uint64_t t, int64_t a, char** out) {
  return guarded([&]() -> sodcorr_status {
    if (t == 0) return write_rational(a <= 0 ? 1 : 0, out);
    return write_rational(
        sodcorr::delta(sodcorr::to_blocks(sodcorr::reduce_to_odd(t).odd), a), out);
  });
}

sodcorr_status sodcorr_cusick_blocks(const sodcorr_blocks* blocks, char** out) {
  return guarded([&]() -> sodcorr_status {
    if (blocks == nullptr) return fail(SODCORR_ERR_INVALID, "null handle");
    return write_rational(sodcorr::cusick(blocks->value), out);
  });
}

sodcorr_status sodcorr_mu_blocks(const sodcorr_blocks* blocks, int64_t m, char** out) {
  return guarded([&]() -> sodcorr_status {
    if (blocks == nullptr) return fail(SODCORR_ERR_INVALID, "null handle");
    return write_rational(sodcorr::mu(blocks->value, m), out);
  });
}

sodcorr_status sodcorr_delta_blocks(const sodcorr_blocks* blocks, int64_t a, char** out) {
  return guarded([&]() -> sodcorr_status {
    if (blocks == nullptr) return fail(SODCORR_ERR_INVALID, "null handle");
    return write_rational(sodcorr::delta(blocks->value, a), out);
  });
}

sodcorr_status sodcorr_total_mass(const sodcorr_blocks* blocks, char** out) {
  return guarded([&]() -> sodcorr_status {
    if (blocks == nullptr) return fail(SODCORR_ERR_INVALID, "null handle");
    return write_rational(sodcorr::total_mass(blocks->value), out);
  });
}

sodcorr_status sodcorr_components_compute(const sodcorr_blocks* blocks,
                                          sodcorr_components** out) {
  return guarded([&]() -> sodcorr_status {
    if (blocks == nullptr || out == nullptr)
      return fail(SODCORR_ERR_INVALID, "null argument");
    *out = new sodcorr_components{sodcorr::decompose(blocks->value)};
    return SODCORR_OK;
  });
}

void sodcorr_components_free(sodcorr_components* components) { delete components; }

sodcorr_status sodcorr_components_count(const sodcorr_components* components,
                                        uint32_t* out) {
  return guarded([&]() -> sodcorr_status {
    if (components == nullptr || out == nullptr)
      return fail(SODCORR_ERR_INVALID, "null argument");
    *out = static_cast<uint32_t>(components->value.fourier_parts.size());
    return SODCORR_OK;
  });
}

sodcorr_status sodcorr_components_term_count(const sodcorr_components* components,
                                             uint32_t n, uint32_t* out) {
  return guarded([&]() -> sodcorr_status {
    if (components == nullptr || out == nullptr)
      return fail(SODCORR_ERR_INVALID, "null argument");
    if (n >= components->value.fourier_parts.size())
      return fail(SODCORR_ERR_RANGE, "component index out of range");
    *out = static_cast<uint32_t>(components->value.fourier_parts[n].terms().size());
    return SODCORR_OK;
  });
}

sodcorr_status sodcorr_components_term(const sodcorr_components* components,
                                       uint32_t n, uint32_t index,
                                       int64_t* frequency, char** coeff) {
  return guarded([&]() -> sodcorr_status {
    if (components == nullptr || frequency == nullptr)
      return fail(SODCORR_ERR_INVALID, "null argument");
    if (n >= components->value.fourier_parts.size())
      return fail(SODCORR_ERR_RANGE, "component index out of range");
    const auto& terms = components->value.fourier_parts[n].terms();
    if (index >= terms.size())
      return fail(SODCORR_ERR_RANGE, "term index out of range");
    auto it = terms.begin();
    std::advance(it, index);
    *frequency = it->first;
    return write_rational(it->second, coeff);
  });
}

sodcorr_status sodcorr_tm_gamma(uint64_t t, char** out) {
  return guarded([&] { return write_rational(sodcorr::tm_gamma(t), out); });
}

sodcorr_status sodcorr_sign_change_density(uint64_t t, char** out) {
  return guarded([&] { return write_rational(sodcorr::sign_change_density(t), out); });
}

sodcorr_status sodcorr_tm_table_row(uint32_t row, char*** values, size_t* count) {
  return guarded([&]() -> sodcorr_status {
    if (values == nullptr || count == nullptr)
      return fail(SODCORR_ERR_INVALID, "null argument");
    const sodcorr::TmTable table = sodcorr::tm_table(row + 1);
    const auto& source = table.rows.at(row);
    char** array = static_cast<char**>(
        ::operator new(sizeof(char*) * source.size(), std::nothrow));
    if (array == nullptr) return fail(SODCORR_ERR_NOMEM, "out of memory");
    for (std::size_t i = 0; i < source.size(); ++i) {
      array[i] = dup_string(sodcorr::to_wire(source[i]));
      if (array[i] == nullptr) {
        for (std::size_t k = 0; k < i; ++k) ::operator delete(array[k]);
        ::operator delete(array);
        return fail(SODCORR_ERR_NOMEM, "out of memory");
      }
    }
    *values = array;
    *count = source.size();
    return SODCORR_OK;
  });
}

void sodcorr_string_array_free(char** values, size_t count) {
  if (values == nullptr) return;
  for (size_t i = 0; i < count; ++i) ::operator delete(values[i]);
  ::operator delete(values);
}

sodcorr_status sodcorr_frak_b(uint32_t m, int64_t a, char** out) {
  return guarded([&] { return write_rational(sodcorr::frak_b(m, a), out); });
}

sodcorr_status sodcorr_c_extreme(uint32_t n_blocks, char** out) {
  return guarded([&] { return write_rational(sodcorr::c_tn_closed(n_blocks), out); });
}

sodcorr_status sodcorr_c_ones_over_zeros(uint32_t n_blocks, char** out) {
  return guarded(
      [&] { return write_rational(sodcorr::c_ones_over_zeros(n_blocks), out); });
}

sodcorr_status sodcorr_oeis_entry(uint32_t k, uint32_t l, char** out) {
  return guarded(
      [&] { return write_rational(sodcorr::oeis_array(k, l).at(k, l), out); });
}

sodcorr_status sodcorr_oeis_diagonal_check(uint32_t m_max, int32_t* first_mismatch) {
  return guarded([&]() -> sodcorr_status {
    if (first_mismatch == nullptr) return fail(SODCORR_ERR_INVALID, "null argument");
    const auto mismatch = sodcorr::oeis_diagonal_check(m_max);
    *first_mismatch = mismatch ? static_cast<int32_t>(*mismatch) : -1;
    return SODCORR_OK;
  });
}

sodcorr_status sodcorr_oracle_ct(uint64_t t, uint32_t lambda, uint32_t threads,
                                 char** out) {
  return guarded([&]() -> sodcorr_status {
    const unsigned effective =
        lambda != 0 ? lambda : sodcorr::stabilization_lambda(t);
    const unsigned workers =
        threads != 0 ? threads : sodcorr::default_thread_count();
    return write_rational(sodcorr::brute_v(t, effective, 0, workers), out);
  });
}

sodcorr_status sodcorr_scan_run(sodcorr_scan_kind kind, uint64_t t_max,
                                uint32_t threads, const char* out_csv,
                                int resume, sodcorr_scan_report** out) {
  return guarded([&]() -> sodcorr_status {
    if (out == nullptr) return fail(SODCORR_ERR_INVALID, "null output pointer");
    sodcorr::ScanKind mapped;
    switch (kind) {
      case SODCORR_SCAN_CUSICK: mapped = sodcorr::ScanKind::Cusick; break;
      case SODCORR_SCAN_EXTREME: mapped = sodcorr::ScanKind::Extreme; break;
      case SODCORR_SCAN_APPEND_ONES: mapped = sodcorr::ScanKind::AppendOnes; break;
      case SODCORR_SCAN_APPEND_ZERO_ONES:
        mapped = sodcorr::ScanKind::AppendZeroOnes;
        break;
      case SODCORR_SCAN_REVERSAL: mapped = sodcorr::ScanKind::Reversal; break;
      default: return fail(SODCORR_ERR_INVALID, "unknown scan kind");
    }
    sodcorr::ScanOptions options;
    options.t_max = t_max;
    options.threads = threads;
    options.out_path = out_csv == nullptr ? "" : out_csv;
    options.resume = resume != 0;
    *out = new sodcorr_scan_report{sodcorr::run_scan(mapped, options)};
    return SODCORR_OK;
  });
}

void sodcorr_scan_report_free(sodcorr_scan_report* report) { delete report; }

uint64_t sodcorr_scan_checked(const sodcorr_scan_report* report) {
  return report == nullptr ? 0 : report->value.checked;
}

double sodcorr_scan_wall_seconds(const sodcorr_scan_report* report) {
  return report == nullptr ? 0.0 : report->value.wall_seconds;
}

size_t sodcorr_scan_violation_count(const sodcorr_scan_report* report) {
  return report == nullptr ? 0 : report->value.violations.size();
}

size_t sodcorr_scan_equality_count(const sodcorr_scan_report* report) {
  return report == nullptr ? 0 : report->value.equalities.size();
}

sodcorr_status sodcorr_scan_violation(const sodcorr_scan_report* report,
                                      size_t index, uint64_t* t, char** value,
                                      char** bound) {
  return guarded([&]() -> sodcorr_status {
    if (report == nullptr || t == nullptr)
      return fail(SODCORR_ERR_INVALID, "null argument");
    if (index >= report->value.violations.size())
      return fail(SODCORR_ERR_RANGE, "violation index out of range");
    const sodcorr::ScanRecord& record = report->value.violations[index];
    char* value_copy = nullptr;
    char* bound_copy = nullptr;
    if (value != nullptr) {
      if (const auto status = write_rational(record.value, &value_copy);
          status != SODCORR_OK)
        return status;
    }
    if (bound != nullptr) {
      if (const auto status = write_rational(record.bound, &bound_copy);
          status != SODCORR_OK) {
        sodcorr_string_free(value_copy);
        return status;
      }
    }
    *t = record.t;
    if (value != nullptr) *value = value_copy;
    if (bound != nullptr) *bound = bound_copy;
    return SODCORR_OK;
  });
}

sodcorr_status sodcorr_scan_equality(const sodcorr_scan_report* report,
                                     size_t index, uint64_t* t) {
  return guarded([&]() -> sodcorr_status {
    if (report == nullptr || t == nullptr)
      return fail(SODCORR_ERR_INVALID, "null argument");
    if (index >= report->value.equalities.size())
      return fail(SODCORR_ERR_RANGE, "equality index out of range");
    *t = report->value.equalities[index].t;
    return SODCORR_OK;
  });
}

sodcorr_status sodcorr_check_monotone_extreme(uint32_t n_max, int* holds) {
  return guarded([&]() -> sodcorr_status {
    if (holds == nullptr) return fail(SODCORR_ERR_INVALID, "null argument");
    *holds = sodcorr::tn_monotone_check(n_max) ? 1 : 0;
    return SODCORR_OK;
  });
}

sodcorr_status sodcorr_check_problem_anq(uint32_t n_max, int* holds,
                                         uint32_t* fail_n, uint32_t* fail_q) {
  return guarded([&]() -> sodcorr_status {
    if (holds == nullptr) return fail(SODCORR_ERR_INVALID, "null argument");
    const sodcorr::ProblemScanReport report = sodcorr::problem_scan(n_max);
    *holds = report.holds ? 1 : 0;
    if (fail_n != nullptr) *fail_n = report.first_failure_n;
    if (fail_q != nullptr) *fail_q = report.first_failure_q;
    return SODCORR_OK;
  });
}

}  // extern "C"
