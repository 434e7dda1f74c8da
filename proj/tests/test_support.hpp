// Shared helpers for the test suites: independent oracles that never touch
// the code paths they are used to check, a fixed-seed RNG, and a small
// thread-pool loop for the heavier sweeps.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "blocks.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace testsupport {

using sodcorr::BiSeries;
using sodcorr::BlockExpansion;
using sodcorr::ExtNat;
using sodcorr::Int;
using sodcorr::Rational;
using sodcorr::Var;

inline Rational R(const char* text) { return sodcorr::rational_from_wire(text); }

// gamma as a truncated series straight from the digit recurrence
//   gamma_0 = 1, gamma_{2t} = gamma_t,
//   gamma_{2t+1} = alpha gamma_t + beta gamma_{t+1},
// with gamma_1 = alpha (1 + beta + beta^2 + ...).  Coefficients inside the
// (order x order) square are exact because the recurrence only multiplies by
// degree-raising monomials.
class RecurrenceGamma {
 public:
  explicit RecurrenceGamma(int order) : order_(order) {}

  const BiSeries& at(std::uint64_t t) {
    if (const auto it = memo_.find(t); it != memo_.end()) return it->second;
    BiSeries value(order_);
    if (t == 0) {
      value = BiSeries::one(order_);
    } else if (t == 1) {
      value = BiSeries::geom_inv(Var::Beta, order_).shifted(1, 0);
    } else if (t % 2 == 0) {
      value = at(t / 2);
    } else {
      const BiSeries left = at(t / 2).shifted(1, 0);
      value = left + at(t / 2 + 1).shifted(0, 1);
    }
    return memo_.emplace(t, std::move(value)).first->second;
  }

 private:
  int order_;
  std::map<std::uint64_t, BiSeries> memo_;
};

// The explicit piecewise closed forms for the base tails with m <= 4.
inline Rational frak_b_piecewise(unsigned m, std::int64_t a) {
  using sodcorr::pow2;
  const Rational A(a);
  switch (m) {
    case 0:
      return a > 0 ? Rational(0) : Rational(1);
    case 1:
      return a > 0 ? pow2(-a) * Rational(2, 3) : Rational(1) - pow2(a) / 3;
    case 2:
      return a > 0 ? pow2(-a) * (6 * A + 16) / 27
                   : Rational(1) - pow2(a) * (-3 * A + 11) / 27;
    case 3:
      return a > 0 ? pow2(-a) * (3 * A * A + 21 * A + 46) / 81
                   : Rational(1) - pow2(a) * (3 * A * A - 27 * A + 70) / 162;
    case 4:
      return a > 0
                 ? pow2(-a) * (9 * A * A * A + 117 * A * A + 600 * A + 1216) / 2187
                 : Rational(1) -
                       pow2(a) * (-9 * A * A * A + 144 * A * A - 861 * A + 1942) / 4374;
    default:
      throw std::invalid_argument("piecewise tails are tabulated for m <= 4");
  }
}

inline std::mt19937_64 fixed_rng(std::uint64_t salt = 0) {
  return std::mt19937_64(0x5eed5eed ^ salt);
}

inline ExtNat random_entry(std::mt19937_64& rng, unsigned max_finite = 3) {
  const unsigned pick = static_cast<unsigned>(rng() % (max_finite + 1));
  return pick == max_finite ? ExtNat::infinity() : ExtNat::finite(pick + 1);
}

inline BlockExpansion random_expansion(std::mt19937_64& rng, unsigned pairs,
                                       bool integer_form) {
  std::vector<ExtNat> entries;
  for (unsigned j = 0; j < 2 * pairs; ++j) entries.push_back(random_entry(rng));
  if (integer_form && pairs > 0) {
    for (unsigned j = 0; j + 1 < 2 * pairs; ++j)
      if (entries[j].is_infinite()) entries[j] = ExtNat::finite(1 + rng() % 3);
    entries[2 * pairs - 1] = ExtNat::infinity();
  }
  return BlockExpansion(std::move(entries));
}

// Runs fn(index) over [0, count) on `threads` workers and ANDs the results.
inline bool parallel_all(std::uint64_t count,
                         const std::function<bool(std::uint64_t)>& fn,
                         unsigned threads = 0) {
  if (threads == 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = hw > 0 ? hw : 1;
  }
  if (threads <= 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i)
      if (!fn(i)) return false;
    return true;
  }
  std::vector<char> results(threads, 1);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (count + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = std::min(count, lo + chunk);
    pool.emplace_back([&, w, lo, hi] {
      for (std::uint64_t i = lo; i < hi; ++i)
        if (!fn(i)) {
          results[w] = 0;
          return;
        }
    });
  }
  for (auto& worker : pool) worker.join();
  for (const char ok : results)
    if (!ok) return false;
  return true;
}

}  // namespace testsupport
