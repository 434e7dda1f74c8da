#include "oracle.hpp"

#include <bit>
#include <stdexcept>
#include <thread>
#include <vector>

#include "blocks.hpp"

namespace sodcorr {

namespace {

template <typename Predicate>
std::uint64_t parallel_count(std::uint64_t range, unsigned threads, Predicate pred) {
  if (threads <= 1 || range < (std::uint64_t{1} << 16)) {
    std::uint64_t count = 0;
    for (std::uint64_t n = 0; n < range; ++n) count += pred(n);
    return count;
  }
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = range / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = (w + 1 == threads) ? range : lo + chunk;
    workers.emplace_back([&partial, w, lo, hi, &pred] {
      std::uint64_t count = 0;
      for (std::uint64_t n = lo; n < hi; ++n) count += pred(n);
      partial[w] = count;
    });
  }
  for (auto& worker : workers) worker.join();
  std::uint64_t total = 0;
  for (const std::uint64_t c : partial) total += c;
  return total;
}

void require_lambda(unsigned lambda) {
  if (lambda > 34) throw std::invalid_argument("lambda capped at 34 (cost 2^lambda)");
}

}  // namespace

Rational brute_v(std::uint64_t t, unsigned lambda, std::int64_t j, unsigned threads) {
  require_lambda(lambda);
  const std::uint64_t range = std::uint64_t{1} << lambda;
  const std::uint64_t count = parallel_count(range, threads, [t, j](std::uint64_t n) {
    return static_cast<std::int64_t>(std::popcount(n + t)) -
               static_cast<std::int64_t>(std::popcount(n)) >=
           j;
  });
  return Rational(Int(count), Int(range));
}

Rational brute_mu(std::uint64_t t, std::int64_t j, unsigned lambda, unsigned threads) {
  require_lambda(lambda);
  const std::uint64_t range = std::uint64_t{1} << lambda;
  const std::uint64_t count = parallel_count(range, threads, [t, j](std::uint64_t n) {
    return static_cast<std::int64_t>(std::popcount(n + t)) -
               static_cast<std::int64_t>(std::popcount(n)) ==
           j;
  });
  return Rational(Int(count), Int(range));
}

unsigned stabilization_lambda(std::uint64_t t) {
  if (t == 0) return 1;
  return digit_sum(t) + 1 + (63 - static_cast<unsigned>(std::countl_zero(t)));
}

bool legendre_identity_check(std::uint64_t n_max, std::uint64_t t_max) {
  if (n_max > (std::uint64_t{1} << 12) || t_max > (std::uint64_t{1} << 12))
    throw std::invalid_argument("legendre_identity_check bounds capped at 2^12");
  for (std::uint64_t n = 0; n < n_max; ++n)
    for (std::uint64_t t = 0; t < t_max; ++t) {
      const std::int64_t lhs = static_cast<std::int64_t>(digit_sum(n)) -
                               static_cast<std::int64_t>(digit_sum(n + t));
      const std::int64_t rhs = static_cast<std::int64_t>(carry_count(n, t)) -
                               static_cast<std::int64_t>(digit_sum(t));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace sodcorr
