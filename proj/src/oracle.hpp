// Brute-force ground truth by exhaustive counting over n < 2^lambda.
// Machine-word arithmetic only; counting is range-partitioned across threads
// with a deterministic sum, so results are exact and order-independent.
#pragma once

#include <cstdint>

#include "rational.hpp"

namespace sodcorr {

// Exact fraction of n < 2^lambda with s(n+t) - s(n) >= j.  This cumulative
// form stabilizes: it equals c_t once lambda >= s(t) + 1 + floor(log2 t).
// Requires lambda <= 34.
Rational brute_v(std::uint64_t t, unsigned lambda, std::int64_t j,
                 unsigned threads = 1);

// Exact fraction with s(n+t) - s(n) = j; a finite-lambda surrogate for the
// pointwise density.
Rational brute_mu(std::uint64_t t, std::int64_t j, unsigned lambda,
                  unsigned threads = 1);

// The smallest lambda at which brute_v(t, lambda, 0) is guaranteed stable.
unsigned stabilization_lambda(std::uint64_t t);

// s(n) - s(n+t) = carry_count(n, t) - s(t) for all n < n_max, t < t_max.
bool legendre_identity_check(std::uint64_t n_max, std::uint64_t t_max);

}  // namespace sodcorr
