// Special values and closed forms: Thue-Morse correlations gamma_t(pi) and
// their table, the extreme-case density c_{t_N} with its lower bound, the
// ones-over-zeros density, the diagonal array conjecturally holding B_m(0),
// binomial identities, central-binomial (Wallis) bounds, and the a_{N,q}
// family.
//
// Every inequality involving an irrational constant is verified in squared
// rational form.  Enclosures used: 333/106 < pi < 355/113 and
// 141/1000 < 1/(4 sqrt(pi)).
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "blocks.hpp"
#include "rational.hpp"

namespace sodcorr {

// gamma_t at theta = pi (alpha = beta = -1/2): the Thue-Morse correlation,
// by the memoized recurrence gamma_0 = 1, gamma_1 = -1/3, gamma_{2t} =
// gamma_t, gamma_{2t+1} = -(gamma_t + gamma_{t+1})/2.
Rational tm_gamma(std::uint64_t t);

// Checks the component form gamma_t = 9^{-N} sum_n (-8)^n C_{N,n} against
// tm_gamma, where C_{N,n} runs over selection words with last symbol 0.
bool tm_component_check(std::uint64_t odd_t);

// Row r holds -3*gamma_t for t from 2^r to 2^{r+1} inclusive (row 0 covers
// t in {1, 2}).
struct TmTable {
  std::vector<std::vector<Rational>> rows;
};

TmTable tm_table(unsigned rows);

// Density of sign changes of the Thue-Morse sequence under n -> n + t:
// (1 - gamma_t(pi)) / 2.
Rational sign_change_density(std::uint64_t t);

// The extreme expansion t_N = (inf,1,inf,1,...,inf,inf): infinite ones-blocks
// separated by single zeros.
BlockExpansion extreme_expansion(unsigned n_pairs);

// (1,inf,1,inf,...): isolated ones separated by infinite zero-blocks.
BlockExpansion ones_over_zeros_expansion(unsigned n_pairs);

// c_{t_N} = 1/2 + 4^{-N} C(2N-2, N-1) - 12^{-N} sum_{j<N} C(2N-1, j) 3^j.
Rational c_tn_closed(unsigned n_pairs);

// Verifies c_{t_N} > 1/2 + (141/1000) N^{-3/2} in squared rational form.
bool c_tn_lower_bound_check(unsigned n_pairs);

// c over the ones-over-zeros expansion: 1/2 + 4^{-N} C(2N-1, N).
Rational c_ones_over_zeros(unsigned n_pairs);

// The array A_{k,0} = 1, A_{0,l} = 0 (l >= 1),
// A_{k,l} = (A_{k-1,l} + A_{k,l-1} + A_{k-1,l-1})/3, whose diagonal appears
// to coincide with B_m(0).
class OeisArray {
 public:
  OeisArray(unsigned k_max, unsigned l_max);
  const Rational& at(unsigned k, unsigned l) const;
  unsigned k_max() const { return k_max_; }
  unsigned l_max() const { return l_max_; }

 private:
  unsigned k_max_, l_max_;
  std::vector<Rational> values_;
};

OeisArray oeis_array(unsigned k_max, unsigned l_max);

// Compares A_{m,m} with B_m(0) for m <= m_max.  The identity is conjectural,
// so a mismatch is reported (index of the first one), not asserted.
std::optional<unsigned> oeis_diagonal_check(unsigned m_max);

// Verifies, exactly, the finite-sum identity
//   sum_{k<=n} C(m+k,k) x^k
//     = (1-x)^{-(m+1)} - x^{n+1}/(1-x) sum_{j<=m} C(m+n+1, m-j) (x/(1-x))^j
// plus its x = 1/2 and x = 1/4 specializations when n = m.  Throws on x = 1.
bool binom_identity_check(unsigned m, unsigned n, const Rational& x);

// Verifies pi*n < (4^n / C(2n,n))^2 < pi*(n + 1/2) for 1 <= n <= n_max using
// the rational pi enclosure.
bool wallis_bound_check(unsigned n_max);

// a_{N,q} = 3^{-N} sum_{j<N} 3^j C(N+q-1, j) - C(N+q-2, q-1), by the direct
// formula and by the recurrence a_{N,q} = a_{N,q-1} + a_{N-1,q} with
// a_{N,1} = (4/3)^N - 2 and a_{1,q} = -2/3.
Rational a_nq(unsigned n, unsigned q);
Rational a_nq_recurrence(unsigned n, unsigned q);

struct ProblemScanReport {
  bool holds = true;
  unsigned first_failure_n = 0;
  unsigned first_failure_q = 0;
};

// Checks a_{N,N-3} >= 0 for 4 <= N <= n_max and a_{N,q} > 0 for
// 1 <= q <= N-3.
ProblemScanReport problem_scan(unsigned n_max);

// The three-case closed form for c_{(m,l,k,inf)} - c_{(m,l,inf,inf)}; must
// equal the direct difference of densities.
Rational n2_difference_formula(unsigned k, unsigned ell, unsigned m);

// c_{t_N} strictly decreases and stays above 1/2 for N <= n_max.
bool tn_monotone_check(unsigned n_max);

}  // namespace sodcorr
