// Exact evaluation of weighted coefficient sums of gamma: the measure values
// mu_t(m), the cumulative tails Delta_t(a), Cusick densities c_t, the base
// tails B_m(a), the alternating differences D_l(r), and the word-enumeration
// reduction of c_t.
//
// All values are exact rationals.  Nothing here truncates a series; the only
// infinite sums are the closed-form weighted tails below.
#pragma once

#include <cstdint>

#include "blocks.hpp"
#include "transfer.hpp"

namespace sodcorr {

// The doubly infinite weighted tail of 1/((1-alpha)^K (1-beta)^L):
//
//   tail_bkl(K, L, a) = sum over i - j >= a of
//                       2^{-(i+j)} C(i+K-1, K-1) C(j+L-1, L-1),
//
// with the convention that K = 0 (resp. L = 0) pins i = 0 (resp. j = 0).
// Evaluated in closed form: the inner single-index tail
//   sum_{i>=c} 2^{-i} C(i+K-1, K-1) = 2^{1-c} sum_{s<K} C(K+c-1, s)   (c >= 0)
// reduces the double sum to finitely many weighted binomial sums over j,
// which are summed exactly against 4^{-j}.  Values with a <= 0 go through the
// complement, tail_bkl(K, L, a) = 2^{K+L} - tail_bkl(L, K, 1-a).
// Memoized per thread on (K, L, a).
Rational tail_bkl(unsigned K, unsigned L, std::int64_t a);

// B_m(a) = 4^{-m} tail_bkl(m, m, a): the weighted tail of
// (alpha beta / ((1-alpha)(1-beta)))^m over i - j >= a.
Rational frak_b(unsigned m, std::int64_t a);

// D_l(r) = sum_{j<=l} C(l,j) (-1)^j B_{N-j}(r).  Throws if l > N.
Rational script_d(unsigned ell, std::int64_t r, unsigned n_pairs);

// Weighted coefficient sums of an explicit rational function, each obtained
// by expanding the numerator monomial by monomial against tail_bkl.
Rational mass_diag_exactly(const RatFun2& f, std::int64_t m);
Rational mass_diag_at_least(const RatFun2& f, std::int64_t a);
Rational mass_total(const RatFun2& f);

// mu_t(m): the density of n with s(n+t) - s(n) = m when t represents an
// integer; defined for every expansion via the coefficient sum.
Rational mu(const BlockExpansion& t, std::int64_t m);

// Delta_t(a) = sum_{m>=a} mu_t(m), in closed form.
Rational delta(const BlockExpansion& t, std::int64_t a);

// c_t = Delta_t(0), computed by the tail route (no truncation anywhere).
Rational cusick(const BlockExpansion& t);

// c_t for an integer t >= 0 (reduce to the odd part first; c_0 = 1).
Rational cusick_t(std::uint64_t t);

// mu for an integer t >= 0 (mu_0 is the point mass at 0).
Rational mu_t(std::uint64_t t, std::int64_t m);

// sum_m mu_t(m); equals 1 exactly when the last entry is infinite.
Rational total_mass(const BlockExpansion& t);

// c_t by enumerating selection words tau over the 2N blocks:
//   sum over tau with tau . t finite of
//     (-1)^{|tau|_1} 2^{-tau.t} D_{|tau|_10}(tau . (t_o - t_e)),
// where t_e picks the ones-block lengths and t_o the zeros-block lengths.
// Requires N <= 16 (the loop is 2^{2N}); must agree with cusick() exactly.
Rational cusick_via_corollary(const BlockExpansion& t);

// Upper-triangle weighted sum of breve_gamma(t); breve_c(t) >= 0 is the
// reduced form of the appending-ones conjecture.
Rational breve_c(std::uint64_t odd_t);

}  // namespace sodcorr
