// The transfer-matrix calculus.  Everything here is exact: a RatFun2 is a
// bivariate polynomial numerator over a denominator (1-alpha)^K (1-beta)^L,
// never normalized; equality is decided by cross-multiplication.
//
// The matrices
//     A_0 = [[1, 0], [alpha, beta]],   A_1 = [[alpha, beta], [0, 1]]
// encode the digit recurrence for (gamma_t, gamma_{t+1}); their finite powers
// have closed forms and the infinite powers are
//     A_0^inf = [[1, 0], [alpha/(1-beta), 0]],
//     A_1^inf = [[0, beta/(1-alpha)], [0, 1]].
// For an expansion t = (k_0, l_0, ..., k_{N-1}, l_{N-1}), the product
//     M(t) = A_1^{k_0} A_0^{l_0} ... A_1^{k_{N-1}} A_0^{l_{N-1}}
// has gamma_t as its top-left entry.
#pragma once

#include <cstdint>

#include "blocks.hpp"
#include "poly2.hpp"
#include "series.hpp"

namespace sodcorr {

struct RatFun2 {
  Poly2 numer;
  unsigned denom_k = 0;  // exponent of (1 - alpha)
  unsigned denom_l = 0;  // exponent of (1 - beta)

  static RatFun2 zero() { return {}; }
  static RatFun2 one() { return {Poly2::one(), 0, 0}; }
  static RatFun2 from_poly(Poly2 p) { return {std::move(p), 0, 0}; }
};

RatFun2 rf_add(const RatFun2& a, const RatFun2& b);
RatFun2 rf_mul(const RatFun2& a, const RatFun2& b);
RatFun2 rf_scale(const RatFun2& a, const Rational& c);
bool rf_equal(const RatFun2& a, const RatFun2& b);

// Numeric evaluation at a rational point with a != 1, b != 1.
Rational rf_eval(const RatFun2& f, const Rational& a, const Rational& b);

// Taylor coefficients up to (order, order).
BiSeries expand(const RatFun2& f, int order);

struct TransferMatrix {
  RatFun2 m[2][2];
  static TransferMatrix identity();
};

TransferMatrix tm_mul(const TransferMatrix& a, const TransferMatrix& b);

TransferMatrix a0_pow(const ExtNat& l);
TransferMatrix a1_pow(const ExtNat& k);

// M(t); the empty expansion yields the identity.
TransferMatrix product_matrix(const BlockExpansion& t);

// Top-left entry of M(t).
RatFun2 gamma_ratfun(const BlockExpansion& t);

// Taylor coefficients of gamma up to (order, order).
BiSeries gamma_series(const BlockExpansion& t, int order);

// (1 - alpha - beta)/(1 - alpha) * gamma_t, for odd t.
RatFun2 breve_gamma(std::uint64_t odd_t);

// gamma_t * beta/(1 - alpha): the limit of gamma over t with ever longer
// blocks of ones appended at the least significant end.
RatFun2 append_ones_limit(std::uint64_t odd_t);

}  // namespace sodcorr
