// The component decomposition of gamma and the T-matrix reduction algebra.
//
// For a 2N-entry expansion t, gamma_t splits as
//     gamma_t = sum_{0<=n<=N} (-1)^n g_{N,n} C_{N,n},
// where g_{N,n} = (alpha beta)^{N-n} (1-alpha-beta)^n / ((1-alpha)(1-beta))^N
// and C_{N,n} sums (-1)^{|tau|_1} alpha^{tau.t_e} beta^{tau.t_o} over the
// selection words tau with exactly n adjacent (1,0) factors.  Words touching
// an infinite block drop out.  Component n vanishes to order theta^{2n} at
// theta = 0, so the decomposition grades gamma by flatness.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "blocks.hpp"
#include "poly2.hpp"
#include "series.hpp"
#include "transfer.hpp"

namespace sodcorr {

// g_{N,n} as an exact rational function with denominator exponents (N, N).
RatFun2 frak_g(unsigned n_pairs, unsigned n);

struct ComponentPoly {
  Poly2 poly;           // C_{N,n}(alpha, beta)
  FourierPoly fourier;  // the substitution alpha = e(theta)/2, beta = e(-theta)/2
};

// C_{N,n} both as a bivariate polynomial and as a Laurent polynomial whose
// term for tau has frequency tau.(t_e - t_o) and coefficient
// (-1)^{|tau|_1} 2^{-tau.t}.  Requires N <= 16.
ComponentPoly frak_c(const BlockExpansion& t, unsigned n);

struct ComponentSet {
  unsigned pair_count = 0;
  std::vector<RatFun2> parts;          // part n = (-1)^n g_{N,n} C_{N,n}
  std::vector<FourierPoly> fourier_parts;  // the C_{N,n} Laurent polynomials
};

// All components; the parts sum to gamma_ratfun(t) exactly.
ComponentSet decompose(const BlockExpansion& t);

// The sign-explicit form: sum over words tau of
//   (-1)^{|tau|_1} alpha^{tau.t_e} beta^{tau.t_o}
//     sum_{j<=|tau|_10} C(|tau|_10, j) (-1)^j b_{N-j},
// with b_m = (alpha beta / ((1-alpha)(1-beta)))^m.  Equals gamma_ratfun(t).
RatFun2 alt_decompose(const BlockExpansion& t);

// Symbols for the four structure matrices T_00, T_10, T_01, T_11 appearing in
//   A_1^k A_0^l = (T_00 + alpha^k T_10 + beta^l T_01 + alpha^k beta^l T_11)
//                 / ((1-alpha)(1-beta)).
enum class TSymbol { T00, T10, T01, T11 };

const char* t_symbol_name(TSymbol s);

using PolyMatrix = std::array<std::array<Poly2, 2>, 2>;

const PolyMatrix& t_matrix(TSymbol s);

struct TReduction {
  unsigned sign;    // 0 or 1
  unsigned lambda;  // exponent of (alpha + beta - 1)
  TSymbol nu;       // surviving symbol: (first digit, last digit)
};

// Reduction data for a word of even length 2N >= 2:
//   T_{u_0} ... T_{u_{N-1}} =
//     (-1)^sign (alpha+beta-1)^lambda (alpha beta)^{N-1-lambda} T_nu,
// with nu the (first, last) digits, sign = |tau|_1 - |nu|_1 mod 2, and
// lambda = |tau|_10 - |nu|_10.
TReduction t_reduce(const Word& tau);

// Multiplies the T matrices literally and confirms the reduction above.
bool t_product_check(const Word& tau);

// Exact gamma invariance under permuting the finite blocks of one kind when
// all blocks of the other kind are infinite.  sigma maps position -> image;
// case (i): all zeros-blocks infinite, any sigma on the ones-blocks;
// case (ii): all ones-blocks infinite, sigma must fix the last zeros-block.
bool swap_blocks_check(const std::vector<ExtNat>& ones_blocks,
                       const std::vector<ExtNat>& zeros_blocks,
                       const std::vector<std::size_t>& sigma);

}  // namespace sodcorr
