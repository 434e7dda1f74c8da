#include "transfer.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace sodcorr {

namespace {

// Multiply p by (1-alpha)^dk (1-beta)^dl.
Poly2 lift(const Poly2& p, unsigned dk, unsigned dl) {
  if (dk == 0 && dl == 0) return p;
  return p * Poly2::denom(dk, dl);
}

}  // namespace

RatFun2 rf_add(const RatFun2& a, const RatFun2& b) {
  const unsigned k = std::max(a.denom_k, b.denom_k);
  const unsigned l = std::max(a.denom_l, b.denom_l);
  RatFun2 out;
  out.denom_k = k;
  out.denom_l = l;
  out.numer = lift(a.numer, k - a.denom_k, l - a.denom_l) +
              lift(b.numer, k - b.denom_k, l - b.denom_l);
  return out;
}

RatFun2 rf_mul(const RatFun2& a, const RatFun2& b) {
  return {a.numer * b.numer, a.denom_k + b.denom_k, a.denom_l + b.denom_l};
}

RatFun2 rf_scale(const RatFun2& a, const Rational& c) {
  return {a.numer.scaled(c), a.denom_k, a.denom_l};
}

bool rf_equal(const RatFun2& a, const RatFun2& b) {
  const unsigned k = std::max(a.denom_k, b.denom_k);
  const unsigned l = std::max(a.denom_l, b.denom_l);
  return lift(a.numer, k - a.denom_k, l - a.denom_l) ==
         lift(b.numer, k - b.denom_k, l - b.denom_l);
}

Rational rf_eval(const RatFun2& f, const Rational& a, const Rational& b) {
  if (a == 1 || b == 1) throw std::domain_error("rf_eval: pole at alpha=1 or beta=1");
  Rational value = f.numer.eval(a, b);
  value /= rat_pow(Rational(1) - a, f.denom_k);
  value /= rat_pow(Rational(1) - b, f.denom_l);
  return value;
}

BiSeries expand(const RatFun2& f, int order) {
  // [alpha^i beta^j] of alpha^p beta^q / ((1-alpha)^K (1-beta)^L) is
  // C(i-p+K-1, K-1) C(j-q+L-1, L-1) for i >= p, j >= q (and the indicator of
  // i = p resp. j = q when K resp. L is zero).
  BiSeries out(order);
  const unsigned K = f.denom_k, L = f.denom_l;
  std::vector<Int> ck(order + 1), cl(order + 1);
  for (int d = 0; d <= order; ++d) {
    ck[d] = K == 0 ? Int(d == 0 ? 1 : 0) : binomial(d + K - 1, K - 1);
    cl[d] = L == 0 ? Int(d == 0 ? 1 : 0) : binomial(d + L - 1, L - 1);
  }
  for (const auto& [key, c] : f.numer.terms()) {
    const auto [p, q] = key;
    if (p < 0 || q < 0) throw std::logic_error("expand: negative exponent");
    if (p > order || q > order) continue;
    for (int i = static_cast<int>(p); i <= order; ++i) {
      const Rational ci = c * ck[i - p];
      if (ci == 0) continue;
      for (int j = static_cast<int>(q); j <= order; ++j)
        out.add_coeff(i, j, ci * cl[j - q]);
    }
  }
  return out;
}

TransferMatrix TransferMatrix::identity() {
  TransferMatrix id;
  id.m[0][0] = RatFun2::one();
  id.m[1][1] = RatFun2::one();
  return id;
}

TransferMatrix tm_mul(const TransferMatrix& a, const TransferMatrix& b) {
  TransferMatrix out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      out.m[r][c] = rf_add(rf_mul(a.m[r][0], b.m[0][c]), rf_mul(a.m[r][1], b.m[1][c]));
  return out;
}

TransferMatrix a0_pow(const ExtNat& l) {
  TransferMatrix out;
  out.m[0][0] = RatFun2::one();
  if (l.is_infinite()) {
    // [[1, 0], [alpha/(1-beta), 0]]
    out.m[1][0] = {Poly2::alpha(), 0, 1};
    return out;
  }
  const std::int64_t e = static_cast<std::int64_t>(l.value());
  // [[1, 0], [alpha(1-beta^l)/(1-beta), beta^l]]
  Poly2 lower_left = Poly2::alpha();
  lower_left.add_term(1, e, -1);
  out.m[1][0] = {std::move(lower_left), 0, 1};
  out.m[1][1] = RatFun2::from_poly(Poly2::monomial(0, e, 1));
  return out;
}

TransferMatrix a1_pow(const ExtNat& k) {
  TransferMatrix out;
  out.m[1][1] = RatFun2::one();
  if (k.is_infinite()) {
    // [[0, beta/(1-alpha)], [0, 1]]
    out.m[0][1] = {Poly2::beta(), 1, 0};
    return out;
  }
  const std::int64_t e = static_cast<std::int64_t>(k.value());
  // [[alpha^k, beta(1-alpha^k)/(1-alpha)], [0, 1]]
  out.m[0][0] = RatFun2::from_poly(Poly2::monomial(e, 0, 1));
  Poly2 upper_right = Poly2::beta();
  upper_right.add_term(e, 1, -1);
  out.m[0][1] = {std::move(upper_right), 1, 0};
  return out;
}

TransferMatrix product_matrix(const BlockExpansion& t) {
  TransferMatrix product = TransferMatrix::identity();
  for (std::size_t i = 0; i < t.pair_count(); ++i) {
    product = tm_mul(product, a1_pow(t.entry(2 * i)));
    product = tm_mul(product, a0_pow(t.entry(2 * i + 1)));
  }
  return product;
}

RatFun2 gamma_ratfun(const BlockExpansion& t) { return product_matrix(t).m[0][0]; }

BiSeries gamma_series(const BlockExpansion& t, int order) {
  return expand(gamma_ratfun(t), order);
}

RatFun2 breve_gamma(std::uint64_t odd_t) {
  RatFun2 factor{Poly2::one_minus_alpha_minus_beta(), 1, 0};
  return rf_mul(factor, gamma_ratfun(to_blocks(odd_t)));
}

RatFun2 append_ones_limit(std::uint64_t odd_t) {
  RatFun2 factor{Poly2::beta(), 1, 0};
  return rf_mul(factor, gamma_ratfun(to_blocks(odd_t)));
}

}  // namespace sodcorr
