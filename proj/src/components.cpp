#include "components.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <tuple>

namespace sodcorr {

namespace {

struct WordScan {
  unsigned ones;
  unsigned onezero;
  std::int64_t dot_e;  // tau . t_e (ones-block lengths at even positions)
  std::int64_t dot_o;  // tau . t_o (zeros-block lengths at odd positions)
};

// Enumerates words as integers, bit j = position j.
bool scan_word(const BlockExpansion& t, std::uint64_t w, std::uint64_t inf_mask,
               std::uint64_t pair_mask, WordScan& out) {
  if (w & inf_mask) return false;
  out.ones = static_cast<unsigned>(std::popcount(w));
  out.onezero = static_cast<unsigned>(std::popcount(w & ~(w >> 1) & pair_mask));
  out.dot_e = 0;
  out.dot_o = 0;
  for (std::uint64_t rest = w; rest != 0; rest &= rest - 1) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(rest));
    const std::int64_t v = static_cast<std::int64_t>(t.entry(j).value());
    if (j % 2 == 0)
      out.dot_e += v;
    else
      out.dot_o += v;
  }
  return true;
}

void require_enumerable(const BlockExpansion& t) {
  if (t.pair_count() > 16)
    throw std::length_error("word enumeration capped at N = 16");
}

}  // namespace

RatFun2 frak_g(unsigned n_pairs, unsigned n) {
  if (n > n_pairs) throw std::invalid_argument("frak_g: n must be <= N");
  Poly2 numer = Poly2::monomial(n_pairs - n, n_pairs - n, 1) *
                Poly2::one_minus_alpha_minus_beta().pow(n);
  return {std::move(numer), n_pairs, n_pairs};
}

ComponentPoly frak_c(const BlockExpansion& t, unsigned n) {
  require_enumerable(t);
  const std::size_t pairs = t.pair_count();
  if (n > pairs) throw std::invalid_argument("frak_c: n must be <= N");
  ComponentPoly out;
  if (pairs == 0) {
    out.poly = Poly2::one();
    out.fourier.add_term(0, 1);
    return out;
  }
  const unsigned len = static_cast<unsigned>(2 * pairs);
  const std::uint64_t inf_mask = t.infinite_mask();
  const std::uint64_t pair_mask = (std::uint64_t{1} << (len - 1)) - 1;
  WordScan scan;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << len); ++w) {
    if (!scan_word(t, w, inf_mask, pair_mask, scan)) continue;
    if (scan.onezero != n) continue;
    const Rational sign = scan.ones % 2 == 0 ? 1 : -1;
    out.poly.add_term(scan.dot_e, scan.dot_o, sign);
    out.fourier.add_term(scan.dot_e - scan.dot_o,
                         sign * pow2(-scan.dot_e - scan.dot_o));
  }
  return out;
}

ComponentSet decompose(const BlockExpansion& t) {
  require_enumerable(t);
  ComponentSet set;
  set.pair_count = static_cast<unsigned>(t.pair_count());
  if (set.pair_count == 0) {
    set.parts.push_back(RatFun2::one());
    FourierPoly unit;
    unit.add_term(0, 1);
    set.fourier_parts.push_back(std::move(unit));
    return set;
  }
  for (unsigned n = 0; n <= set.pair_count; ++n) {
    ComponentPoly cp = frak_c(t, n);
    RatFun2 part = frak_g(set.pair_count, n);
    part.numer = part.numer * cp.poly;
    if (n % 2 == 1) part = rf_scale(part, -1);
    set.parts.push_back(std::move(part));
    set.fourier_parts.push_back(std::move(cp.fourier));
  }
  return set;
}

RatFun2 alt_decompose(const BlockExpansion& t) {
  require_enumerable(t);
  const std::size_t pairs = t.pair_count();
  if (pairs == 0) return RatFun2::one();
  const unsigned len = static_cast<unsigned>(2 * pairs);
  const std::uint64_t inf_mask = t.infinite_mask();
  const std::uint64_t pair_mask = (std::uint64_t{1} << (len - 1)) - 1;

  // Group words by (dot_e, dot_o, |tau|_10) with signs accumulated, then
  // attach the lifted b_{N-j} combination once per group.
  std::map<std::tuple<std::int64_t, std::int64_t, unsigned>, Rational> groups;
  WordScan scan;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << len); ++w) {
    if (!scan_word(t, w, inf_mask, pair_mask, scan)) continue;
    const Rational sign = scan.ones % 2 == 0 ? 1 : -1;
    groups[{scan.dot_e, scan.dot_o, scan.onezero}] += sign;
  }

  const unsigned n_pairs = static_cast<unsigned>(pairs);
  Poly2 numer;
  for (const auto& [key, weight] : groups) {
    if (weight == 0) continue;
    const auto [dot_e, dot_o, onezero] = key;
    Poly2 inner;
    for (unsigned j = 0; j <= onezero; ++j) {
      // b_{N-j} lifted to denominator exponents (N, N):
      // (alpha beta)^{N-j} ((1-alpha)(1-beta))^j.
      Poly2 lifted = Poly2::monomial(n_pairs - j, n_pairs - j, 1) * Poly2::denom(j, j);
      Rational c = Rational(binomial(onezero, j));
      if (j % 2 == 1) c = -c;
      inner += lifted.scaled(c);
    }
    numer += inner.times_monomial(dot_e, dot_o).scaled(weight);
  }
  return {std::move(numer), n_pairs, n_pairs};
}

const char* t_symbol_name(TSymbol s) {
  switch (s) {
    case TSymbol::T00: return "T00";
    case TSymbol::T10: return "T10";
    case TSymbol::T01: return "T01";
    case TSymbol::T11: return "T11";
  }
  return "?";
}

const PolyMatrix& t_matrix(TSymbol s) {
  static const PolyMatrix t00 = [] {
    PolyMatrix m;
    m[0][0] = Poly2::monomial(1, 1, 1);                       // alpha beta
    m[1][0] = Poly2::alpha() - Poly2::monomial(2, 0, 1);      // alpha(1-alpha)
    return m;
  }();
  static const PolyMatrix t10 = [] {
    PolyMatrix m;
    m[0][0] = Poly2::one_minus_alpha_minus_beta();
    return m;
  }();
  static const PolyMatrix t01 = [] {
    PolyMatrix m;
    m[0][0] = Poly2::monomial(1, 1, -1);                      // -alpha beta
    m[0][1] = Poly2::beta() - Poly2::monomial(0, 2, 1);       // beta(1-beta)
    m[1][0] = Poly2::monomial(2, 0, 1) - Poly2::alpha();      // -alpha(1-alpha)
    m[1][1] = Poly2::denom(1, 1);                             // (1-alpha)(1-beta)
    return m;
  }();
  static const PolyMatrix t11 = [] {
    PolyMatrix m;
    m[0][0] = Poly2::monomial(1, 1, 1);                       // alpha beta
    m[0][1] = Poly2::monomial(0, 2, 1) - Poly2::beta();       // -beta(1-beta)
    return m;
  }();
  switch (s) {
    case TSymbol::T00: return t00;
    case TSymbol::T10: return t10;
    case TSymbol::T01: return t01;
    case TSymbol::T11: return t11;
  }
  throw std::logic_error("unreachable");
}

namespace {

TSymbol symbol_from_digits(unsigned first, unsigned last) {
  if (first == 0) return last == 0 ? TSymbol::T00 : TSymbol::T01;
  return last == 0 ? TSymbol::T10 : TSymbol::T11;
}

}  // namespace

TReduction t_reduce(const Word& tau) {
  if (tau.bits.size() < 2 || tau.bits.size() % 2 != 0)
    throw std::invalid_argument("t_reduce: word length must be even and >= 2");
  const WordStats stats = word_stats(tau);
  const unsigned first = tau.bits.front(), last = tau.bits.back();
  const TSymbol nu = symbol_from_digits(first, last);
  const unsigned nu_ones = first + last;
  const unsigned nu_onezero = (first == 1 && last == 0) ? 1 : 0;
  return TReduction{(stats.ones - nu_ones) % 2, stats.onezero - nu_onezero, nu};
}

bool t_product_check(const Word& tau) {
  const TReduction red = t_reduce(tau);
  const std::size_t n = tau.bits.size() / 2;

  PolyMatrix product = t_matrix(symbol_from_digits(tau.bits[0], tau.bits[1]));
  for (std::size_t u = 1; u < n; ++u) {
    const PolyMatrix& next = t_matrix(symbol_from_digits(tau.bits[2 * u], tau.bits[2 * u + 1]));
    PolyMatrix result;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        result[r][c] = product[r][0] * next[0][c] + product[r][1] * next[1][c];
    product = result;
  }

  Poly2 factor = (Poly2::alpha() + Poly2::beta() - Poly2::one()).pow(red.lambda) *
                 Poly2::monomial(static_cast<std::int64_t>(n - 1 - red.lambda),
                                 static_cast<std::int64_t>(n - 1 - red.lambda), 1);
  if (red.sign == 1) factor = factor.scaled(-1);
  const PolyMatrix& target = t_matrix(red.nu);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      if (product[r][c] != factor * target[r][c]) return false;
  return true;
}

bool swap_blocks_check(const std::vector<ExtNat>& ones_blocks,
                       const std::vector<ExtNat>& zeros_blocks,
                       const std::vector<std::size_t>& sigma) {
  const std::size_t n = ones_blocks.size();
  if (zeros_blocks.size() != n || sigma.size() != n)
    throw std::invalid_argument("swap_blocks_check: length mismatch");
  std::vector<bool> seen(n, false);
  for (const std::size_t image : sigma) {
    if (image >= n || seen[image])
      throw std::invalid_argument("swap_blocks_check: not a permutation");
    seen[image] = true;
  }

  const bool zeros_all_infinite =
      std::all_of(zeros_blocks.begin(), zeros_blocks.end(),
                  [](const ExtNat& e) { return e.is_infinite(); });
  const bool ones_all_infinite =
      std::all_of(ones_blocks.begin(), ones_blocks.end(),
                  [](const ExtNat& e) { return e.is_infinite(); });
  if (!zeros_all_infinite && !ones_all_infinite)
    throw std::invalid_argument(
        "swap_blocks_check: one family of blocks must be all infinite");
  if (!zeros_all_infinite && ones_all_infinite && n > 0 && sigma[n - 1] != n - 1)
    throw std::invalid_argument(
        "swap_blocks_check: permutation must fix the last zeros-block");

  auto permuted = [&](const std::vector<ExtNat>& src) {
    std::vector<ExtNat> dst(src.begin(), src.end());
    for (std::size_t i = 0; i < n; ++i) dst[sigma[i]] = src[i];
    return dst;
  };

  const BlockExpansion base = interleave(ones_blocks, zeros_blocks);
  const BlockExpansion swapped =
      zeros_all_infinite ? interleave(permuted(ones_blocks), zeros_blocks)
                         : interleave(ones_blocks, permuted(zeros_blocks));
  return rf_equal(gamma_ratfun(base), gamma_ratfun(swapped));
}

}  // namespace sodcorr
