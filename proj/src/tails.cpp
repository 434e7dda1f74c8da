#include "tails.hpp"

#include <bit>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace sodcorr {

namespace {

// Stirling numbers of the second kind, S(d, r), grown on demand.
const Int& stirling2(unsigned d, unsigned r) {
  thread_local std::vector<std::vector<Int>> table{{Int(1)}};  // S(0,0) = 1
  while (table.size() <= d) {
    const unsigned n = static_cast<unsigned>(table.size());
    std::vector<Int> row(n + 1);
    row[0] = 0;
    row[n] = 1;
    for (unsigned k = 1; k < n; ++k)
      row[k] = Int(k) * table[n - 1][k] + table[n - 1][k - 1];
    table.push_back(std::move(row));
  }
  return table[d][r];
}

// Coefficients (in j) of the polynomial C(j + c, s) = prod_{u<s}(j + c - u)/s!.
std::vector<Rational> binomial_poly(std::int64_t c, unsigned s) {
  std::vector<Rational> p{Rational(1)};
  for (unsigned u = 0; u < s; ++u) {
    std::vector<Rational> next(p.size() + 1, Rational(0));
    const Rational shift(c - static_cast<std::int64_t>(u));
    for (std::size_t d = 0; d < p.size(); ++d) {
      next[d] += p[d] * shift;
      next[d + 1] += p[d];
    }
    p = std::move(next);
  }
  Int s_factorial = 1;
  for (unsigned u = 2; u <= s; ++u) s_factorial *= u;
  for (auto& coeff : p) coeff /= Rational(s_factorial);
  return p;
}

// sum_{j>=0} p(j) x^j for x = 1/4, via the falling-factorial expansion
// j^d = sum_r S(d,r) r! C(j,r) and sum_j C(j,r) x^j = x^r/(1-x)^{r+1}.
Rational quarter_power_sum(const std::vector<Rational>& p) {
  Rational total = 0;
  Int r_factorial = 1;
  std::vector<Rational> basis(p.size());  // sum_j C(j,r) (1/4)^j = (4/3)(1/3)^r
  for (std::size_t r = 0; r < p.size(); ++r)
    basis[r] = Rational(4, 3) * rat_pow(Rational(1, 3), r);
  for (std::size_t d = 0; d < p.size(); ++d) {
    if (p[d] == 0) continue;
    Rational inner = 0;
    Int rf = 1;
    for (std::size_t r = 0; r <= d; ++r) {
      if (r > 0) rf *= Int(r);
      const Int& s2 = stirling2(static_cast<unsigned>(d), static_cast<unsigned>(r));
      if (s2 != 0) inner += Rational(s2 * rf) * basis[r];
    }
    total += p[d] * inner;
  }
  return total;
}

// sum_{j>=0} 4^{-j} C(j+L-1, L-1) C(j+c, s); L = 0 pins j = 0.
Rational weighted_binom_sum(unsigned L, unsigned s, std::int64_t c) {
  if (L == 0) return Rational(binomial(static_cast<std::uint64_t>(c), s));
  const std::vector<Rational> left = binomial_poly(static_cast<std::int64_t>(L) - 1, L - 1);
  const std::vector<Rational> right = binomial_poly(c, s);
  std::vector<Rational> product(left.size() + right.size() - 1, Rational(0));
  for (std::size_t a = 0; a < left.size(); ++a) {
    if (left[a] == 0) continue;
    for (std::size_t b = 0; b < right.size(); ++b) product[a + b] += left[a] * right[b];
  }
  return quarter_power_sum(product);
}

Rational tail_bkl_uncached(unsigned K, unsigned L, std::int64_t a) {
  if (a <= 0) return pow2(K + L) - tail_bkl(L, K, 1 - a);
  Rational sum = 0;
  for (unsigned s = 0; s < K; ++s)
    sum += weighted_binom_sum(L, s, static_cast<std::int64_t>(K) + a - 1);
  return sum * pow2(1 - a);
}

}  // namespace

Rational tail_bkl(unsigned K, unsigned L, std::int64_t a) {
  using MemoKey = std::tuple<unsigned, unsigned, std::int64_t>;
  thread_local std::map<MemoKey, Rational> memo;
  const MemoKey key{K, L, a};
  if (const auto it = memo.find(key); it != memo.end()) return it->second;
  Rational value = tail_bkl_uncached(K, L, a);
  memo.emplace(key, value);
  return value;
}

Rational frak_b(unsigned m, std::int64_t a) {
  return tail_bkl(m, m, a) * pow2(-2 * static_cast<std::int64_t>(m));
}

Rational script_d(unsigned ell, std::int64_t r, unsigned n_pairs) {
  if (ell > n_pairs) throw std::invalid_argument("script_d: l must be <= N");
  Rational sum = 0;
  for (unsigned j = 0; j <= ell; ++j) {
    const Rational term = Rational(binomial(ell, j)) * frak_b(n_pairs - j, r);
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

Rational mass_diag_exactly(const RatFun2& f, std::int64_t m) {
  Rational total = 0;
  for (const auto& [key, c] : f.numer.terms()) {
    const auto [p, q] = key;
    const std::int64_t shifted = m - p + q;
    total += c * pow2(-p - q) *
             (tail_bkl(f.denom_k, f.denom_l, shifted) -
              tail_bkl(f.denom_k, f.denom_l, shifted + 1));
  }
  return total;
}

Rational mass_diag_at_least(const RatFun2& f, std::int64_t a) {
  Rational total = 0;
  for (const auto& [key, c] : f.numer.terms()) {
    const auto [p, q] = key;
    total += c * pow2(-p - q) * tail_bkl(f.denom_k, f.denom_l, a - p + q);
  }
  return total;
}

Rational mass_total(const RatFun2& f) {
  // Full weighted sum: numerator at alpha = beta = 1/2 times 2^{K+L}.
  return f.numer.eval(Rational(1, 2), Rational(1, 2)) * pow2(f.denom_k + f.denom_l);
}

Rational mu(const BlockExpansion& t, std::int64_t m) {
  return mass_diag_exactly(gamma_ratfun(t), m);
}

Rational delta(const BlockExpansion& t, std::int64_t a) {
  return mass_diag_at_least(gamma_ratfun(t), a);
}

Rational cusick(const BlockExpansion& t) { return delta(t, 0); }

Rational cusick_t(std::uint64_t t) {
  if (t == 0) return 1;
  return cusick(to_blocks(reduce_to_odd(t).odd));
}

Rational mu_t(std::uint64_t t, std::int64_t m) {
  if (t == 0) return m == 0 ? Rational(1) : Rational(0);
  return mu(to_blocks(reduce_to_odd(t).odd), m);
}

Rational total_mass(const BlockExpansion& t) { return mass_total(gamma_ratfun(t)); }

Rational cusick_via_corollary(const BlockExpansion& t) {
  const std::size_t n = t.pair_count();
  if (n == 0) return 1;
  if (n > 16) throw std::length_error("word enumeration capped at N = 16");
  const unsigned len = static_cast<unsigned>(2 * n);
  const std::uint64_t inf_mask = t.infinite_mask();
  const std::uint64_t pair_mask = (std::uint64_t{1} << (len - 1)) - 1;
  std::vector<std::int64_t> value(len, 0);
  for (unsigned j = 0; j < len; ++j)
    if (!t.entry(j).is_infinite()) value[j] = static_cast<std::int64_t>(t.entry(j).value());

  Rational c = 0;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << len); ++w) {
    if (w & inf_mask) continue;  // selecting an infinite block contributes 0
    const unsigned ones = static_cast<unsigned>(std::popcount(w));
    const unsigned onezero =
        static_cast<unsigned>(std::popcount(w & ~(w >> 1) & pair_mask));
    std::int64_t dot = 0, diff = 0;  // tau.t and tau.(t_o - t_e)
    for (std::uint64_t rest = w; rest != 0; rest &= rest - 1) {
      const unsigned j = static_cast<unsigned>(std::countr_zero(rest));
      dot += value[j];
      diff += (j % 2 == 1) ? value[j] : -value[j];
    }
    const Rational term =
        pow2(-dot) * script_d(onezero, diff, static_cast<unsigned>(n));
    if (ones % 2 == 0)
      c += term;
    else
      c -= term;
  }
  return c;
}

Rational breve_c(std::uint64_t odd_t) {
  return mass_diag_at_least(breve_gamma(odd_t), 0);
}

}  // namespace sodcorr
