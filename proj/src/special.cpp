#include "special.hpp"

#include <bit>
#include <map>
#include <stdexcept>

#include "tails.hpp"

namespace sodcorr {

Rational tm_gamma(std::uint64_t t) {
  thread_local std::map<std::uint64_t, Rational> memo{{0, Rational(1)},
                                                      {1, Rational(-1, 3)}};
  if (const auto it = memo.find(t); it != memo.end()) return it->second;
  Rational value;
  if (t % 2 == 0) {
    value = tm_gamma(t / 2);
  } else {
    value = -(tm_gamma(t / 2) + tm_gamma(t / 2 + 1)) / 2;
  }
  memo.emplace(t, value);
  return value;
}

bool tm_component_check(std::uint64_t odd_t) {
  const BlockExpansion t = to_blocks(odd_t);
  const std::size_t pairs = t.pair_count();
  if (pairs > 16) throw std::length_error("word enumeration capped at N = 16");
  const unsigned len = static_cast<unsigned>(2 * pairs);
  const std::uint64_t pair_mask = (std::uint64_t{1} << (len - 1)) - 1;
  const std::uint64_t last_bit = std::uint64_t{1} << (len - 1);

  // c_by_n[n] accumulates (-1)^{|tau|_1} (-1/2)^{tau.t} over words with last
  // symbol 0 and exactly n adjacent (1,0) factors.
  std::vector<Rational> c_by_n(pairs + 1, Rational(0));
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << len); ++w) {
    if (w & last_bit) continue;
    const unsigned ones = static_cast<unsigned>(std::popcount(w));
    const unsigned onezero =
        static_cast<unsigned>(std::popcount(w & ~(w >> 1) & pair_mask));
    std::int64_t dot = 0;
    for (std::uint64_t rest = w; rest != 0; rest &= rest - 1)
      dot += static_cast<std::int64_t>(
          t.entry(static_cast<unsigned>(std::countr_zero(rest))).value());
    Rational term = rat_pow(Rational(-1, 2), static_cast<std::uint64_t>(dot));
    if (ones % 2 == 1) term = -term;
    c_by_n[onezero] += term;
  }

  Rational total = 0;
  Rational minus8_pow = 1;
  for (std::size_t n = 0; n <= pairs; ++n) {
    total += minus8_pow * c_by_n[n];
    minus8_pow *= -8;
  }
  total *= rat_pow(Rational(1, 9), pairs);
  return total == tm_gamma(odd_t);
}

TmTable tm_table(unsigned rows) {
  if (rows > 20) throw std::invalid_argument("tm_table: at most 20 rows");
  TmTable table;
  for (unsigned r = 0; r < rows; ++r) {
    std::vector<Rational> row;
    const std::uint64_t lo = std::uint64_t{1} << r;
    const std::uint64_t hi = std::uint64_t{1} << (r + 1);
    row.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::uint64_t t = lo; t <= hi; ++t) row.push_back(Rational(-3) * tm_gamma(t));
    table.rows.push_back(std::move(row));
  }
  return table;
}

Rational sign_change_density(std::uint64_t t) {
  return (Rational(1) - tm_gamma(t)) / 2;
}

BlockExpansion extreme_expansion(unsigned n_pairs) {
  if (n_pairs == 0) throw std::invalid_argument("extreme_expansion: N >= 1");
  std::vector<ExtNat> ones(n_pairs, ExtNat::infinity());
  std::vector<ExtNat> zeros;
  for (unsigned i = 0; i + 1 < n_pairs; ++i) zeros.push_back(ExtNat::finite(1));
  zeros.push_back(ExtNat::infinity());
  return interleave(ones, zeros);
}

BlockExpansion ones_over_zeros_expansion(unsigned n_pairs) {
  if (n_pairs == 0) throw std::invalid_argument("ones_over_zeros_expansion: N >= 1");
  std::vector<ExtNat> ones(n_pairs, ExtNat::finite(1));
  std::vector<ExtNat> zeros(n_pairs, ExtNat::infinity());
  return interleave(ones, zeros);
}

Rational c_tn_closed(unsigned n_pairs) {
  if (n_pairs == 0) throw std::invalid_argument("c_tn_closed: N >= 1");
  const unsigned n = n_pairs;
  Rational value(1, 2);
  value += Rational(binomial(2 * n - 2, n - 1)) * rat_pow(Rational(1, 4), n);
  Int sum = 0;
  Int pow3 = 1;
  for (unsigned j = 0; j <= n - 1; ++j) {
    sum += binomial(2 * n - 1, j) * pow3;
    pow3 *= 3;
  }
  value -= Rational(sum) * rat_pow(Rational(1, 12), n);
  return value;
}

bool c_tn_lower_bound_check(unsigned n_pairs) {
  const Rational excess = c_tn_closed(n_pairs) - Rational(1, 2);
  if (excess <= 0) return false;
  // excess > (141/1000) N^{-3/2}, squared: excess^2 N^3 > (141/1000)^2.
  const Rational lhs = excess * excess * Rational(int_pow(Int(n_pairs), 3));
  return lhs > Rational(141, 1000) * Rational(141, 1000);
}

Rational c_ones_over_zeros(unsigned n_pairs) {
  if (n_pairs == 0) throw std::invalid_argument("c_ones_over_zeros: N >= 1");
  return Rational(1, 2) +
         Rational(binomial(2 * n_pairs - 1, n_pairs)) * rat_pow(Rational(1, 4), n_pairs);
}

OeisArray::OeisArray(unsigned k_max, unsigned l_max) : k_max_(k_max), l_max_(l_max) {
  values_.assign(static_cast<std::size_t>(k_max + 1) * (l_max + 1), Rational(0));
  auto idx = [this](unsigned k, unsigned l) {
    return static_cast<std::size_t>(k) * (l_max_ + 1) + l;
  };
  for (unsigned k = 0; k <= k_max; ++k) values_[idx(k, 0)] = 1;
  for (unsigned l = 1; l <= l_max; ++l) values_[idx(0, l)] = 0;
  for (unsigned k = 1; k <= k_max; ++k)
    for (unsigned l = 1; l <= l_max; ++l)
      values_[idx(k, l)] =
          (values_[idx(k - 1, l)] + values_[idx(k, l - 1)] + values_[idx(k - 1, l - 1)]) / 3;
}

const Rational& OeisArray::at(unsigned k, unsigned l) const {
  if (k > k_max_ || l > l_max_) throw std::out_of_range("OeisArray::at");
  return values_[static_cast<std::size_t>(k) * (l_max_ + 1) + l];
}

OeisArray oeis_array(unsigned k_max, unsigned l_max) { return OeisArray(k_max, l_max); }

std::optional<unsigned> oeis_diagonal_check(unsigned m_max) {
  const OeisArray array(m_max, m_max);
  for (unsigned m = 0; m <= m_max; ++m)
    if (array.at(m, m) != frak_b(m, 0)) return m;
  return std::nullopt;
}

bool binom_identity_check(unsigned m, unsigned n, const Rational& x) {
  if (x == 1) throw std::domain_error("binom_identity_check: x must differ from 1");
  Rational lhs = 0;
  Rational x_pow = 1;
  for (unsigned k = 0; k <= n; ++k) {
    lhs += Rational(binomial(m + k, k)) * x_pow;
    x_pow *= x;
  }
  const Rational one_minus_x = Rational(1) - x;
  Rational rhs = rat_pow(1 / one_minus_x, m + 1);
  Rational inner = 0;
  const Rational ratio = x / one_minus_x;
  Rational ratio_pow = 1;
  for (unsigned j = 0; j <= m; ++j) {
    inner += Rational(binomial(m + n + 1, m - j)) * ratio_pow;
    ratio_pow *= ratio;
  }
  rhs -= rat_pow(x, n + 1) / one_minus_x * inner;
  if (lhs != rhs) return false;

  if (n == m && x == Rational(1, 2) && lhs != pow2(m)) return false;
  if (n == m && x == Rational(1, 4)) {
    Rational alt = rat_pow(Rational(4, 3), m + 1);
    Int sum = 0;
    Int pow3 = 1;
    for (unsigned j = 0; j <= m; ++j) {
      sum += binomial(2 * m + 1, j) * pow3;
      pow3 *= 3;
    }
    alt -= Rational(1, 3) * Rational(sum) * rat_pow(Rational(1, 12), m);
    if (lhs != alt) return false;
  }
  return true;
}

bool wallis_bound_check(unsigned n_max) {
  const Rational pi_lo(333, 106), pi_hi(355, 113);
  for (unsigned n = 1; n <= n_max; ++n) {
    const Rational ratio = pow2(2 * static_cast<std::int64_t>(n)) / Rational(binomial(2 * n, n));
    const Rational squared = ratio * ratio;
    if (!(pi_hi * n < squared)) return false;
    if (!(squared < pi_lo * Rational(2 * n + 1, 2))) return false;
  }
  return true;
}

Rational a_nq(unsigned n, unsigned q) {
  if (n == 0 || q == 0) throw std::invalid_argument("a_nq: N, q >= 1");
  Int sum = 0;
  Int pow3 = 1;
  for (unsigned j = 0; j <= n - 1; ++j) {
    sum += binomial(n + q - 1, j) * pow3;
    pow3 *= 3;
  }
  return Rational(sum, int_pow(Int(3), n)) - Rational(binomial(n + q - 2, q - 1));
}

Rational a_nq_recurrence(unsigned n, unsigned q) {
  if (n == 0 || q == 0) throw std::invalid_argument("a_nq_recurrence: N, q >= 1");
  std::vector<Rational> row(q + 1);  // row[k] = a_{1,k}
  for (unsigned k = 1; k <= q; ++k) row[k] = Rational(-2, 3);
  for (unsigned i = 2; i <= n; ++i) {
    std::vector<Rational> next(q + 1);
    next[1] = rat_pow(Rational(4, 3), i) - 2;
    for (unsigned k = 2; k <= q; ++k) next[k] = next[k - 1] + row[k];
    row = std::move(next);
  }
  return row[q];
}

ProblemScanReport problem_scan(unsigned n_max) {
  ProblemScanReport report;
  for (unsigned n = 4; n <= n_max; ++n) {
    for (unsigned q = 1; q + 3 <= n; ++q) {
      const Rational value = a_nq(n, q);
      const bool ok = (q == n - 3) ? value >= 0 : value > 0;
      if (!ok) {
        report.holds = false;
        report.first_failure_n = n;
        report.first_failure_q = q;
        return report;
      }
    }
  }
  return report;
}

Rational n2_difference_formula(unsigned k, unsigned ell, unsigned m) {
  if (k == 0 || ell == 0 || m == 0)
    throw std::invalid_argument("n2_difference_formula: k, l, m >= 1");
  const Rational q4k = rat_pow(Rational(1, 4), k);
  const Rational q4l = rat_pow(Rational(1, 4), ell);
  const Rational q4m = rat_pow(Rational(1, 4), m);
  const Rational p4m = rat_pow(Rational(4), m);
  Rational value;
  if (k < ell && k + m < ell) {
    value = q4k * q4m * (Rational(3 * k) * (p4m - 1) + 2 * p4m - Rational(3 * m) + 7) +
            q4l * Rational(6 * m);
  } else if (k < ell) {
    value = q4k * q4m * (p4m * Rational(3 * k + 2) - Rational(3 * ell) + 9) +
            2 * q4l * (Rational(3 * ell) - Rational(3 * k) - 1);
  } else {
    value = 3 * q4k * q4m * (Rational(ell) * (p4m - 1) + 3);
  }
  return value / 27;
}

bool tn_monotone_check(unsigned n_max) {
  if (n_max < 2) throw std::invalid_argument("tn_monotone_check: N_max >= 2");
  Rational prev = c_tn_closed(1);
  for (unsigned n = 2; n <= n_max; ++n) {
    const Rational current = c_tn_closed(n);
    if (!(prev > current) || !(current > Rational(1, 2))) return false;
    prev = current;
  }
  return true;
}

}  // namespace sodcorr
