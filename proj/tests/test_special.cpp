#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "special.hpp"
#include "tails.hpp"
#include "test_support.hpp"
#include "transfer.hpp"

using namespace sodcorr;
using testsupport::R;

TEST_CASE("correlation values at pi") {
  CHECK(tm_gamma(0) == 1);
  CHECK(tm_gamma(1) == Rational(-1, 3));
  CHECK(tm_gamma(19) == Rational(-1, 12));
  CHECK(tm_gamma(723) == Rational(17, 384));
  CHECK(tm_gamma(813) == Rational(17, 384));
}

TEST_CASE("recurrence closure") {
  for (std::uint64_t t = 0; t < (1u << 14); ++t) {
    REQUIRE(tm_gamma(2 * t) == tm_gamma(t));
    REQUIRE(tm_gamma(2 * t + 1) == -(tm_gamma(t) + tm_gamma(t + 1)) / 2);
  }
}

TEST_CASE("values at pi agree with the rational-function route") {
  const bool ok = testsupport::parallel_all((1u << 14) / 2, [](std::uint64_t index) {
    const std::uint64_t t = 2 * index + 1;
    const Rational direct =
        rf_eval(gamma_ratfun(to_blocks(t)), Rational(-1, 2), Rational(-1, 2));
    return direct == tm_gamma(t);
  });
  CHECK(ok);
}

TEST_CASE("component form at pi") {
  CHECK(tm_component_check(1));
  CHECK(tm_component_check(19));
  CHECK(tm_component_check(153));
  for (std::uint64_t t = 1; t < (1u << 9); t += 2) REQUIRE(tm_component_check(t));
}

TEST_CASE("value table rows") {
  const TmTable table = tm_table(5);
  REQUIRE(table.rows.size() == 5);
  auto row_equals = [&](unsigned r, std::vector<const char*> expected) {
    REQUIRE(table.rows[r].size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
      REQUIRE(table.rows[r][i] == R(expected[i]));
  };
  row_equals(0, {"1", "1"});
  row_equals(1, {"1", "-1", "1"});
  row_equals(2, {"1", "0", "-1", "0", "1"});
  row_equals(3, {"1", "-1/2", "0", "1/2", "-1", "1/2", "0", "-1/2", "1"});
  row_equals(4, {"1", "-1/4", "-1/2", "1/4", "0", "-1/4", "1/2", "1/4", "-1", "1/4",
                 "1/2", "-1/4", "0", "1/4", "-1/2", "-1/4", "1"});

  // endpoints are 1 and consecutive rows agree at the shared value
  const TmTable deep = tm_table(9);
  for (unsigned r = 0; r < 9; ++r) {
    REQUIRE(deep.rows[r].front() == 1);
    REQUIRE(deep.rows[r].back() == 1);
    if (r + 1 < 9) REQUIRE(deep.rows[r].back() == deep.rows[r + 1].front());
  }
  CHECK_THROWS_AS(tm_table(21), std::invalid_argument);
}

TEST_CASE("sign change densities") {
  CHECK(sign_change_density(19) == Rational(13, 24));
  CHECK(sign_change_density(25) == Rational(13, 24));
  CHECK(sign_change_density(1) == Rational(2, 3));
}

TEST_CASE("extreme-case closed form") {
  CHECK(c_tn_closed(1) == Rational(2, 3));
  CHECK(c_tn_closed(2) == Rational(5, 9));
  CHECK(c_tn_closed(3) == Rational(115, 216));
  for (unsigned n = 1; n <= 8; ++n)
    REQUIRE(c_tn_closed(n) == cusick(extreme_expansion(n)));
}

TEST_CASE("extreme-case lower bound in squared rational form") {
  CHECK(c_tn_lower_bound_check(1));
  CHECK(c_tn_lower_bound_check(5));
  CHECK(c_tn_lower_bound_check(100));
}

TEST_CASE("ones-over-zeros closed form") {
  CHECK(c_ones_over_zeros(1) == Rational(3, 4));
  CHECK(c_ones_over_zeros(2) == Rational(11, 16));
  CHECK(c_ones_over_zeros(4) == Rational(1, 2) + Rational(35, 256));
  for (unsigned n = 1; n <= 8; ++n)
    REQUIRE(c_ones_over_zeros(n) == cusick(ones_over_zeros_expansion(n)));
}

TEST_CASE("diagonal array") {
  const OeisArray array = oeis_array(5, 5);
  CHECK(array.at(2, 2) == Rational(16, 27));
  CHECK(array.at(5, 5) == Rational(10802, 19683));
  CHECK(array.at(1, 2) == Rational(2, 9));
  CHECK(array.at(0, 3) == 0);
  CHECK(array.at(4, 0) == 1);
  CHECK(oeis_diagonal_check(10) == std::nullopt);
}

TEST_CASE("finite binomial sum identity") {
  CHECK(binom_identity_check(3, 3, Rational(1, 2)));
  CHECK(binom_identity_check(0, 5, Rational(1, 3)));
  CHECK(binom_identity_check(2, 4, Rational(1, 4)));
  CHECK(binom_identity_check(4, 4, Rational(1, 4)));
  CHECK(binom_identity_check(5, 2, Rational(-2, 3)));
  CHECK_THROWS_AS(binom_identity_check(2, 2, Rational(1)), std::domain_error);
  // x = 1/2, n = m: the sum collapses to 2^m
  for (unsigned m = 0; m <= 8; ++m) {
    Rational sum = 0;
    for (unsigned k = 0; k <= m; ++k)
      sum += Rational(binomial(m + k, k)) * pow2(-static_cast<std::int64_t>(k));
    REQUIRE(sum == pow2(m));
    REQUIRE(binom_identity_check(m, m, Rational(1, 2)));
  }
}

TEST_CASE("central binomial bounds") {
  CHECK(wallis_bound_check(1));
  CHECK(wallis_bound_check(10));
  CHECK(wallis_bound_check(200));
}

TEST_CASE("a_{N,q} family") {
  for (unsigned q = 1; q <= 10; ++q) REQUIRE(a_nq(1, q) == Rational(-2, 3));
  CHECK(a_nq(2, 1) == Rational(-2, 9));
  CHECK(a_nq(4, 1) == Rational(94, 81));
  for (unsigned n = 1; n <= 30; ++n)
    for (unsigned q = 1; q <= 30; ++q) REQUIRE(a_nq(n, q) == a_nq_recurrence(n, q));
  CHECK(problem_scan(60).holds);
}

TEST_CASE("a_{N,q} generating function coefficients") {
  // 2xy(2x-1) / ((4x-3)(x+y-1)) expanded to total degree 12
  constexpr int kDegree = 12;
  std::vector<std::vector<Rational>> coeffs(kDegree + 1,
                                            std::vector<Rational>(kDegree + 1, Rational(0)));
  // 1/(4x-3) = -(1/3) sum (4x/3)^a ; 1/(x+y-1) = -sum (x+y)^b
  for (int a = 0; a <= kDegree; ++a)
    for (int b = 0; a + b <= kDegree; ++b)
      for (int i = 0; i <= b; ++i) {
        // x^{a+i} y^{b-i} with weight (4/3)^a C(b,i) / 3
        const int xe = a + i, ye = b - i;
        if (xe > kDegree || ye > kDegree) continue;
        coeffs[xe][ye] +=
            rat_pow(Rational(4, 3), a) * Rational(binomial(b, i)) / 3;
      }
  // multiply by 2xy(2x-1) = 4x^2 y - 2xy
  std::vector<std::vector<Rational>> gf(kDegree + 1,
                                        std::vector<Rational>(kDegree + 1, Rational(0)));
  for (int i = 0; i <= kDegree; ++i)
    for (int j = 0; j <= kDegree; ++j) {
      if (coeffs[i][j] == 0) continue;
      if (i + 2 <= kDegree && j + 1 <= kDegree) gf[i + 2][j + 1] += 4 * coeffs[i][j];
      if (i + 1 <= kDegree && j + 1 <= kDegree) gf[i + 1][j + 1] -= 2 * coeffs[i][j];
    }
  for (int n = 1; n + 1 <= kDegree; ++n)
    for (int q = 1; n + q <= kDegree; ++q)
      REQUIRE(gf[n][q] == a_nq(static_cast<unsigned>(n), static_cast<unsigned>(q)));
}

TEST_CASE("two-pair difference formula") {
  CHECK(n2_difference_formula(1, 1, 1) == Rational(1, 24));
  for (unsigned k = 1; k <= 8; ++k)
    for (unsigned l = 1; l <= 8; ++l)
      for (unsigned m = 1; m <= 8; ++m) {
        const Rational formula = n2_difference_formula(k, l, m);
        REQUIRE(formula > 0);
        const BlockExpansion full = interleave(
            {ExtNat::finite(m), ExtNat::finite(k)},
            {ExtNat::finite(l), ExtNat::infinity()});
        const BlockExpansion dropped = interleave(
            {ExtNat::finite(m), ExtNat::infinity()},
            {ExtNat::finite(l), ExtNat::infinity()});
        REQUIRE(formula == cusick(full) - cusick(dropped));
      }
}

TEST_CASE("extreme values decrease strictly") {
  CHECK(c_tn_closed(1) > c_tn_closed(2));
  CHECK(c_tn_closed(2) > c_tn_closed(3));
  CHECK(tn_monotone_check(50));
}
