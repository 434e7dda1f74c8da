// Sparse bivariate polynomials in (alpha, beta) with Rational coefficients.
// Exponents are machine integers; terms are kept in a sorted map so that
// iteration order (and hence every derived output) is deterministic.
#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "rational.hpp"

namespace sodcorr {

class Poly2 {
 public:
  using Key = std::pair<std::int64_t, std::int64_t>;
  using Terms = std::map<Key, Rational>;

  Poly2() = default;

  static Poly2 constant(Rational c);
  static Poly2 one() { return constant(1); }
  static Poly2 monomial(std::int64_t i, std::int64_t j, Rational c);
  static Poly2 alpha() { return monomial(1, 0, 1); }
  static Poly2 beta() { return monomial(0, 1, 1); }
  // 1 - alpha - beta
  static Poly2 one_minus_alpha_minus_beta();
  // (1 - alpha)^k * (1 - beta)^l expanded
  static Poly2 denom(unsigned k, unsigned l);

  Poly2& operator+=(const Poly2& rhs);
  Poly2& operator-=(const Poly2& rhs);
  Poly2 operator+(const Poly2& rhs) const;
  Poly2 operator-(const Poly2& rhs) const;
  Poly2 operator*(const Poly2& rhs) const;

  Poly2 times_monomial(std::int64_t i, std::int64_t j) const;
  Poly2 scaled(const Rational& c) const;
  Poly2 pow(unsigned e) const;

  void add_term(std::int64_t i, std::int64_t j, const Rational& c);
  Rational coeff(std::int64_t i, std::int64_t j) const;
  Rational eval(const Rational& a, const Rational& b) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  bool operator==(const Poly2&) const = default;

 private:
  Terms terms_;  // no explicit zero coefficients
};

}  // namespace sodcorr
