// Truncated bivariate power series in (alpha, beta) over Rational, and finite
// Laurent polynomials in e(theta).
//
// A BiSeries of order M stores exactly the coefficients with i <= M and
// j <= M; everything outside the square is unknown, not zero.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rational.hpp"

namespace sodcorr {

enum class Var { Alpha, Beta };

class BiSeries {
 public:
  explicit BiSeries(int order);

  static BiSeries one(int order);
  // sum_{k<=M} var^k, the truncation of 1/(1-var).
  static BiSeries geom_inv(Var var, int order);

  int order() const { return order_; }

  const Rational& coeff(int i, int j) const;
  void set_coeff(int i, int j, Rational value);
  void add_coeff(int i, int j, const Rational& value);

  // Result order is the minimum of the operand orders.
  BiSeries operator+(const BiSeries& rhs) const;
  BiSeries operator*(const BiSeries& rhs) const;

  // Multiply by alpha^di beta^dj (coefficients shifted off the square drop).
  BiSeries shifted(int di, int dj) const;
  BiSeries scaled(const Rational& c) const;

  bool operator==(const BiSeries&) const = default;

 private:
  int order_;
  std::vector<Rational> coeffs_;  // (order+1)^2, row-major in i
};

struct MassRegion {
  enum class Kind { All, DiagAtLeast, DiagExactly };
  Kind kind = Kind::All;
  std::int64_t value = 0;

  static MassRegion all() { return {Kind::All, 0}; }
  static MassRegion diag_at_least(std::int64_t a) { return {Kind::DiagAtLeast, a}; }
  static MassRegion diag_exactly(std::int64_t m) { return {Kind::DiagExactly, m}; }
};

// Sum of 2^{-(i+j)} coeff(i,j) over the stored coefficients in the region.
Rational weighted_partial_mass(const BiSeries& s, const MassRegion& region);

// Finitely supported map j -> coefficient of e(j theta).
class FourierPoly {
 public:
  FourierPoly() = default;

  void add_term(std::int64_t j, const Rational& c);
  Rational coeff(std::int64_t j) const;
  const std::map<std::int64_t, Rational>& terms() const { return terms_; }

  FourierPoly& operator+=(const FourierPoly& rhs);

  bool operator==(const FourierPoly&) const = default;

 private:
  std::map<std::int64_t, Rational> terms_;
};

// Value at theta = pi: sum of c_j (-1)^j.
Rational fourier_eval_at_pi(const FourierPoly& p);

}  // namespace sodcorr
