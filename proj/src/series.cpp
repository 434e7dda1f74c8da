#include "series.hpp"

#include <algorithm>
#include <stdexcept>

namespace sodcorr {

BiSeries::BiSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(order + 1) * (order + 1), Rational(0));
}

BiSeries BiSeries::one(int order) {
  BiSeries s(order);
  s.set_coeff(0, 0, 1);
  return s;
}

BiSeries BiSeries::geom_inv(Var var, int order) {
  BiSeries s(order);
  for (int k = 0; k <= order; ++k) {
    if (var == Var::Alpha)
      s.set_coeff(k, 0, 1);
    else
      s.set_coeff(0, k, 1);
  }
  return s;
}

const Rational& BiSeries::coeff(int i, int j) const {
  return coeffs_.at(static_cast<std::size_t>(i) * (order_ + 1) + j);
}

void BiSeries::set_coeff(int i, int j, Rational value) {
  coeffs_.at(static_cast<std::size_t>(i) * (order_ + 1) + j) = std::move(value);
}

void BiSeries::add_coeff(int i, int j, const Rational& value) {
  coeffs_.at(static_cast<std::size_t>(i) * (order_ + 1) + j) += value;
}

BiSeries BiSeries::operator+(const BiSeries& rhs) const {
  const int m = std::min(order_, rhs.order_);
  BiSeries out(m);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) out.set_coeff(i, j, coeff(i, j) + rhs.coeff(i, j));
  return out;
}

BiSeries BiSeries::operator*(const BiSeries& rhs) const {
  const int m = std::min(order_, rhs.order_);
  BiSeries out(m);
  for (int i1 = 0; i1 <= m; ++i1)
    for (int j1 = 0; j1 <= m; ++j1) {
      const Rational& a = coeff(i1, j1);
      if (a == 0) continue;
      for (int i2 = 0; i1 + i2 <= m; ++i2)
        for (int j2 = 0; j1 + j2 <= m; ++j2) {
          const Rational& b = rhs.coeff(i2, j2);
          if (b == 0) continue;
          out.add_coeff(i1 + i2, j1 + j2, a * b);
        }
    }
  return out;
}

BiSeries BiSeries::shifted(int di, int dj) const {
  BiSeries out(order_);
  for (int i = 0; i + di <= order_; ++i)
    for (int j = 0; j + dj <= order_; ++j) {
      if (i + di < 0 || j + dj < 0) continue;
      out.set_coeff(i + di, j + dj, coeff(i, j));
    }
  return out;
}

BiSeries BiSeries::scaled(const Rational& c) const {
  BiSeries out(order_);
  for (int i = 0; i <= order_; ++i)
    for (int j = 0; j <= order_; ++j) out.set_coeff(i, j, coeff(i, j) * c);
  return out;
}

Rational weighted_partial_mass(const BiSeries& s, const MassRegion& region) {
  Rational total = 0;
  for (int i = 0; i <= s.order(); ++i)
    for (int j = 0; j <= s.order(); ++j) {
      const Rational& c = s.coeff(i, j);
      if (c == 0) continue;
      const std::int64_t d = static_cast<std::int64_t>(i) - j;
      switch (region.kind) {
        case MassRegion::Kind::All:
          break;
        case MassRegion::Kind::DiagAtLeast:
          if (d < region.value) continue;
          break;
        case MassRegion::Kind::DiagExactly:
          if (d != region.value) continue;
          break;
      }
      total += c * pow2(-static_cast<std::int64_t>(i) - j);
    }
  return total;
}

void FourierPoly::add_term(std::int64_t j, const Rational& c) {
  if (c == 0) return;
  const auto [it, inserted] = terms_.emplace(j, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational FourierPoly::coeff(std::int64_t j) const {
  const auto it = terms_.find(j);
  return it == terms_.end() ? Rational(0) : it->second;
}

FourierPoly& FourierPoly::operator+=(const FourierPoly& rhs) {
  for (const auto& [j, c] : rhs.terms_) add_term(j, c);
  return *this;
}

Rational fourier_eval_at_pi(const FourierPoly& p) {
  Rational out = 0;
  for (const auto& [j, c] : p.terms()) {
    if (j % 2 == 0)
      out += c;
    else
      out -= c;
  }
  return out;
}

}  // namespace sodcorr
