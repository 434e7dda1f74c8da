#include "poly2.hpp"

namespace sodcorr {

Poly2 Poly2::constant(Rational c) { return monomial(0, 0, std::move(c)); }

Poly2 Poly2::monomial(std::int64_t i, std::int64_t j, Rational c) {
  Poly2 p;
  if (c != 0) p.terms_.emplace(Key{i, j}, std::move(c));
  return p;
}

Poly2 Poly2::one_minus_alpha_minus_beta() {
  Poly2 p = one();
  p.add_term(1, 0, -1);
  p.add_term(0, 1, -1);
  return p;
}

Poly2 Poly2::denom(unsigned k, unsigned l) {
  Poly2 x = one();
  x.add_term(1, 0, -1);
  Poly2 y = one();
  y.add_term(0, 1, -1);
  return x.pow(k) * y.pow(l);
}

Poly2& Poly2::operator+=(const Poly2& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, -c);
  return *this;
}

Poly2 Poly2::operator+(const Poly2& rhs) const {
  Poly2 out = *this;
  out += rhs;
  return out;
}

Poly2 Poly2::operator-(const Poly2& rhs) const {
  Poly2 out = *this;
  out -= rhs;
  return out;
}

Poly2 Poly2::operator*(const Poly2& rhs) const {
  Poly2 out;
  // Iterate the smaller factor on the outside to keep map traffic low.
  const Poly2& small = term_count() <= rhs.term_count() ? *this : rhs;
  const Poly2& large = term_count() <= rhs.term_count() ? rhs : *this;
  for (const auto& [ks, cs] : small.terms_)
    for (const auto& [kl, cl] : large.terms_)
      out.add_term(ks.first + kl.first, ks.second + kl.second, cs * cl);
  return out;
}

Poly2 Poly2::times_monomial(std::int64_t i, std::int64_t j) const {
  Poly2 out;
  for (const auto& [key, c] : terms_)
    out.terms_.emplace(Key{key.first + i, key.second + j}, c);
  return out;
}

Poly2 Poly2::scaled(const Rational& c) const {
  Poly2 out;
  if (c == 0) return out;
  for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
  return out;
}

Poly2 Poly2::pow(unsigned e) const {
  Poly2 result = one();
  Poly2 base = *this;
  while (e != 0) {
    if (e & 1) result = result * base;
    if (e >>= 1) base = base * base;
  }
  return result;
}

void Poly2::add_term(std::int64_t i, std::int64_t j, const Rational& c) {
  if (c == 0) return;
  const auto [it, inserted] = terms_.emplace(Key{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Poly2::coeff(std::int64_t i, std::int64_t j) const {
  const auto it = terms_.find(Key{i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly2::eval(const Rational& a, const Rational& b) const {
  // Horner in alpha over groups of equal alpha-exponent, plain powers in beta.
  Rational out = 0;
  for (const auto& [key, c] : terms_) {
    Rational term = c;
    if (key.first != 0) term *= rat_pow(a, static_cast<std::uint64_t>(key.first));
    if (key.second != 0) term *= rat_pow(b, static_cast<std::uint64_t>(key.second));
    out += term;
  }
  return out;
}

}  // namespace sodcorr
