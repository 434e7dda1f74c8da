#include "rational.hpp"

#include <stdexcept>

namespace sodcorr {

std::string to_wire(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_wire(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Int(text));
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: " + text);
  }
}

Int binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    result *= Int(n - i);
    result /= Int(i + 1);
  }
  return result;
}

Rational pow2(std::int64_t e) {
  if (e >= 0) return Rational(Int(1) << static_cast<unsigned>(e));
  return Rational(1, Int(1) << static_cast<unsigned>(-e));
}

Int int_pow(Int base, std::uint64_t e) {
  Int result = 1;
  while (e != 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Rational rat_pow(Rational base, std::uint64_t e) {
  Rational result = 1;
  while (e != 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace sodcorr
