#include "polyknot/rational.hpp"

#include <cmath>

#include "polyknot/errors.hpp"

namespace polyknot {

std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational to_rational(double x) {
  if (!std::isfinite(x)) fail(ErrorKind::DomainError, "to_rational: non-finite value");
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  // mantissa * 2^53 is an exact integer.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  Rational r(scaled);
  exponent -= 53;
  if (exponent > 0) r *= boost::multiprecision::pow(Integer(2), static_cast<unsigned>(exponent));
  else if (exponent < 0) r /= boost::multiprecision::pow(Integer(2), static_cast<unsigned>(-exponent));
  return r;
}

}  // namespace polyknot
