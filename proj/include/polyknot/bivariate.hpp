#pragma once

#include <vector>

#include "polyknot/polynomial.hpp"

namespace polyknot {

/// Polynomial in the symmetric coordinates e1 = s + t, e2 = s t, stored as
/// a polynomial in e2 whose coefficients are polynomials in e1:
///   F(e1, e2) = sum_j F_j(e1) e2^j.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  explicit BivariatePolynomial(std::vector<Polynomial> by_e2_power);

  static BivariatePolynomial constant(double c);

  const std::vector<Polynomial>& by_e2_power() const noexcept { return parts_; }

  /// Coefficient of e1^i e2^j.
  double coefficient(int i, int j) const;

  bool is_zero() const noexcept { return parts_.empty(); }
  int degree_e2() const noexcept { return static_cast<int>(parts_.size()) - 1; }
  int degree_e1() const;
  /// Ordinary total degree max(i + j); -1 for zero.
  int total_degree() const;

  double operator()(double e1, double e2) const;

  /// F(e1, q(e1)) as a univariate polynomial in e1.
  Polynomial substitute_e2(const Polynomial& q) const;

  /// F(e1, ·) as a polynomial in e2 for a fixed e1.
  Polynomial at_e1(double e1) const;

  BivariatePolynomial mul_e1() const;
  BivariatePolynomial mul_e2() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& o);
  BivariatePolynomial& operator-=(const BivariatePolynomial& o);
  BivariatePolynomial& operator*=(double c);

  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(BivariatePolynomial a, double c) { return a *= c; }
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) { return a.parts_ == b.parts_; }

 private:
  void trim();

  std::vector<Polynomial> parts_;
};

}  // namespace polyknot
