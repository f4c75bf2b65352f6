#include "polyknot/chebyshev.hpp"

#include "polyknot/kernels.hpp"

namespace polyknot {

int epsilon(int k) {
  static constexpr int kTable[6] = {0, 1, 1, 0, -1, -1};
  const int r = k % 6;
  return kTable[r < 0 ? r + 6 : r];
}

double eval(const Polynomial& p, double x) { return p(x); }

double eval(const ChebSeries& s, double x) {
  double out = 0.0;
  kernels::scalar::clenshaw_t(s.coeffs(), std::span<const double>(&x, 1), std::span<double>(&out, 1));
  return out;
}

double eval(const VSeries& s, double x) {
  double out = 0.0;
  kernels::scalar::clenshaw_v(s.coeffs(), std::span<const double>(&x, 1), std::span<double>(&out, 1));
  return out;
}

void eval(const Polynomial& p, std::span<const double> xs, std::span<double> out) {
  kernels::horner_compensated(p.coeffs(), xs, out);
}

void eval(const ChebSeries& s, std::span<const double> xs, std::span<double> out) {
  kernels::clenshaw_t(s.coeffs(), xs, out);
}

void eval(const VSeries& s, std::span<const double> xs, std::span<double> out) {
  kernels::clenshaw_v(s.coeffs(), xs, out);
}

BivariatePolynomial symmetric_divided_difference(const Polynomial& p) {
  BivariatePolynomial acc;
  if (p.degree() < 1) return acc;
  BivariatePolynomial prev = BivariatePolynomial::constant(1.0);  // h_0
  BivariatePolynomial cur = prev.mul_e1();                        // h_1
  acc += prev * p[1];
  for (int k = 2; k <= p.degree(); ++k) {
    acc += cur * p[k];
    BivariatePolynomial next = cur.mul_e1() - prev.mul_e2();
    prev = std::move(cur);
    cur = std::move(next);
  }
  return acc;
}

}  // namespace polyknot
