#include "polyknot/polynomial.hpp"

#include <cmath>

namespace polyknot {

// Compensated Horner scheme: the rounding error of every product and sum is
// captured exactly (TwoProduct via fma, TwoSum) and accumulated in a second
// Horner pass. The result is as accurate as if Horner ran in twice the
// working precision.
double compensated_horner(std::span<const double> coeffs, double x) {
  if (coeffs.empty()) return 0.0;
  std::size_t i = coeffs.size() - 1;
  double s = coeffs[i];
  double c = 0.0;
  while (i-- > 0) {
    const double p = s * x;
    const double pi = std::fma(s, x, -p);
    const double sn = p + coeffs[i];
    const double z = sn - p;
    const double sigma = (p - (sn - z)) + (coeffs[i] - z);
    c = c * x + (pi + sigma);
    s = sn;
  }
  return s + c;
}

double max_abs_coeff(const Polynomial& p) {
  double m = 0.0;
  for (double c : p.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

double abs_eval(const Polynomial& p, double x) {
  const double ax = std::abs(x);
  double acc = 0.0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * ax + std::abs(*it);
  return acc;
}

}  // namespace polyknot
