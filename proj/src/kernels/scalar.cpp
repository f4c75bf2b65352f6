#include <cmath>
#include <cstddef>

#include "polyknot/kernels.hpp"

namespace polyknot::kernels::scalar {

void horner(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out) {
  const std::size_t n = coeffs.size();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    double acc = 0.0;
    for (std::size_t k = n; k-- > 0;) acc = acc * x + coeffs[k];
    out[i] = acc;
  }
}

void horner_compensated(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out) {
  const std::size_t n = coeffs.size();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (n == 0) {
      out[i] = 0.0;
      continue;
    }
    const double x = xs[i];
    double s = coeffs[n - 1];
    double c = 0.0;
    for (std::size_t k = n - 1; k-- > 0;) {
      const double p = s * x;
      const double pi = std::fma(s, x, -p);
      const double sn = p + coeffs[k];
      const double z = sn - p;
      const double sigma = (p - (sn - z)) + (coeffs[k] - z);
      c = c * x + (pi + sigma);
      s = sn;
    }
    out[i] = s + c;
  }
}

namespace {

// b_k = c_k + x b_{k+1} - b_{k+2}; the caller finishes with the basis-specific
// combination of c_0, b_1, b_2.
template <double Phi0>
void clenshaw(std::span<const double> c, std::span<const double> xs, std::span<double> out) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (n == 0) {
      out[i] = 0.0;
      continue;
    }
    const double x = xs[i];
    double b1 = 0.0;
    double b2 = 0.0;
    for (std::size_t k = n - 1; k >= 1; --k) {
      const double b = c[k] + x * b1 - b2;
      b2 = b1;
      b1 = b;
    }
    out[i] = Phi0 * c[0] + x * b1 - Phi0 * b2;
  }
}

}  // namespace

void clenshaw_t(std::span<const double> c, std::span<const double> xs, std::span<double> out) {
  clenshaw<2.0>(c, xs, out);
}

void clenshaw_v(std::span<const double> c, std::span<const double> xs, std::span<double> out) {
  clenshaw<1.0>(c, xs, out);
}

void divided_difference_row(std::span<const double> values, std::span<const double> grid, double pivot_value,
                            double pivot, std::span<double> out) {
  for (std::size_t j = 0; j < values.size(); ++j) out[j] = (values[j] - pivot_value) / (grid[j] - pivot);
}

}  // namespace polyknot::kernels::scalar
