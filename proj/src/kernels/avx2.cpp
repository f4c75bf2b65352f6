// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <cstddef>

#include "polyknot/kernels.hpp"

namespace polyknot::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

// Lanes past the last full vector go through the scalar reference so the
// results stay bit-identical.
inline std::size_t vector_end(std::size_t n) { return n - n % kLanes; }

}  // namespace

void horner(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out) {
  const std::size_t n = coeffs.size();
  const std::size_t end = vector_end(xs.size());
  for (std::size_t i = 0; i < end; i += kLanes) {
    const __m256d x = _mm256_loadu_pd(xs.data() + i);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t k = n; k-- > 0;) acc = _mm256_add_pd(_mm256_mul_pd(acc, x), _mm256_set1_pd(coeffs[k]));
    _mm256_storeu_pd(out.data() + i, acc);
  }
  scalar::horner(coeffs, xs.subspan(end), out.subspan(end));
}

void horner_compensated(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out) {
  const std::size_t n = coeffs.size();
  const std::size_t end = n == 0 ? 0 : vector_end(xs.size());
  for (std::size_t i = 0; i < end; i += kLanes) {
    const __m256d x = _mm256_loadu_pd(xs.data() + i);
    __m256d s = _mm256_set1_pd(coeffs[n - 1]);
    __m256d c = _mm256_setzero_pd();
    for (std::size_t k = n - 1; k-- > 0;) {
      const __m256d a = _mm256_set1_pd(coeffs[k]);
      const __m256d p = _mm256_mul_pd(s, x);
      const __m256d pi = _mm256_fmadd_pd(s, x, _mm256_xor_pd(p, _mm256_set1_pd(-0.0)));
      const __m256d sn = _mm256_add_pd(p, a);
      const __m256d z = _mm256_sub_pd(sn, p);
      const __m256d sigma = _mm256_add_pd(_mm256_sub_pd(p, _mm256_sub_pd(sn, z)), _mm256_sub_pd(a, z));
      c = _mm256_add_pd(_mm256_mul_pd(c, x), _mm256_add_pd(pi, sigma));
      s = sn;
    }
    _mm256_storeu_pd(out.data() + i, _mm256_add_pd(s, c));
  }
  scalar::horner_compensated(coeffs, xs.subspan(end), out.subspan(end));
}

namespace {

void clenshaw(std::span<const double> c, std::span<const double> xs, std::span<double> out, double phi0,
              std::size_t end) {
  const std::size_t n = c.size();
  const __m256d vphi0 = _mm256_set1_pd(phi0);
  for (std::size_t i = 0; i < end; i += kLanes) {
    const __m256d x = _mm256_loadu_pd(xs.data() + i);
    __m256d b1 = _mm256_setzero_pd();
    __m256d b2 = _mm256_setzero_pd();
    for (std::size_t k = n - 1; k >= 1; --k) {
      const __m256d b = _mm256_sub_pd(_mm256_add_pd(_mm256_set1_pd(c[k]), _mm256_mul_pd(x, b1)), b2);
      b2 = b1;
      b1 = b;
    }
    const __m256d head = _mm256_add_pd(_mm256_mul_pd(vphi0, _mm256_set1_pd(c[0])), _mm256_mul_pd(x, b1));
    _mm256_storeu_pd(out.data() + i, _mm256_sub_pd(head, _mm256_mul_pd(vphi0, b2)));
  }
}

}  // namespace

void clenshaw_t(std::span<const double> c, std::span<const double> xs, std::span<double> out) {
  const std::size_t end = c.empty() ? 0 : vector_end(xs.size());
  clenshaw(c, xs, out, 2.0, end);
  scalar::clenshaw_t(c, xs.subspan(end), out.subspan(end));
}

void clenshaw_v(std::span<const double> c, std::span<const double> xs, std::span<double> out) {
  const std::size_t end = c.empty() ? 0 : vector_end(xs.size());
  clenshaw(c, xs, out, 1.0, end);
  scalar::clenshaw_v(c, xs.subspan(end), out.subspan(end));
}

void divided_difference_row(std::span<const double> values, std::span<const double> grid, double pivot_value,
                            double pivot, std::span<double> out) {
  const std::size_t end = vector_end(values.size());
  const __m256d pv = _mm256_set1_pd(pivot_value);
  const __m256d pg = _mm256_set1_pd(pivot);
  for (std::size_t j = 0; j < end; j += kLanes) {
    const __m256d num = _mm256_sub_pd(_mm256_loadu_pd(values.data() + j), pv);
    const __m256d den = _mm256_sub_pd(_mm256_loadu_pd(grid.data() + j), pg);
    _mm256_storeu_pd(out.data() + j, _mm256_div_pd(num, den));
  }
  scalar::divided_difference_row(values.subspan(end), grid.subspan(end), pivot_value, pivot, out.subspan(end));
}

}  // namespace polyknot::kernels::avx2
