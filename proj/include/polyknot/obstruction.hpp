#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyknot/chebyshev.hpp"
#include "polyknot/errors.hpp"
#include "polyknot/rational.hpp"
#include "polyknot/symbolic.hpp"

namespace polyknot {

/// R(u) = ε(n+1) V_n(u) + Σ_{k=1..n} a_k ε(k) V_{k-1}(u), with a[k-1] = a_k.
/// This is the ellipse divided difference of T_{n+1} + Σ a_k T_k.
template <typename Ring>
BasicSeries<Ring, Basis::V> build_R(int n, const std::vector<Ring>& a) {
  if (n < 1) fail(ErrorKind::BadInput, "build_R: n must be positive");
  if (static_cast<int>(a.size()) != n) fail(ErrorKind::BadInput, "build_R: expected n coefficients a_1..a_n");
  std::vector<Ring> r(static_cast<std::size_t>(n) + 1, Ring(0));
  r[static_cast<std::size_t>(n)] = Ring(epsilon(n + 1));
  for (int k = 1; k <= n; ++k) r[static_cast<std::size_t>(k - 1)] = r[static_cast<std::size_t>(k - 1)] + a[k - 1] * Ring(epsilon(k));
  return BasicSeries<Ring, Basis::V>(std::move(r));
}

/// Power sums S_1..S_kmax of the roots of a monic polynomial from its
/// coefficients alone, by the Newton recurrence
///   S_k = Σ_{i=1}^{k-1} (-1)^{i-1} σ_i S_{k-i} + (-1)^{k-1} k σ_k,
/// where σ_i is the i-th elementary symmetric function of the roots
/// (σ_i = (-1)^i c_{n-i}, zero past the degree). Index 0 of the result
/// holds the root count n.
template <typename Ring>
std::vector<Ring> power_sums(const BasicPolynomial<Ring>& monic, int kmax) {
  const int n = monic.degree();
  std::vector<Ring> sigma(static_cast<std::size_t>(kmax) + 1, Ring(0));
  for (int i = 1; i <= std::min(n, kmax); ++i) sigma[i] = (i % 2 == 0 ? Ring(1) : Ring(-1)) * monic[n - i];
  std::vector<Ring> s(static_cast<std::size_t>(kmax) + 1, Ring(0));
  s[0] = Ring(n);
  for (int k = 1; k <= kmax; ++k) {
    Ring acc(0);
    for (int i = 1; i < k; ++i) {
      const Ring term = sigma[i] * s[k - i];
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    const Ring last = Ring(k) * sigma[k];
    s[k] = (k % 2 == 1) ? acc + last : acc - last;
  }
  return s;
}

template <typename Ring>
struct BasicNewtonSums {
  Ring S1, S2, S3, S4;
  Ring sigma1, sigma2, sigma3, sigma4;
};

using NewtonSums = BasicNewtonSums<double>;

/// Newton sums of the roots of r, which must be monic in the monomial basis
/// (leading coefficient exactly 1); NotMonic otherwise.
template <typename Ring>
BasicNewtonSums<Ring> newton_sums(const BasicSeries<Ring, Basis::V>& r) {
  const BasicPolynomial<Ring> p = to_monomial(r);
  if (p.is_zero() || !(p.leading() == Ring(1))) fail(ErrorKind::NotMonic, "newton_sums: polynomial is not monic");
  const auto s = power_sums(p, 4);
  const int n = p.degree();
  auto sigma = [&](int i) -> Ring { return i > n ? Ring(0) : (i % 2 == 0 ? Ring(1) : Ring(-1)) * p[n - i]; };
  return {s[1], s[2], s[3], s[4], sigma(1), sigma(2), sigma(3), sigma(4)};
}

struct LemmaBResult {
  bool holds = false;
  double S2 = 0.0;
  double S4 = 0.0;
};

/// Σ u_i² ≤ n + 4 and Σ u_i⁴ ≤ n + 22 for n = u.size().
LemmaBResult lemma_b_check(std::span<const double> u);

enum class ObstructionCase { mod3_2_degree_drop, mod6_1_S2, mod6_3_S4, inconclusive_n3 };

std::string_view to_string(ObstructionCase c);

struct Inequality {
  Rational lhs;
  std::string relation;  // ">", "<", "<="
  Rational rhs;
};

struct ObstructionReport {
  int n = 0;
  ObstructionCase kind = ObstructionCase::inconclusive_n3;
  std::string newton_sum;  // "S2", "S4", or "degree"
  std::string expression;  // the Newton sum as a polynomial in a_1..a_n
  Inequality inequality;
  bool impossible = false;
  std::string statement;
};

/// Exact certificate that T_3 together with a degree n + 1 second
/// coordinate cannot project to a minimal K_n diagram. No floating point.
/// BadInput unless n is odd and at least 3.
ObstructionReport certify_impossible(int n);

/// Lower bounds (deg x, deg y) on a projection of K_n: (3, n + 1).
std::pair<int, int> minimality_bound(int n);

/// "minimal" for the degrees proven minimal, "minimal-conditional" for
/// (3, 13, 14) on K_9, otherwise "unknown".
std::string minimality_label(int n, int deg_x, int deg_y, int deg_z);

}  // namespace polyknot
