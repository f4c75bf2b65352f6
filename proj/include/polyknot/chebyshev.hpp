#pragma once

// Monic Chebyshev bases.
//
//   T_n(2 cos θ) = 2 cos(nθ),             T_0 = 2, T_1 = t, T_{n+1} = t T_n - T_{n-1}
//   V_n(2 cos θ) = sin((n+1)θ) / sin θ,   V_0 = 1, V_1 = t, V_{n+1} = t V_n - V_{n-1}
//
// Both families are monic of degree n. Note the normalization differs from
// the classical first-kind polynomials: T_n(t) = 2 * Tclassic_n(t / 2), and
// the constant basis element is T_0 = 2, not 1.

#include <initializer_list>
#include <span>
#include <vector>

#include "polyknot/bivariate.hpp"
#include "polyknot/polynomial.hpp"

namespace polyknot {

enum class Basis { T, V };

/// Coefficient vector over {T_k} or {V_k}; index k multiplies the degree-k
/// basis element. Trailing zeros are trimmed.
template <typename Ring, Basis B>
class BasicSeries {
 public:
  static constexpr Basis basis = B;

  BasicSeries() = default;
  explicit BasicSeries(std::vector<Ring> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  BasicSeries(std::initializer_list<Ring> coeffs) : coeffs_(coeffs) { trim(); }

  static BasicSeries single(int k, Ring c = Ring(1)) {
    std::vector<Ring> v(static_cast<std::size_t>(k) + 1, Ring(0));
    v.back() = std::move(c);
    return BasicSeries(std::move(v));
  }

  const std::vector<Ring>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Ring operator[](int k) const {
    if (k < 0 || k > degree()) return Ring(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }

  BasicSeries& operator+=(const BasicSeries& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Ring(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    trim();
    return *this;
  }
  BasicSeries& operator-=(const BasicSeries& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Ring(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    trim();
    return *this;
  }
  BasicSeries& operator*=(const Ring& c) {
    for (auto& v : coeffs_) v = v * c;
    trim();
    return *this;
  }

  friend BasicSeries operator+(BasicSeries a, const BasicSeries& b) { return a += b; }
  friend BasicSeries operator-(BasicSeries a, const BasicSeries& b) { return a -= b; }
  friend BasicSeries operator*(BasicSeries a, const Ring& c) { return a *= c; }
  friend BasicSeries operator*(const Ring& c, BasicSeries a) { return a *= c; }
  friend bool operator==(const BasicSeries& a, const BasicSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Ring(0)) coeffs_.pop_back();
  }

  std::vector<Ring> coeffs_;
};

using ChebSeries = BasicSeries<double, Basis::T>;
using VSeries = BasicSeries<double, Basis::V>;

namespace detail {

// All basis polynomials of degree 0..n, by the shared three-term recurrence.
template <typename Ring, Basis B>
std::vector<BasicPolynomial<Ring>> basis_table(int n) {
  std::vector<BasicPolynomial<Ring>> table;
  table.reserve(static_cast<std::size_t>(n) + 1);
  table.push_back(BasicPolynomial<Ring>::constant(Ring(B == Basis::T ? 2 : 1)));
  if (n >= 1) table.push_back(BasicPolynomial<Ring>::monomial(1));
  for (int k = 2; k <= n; ++k) table.push_back(table[k - 1].mul_t() - table[k - 2]);
  return table;
}

}  // namespace detail

template <typename Ring = double>
BasicPolynomial<Ring> cheb_T(int n) {
  return detail::basis_table<Ring, Basis::T>(n).back();
}

template <typename Ring = double>
BasicPolynomial<Ring> cheb_V(int n) {
  return detail::basis_table<Ring, Basis::V>(n).back();
}

/// (2/√3) sin(kπ/3) as an exact integer: the period-6 sequence 0, 1, 1, 0, -1, -1.
int epsilon(int k);

template <typename Ring, Basis B>
BasicPolynomial<Ring> to_monomial(const BasicSeries<Ring, B>& s) {
  if (s.is_zero()) return {};
  const auto table = detail::basis_table<Ring, B>(s.degree());
  BasicPolynomial<Ring> acc;
  for (int k = 0; k <= s.degree(); ++k)
    if (!(s[k] == Ring(0))) acc += table[static_cast<std::size_t>(k)] * s[k];
  return acc;
}

/// Inverse of to_monomial by descending-degree peeling: the leading monomial
/// coefficient is the coefficient of the (monic) top basis element.
template <Basis B, typename Ring>
BasicSeries<Ring, B> from_monomial(const BasicPolynomial<Ring>& p) {
  if (p.is_zero()) return {};
  const auto table = detail::basis_table<Ring, B>(p.degree());
  std::vector<Ring> rest = p.coeffs();
  std::vector<Ring> out(rest.size(), Ring(0));
  for (int k = p.degree(); k >= 0; --k) {
    Ring lead = rest[static_cast<std::size_t>(k)];
    if (k == 0 && B == Basis::T) lead = lead / Ring(2);
    out[static_cast<std::size_t>(k)] = lead;
    if (lead == Ring(0)) continue;
    const auto& e = table[static_cast<std::size_t>(k)].coeffs();
    for (std::size_t j = 0; j < e.size(); ++j) rest[j] = rest[j] - lead * e[j];
  }
  return BasicSeries<Ring, B>(std::move(out));
}

/// Monomial evaluation with the compensated Horner scheme.
double eval(const Polynomial& p, double x);

/// Basis-native evaluation by Clenshaw's backward recurrence.
double eval(const ChebSeries& s, double x);
double eval(const VSeries& s, double x);

/// Batch forms over the dispatched kernels.
void eval(const Polynomial& p, std::span<const double> xs, std::span<double> out);
void eval(const ChebSeries& s, std::span<const double> xs, std::span<double> out);
void eval(const VSeries& s, std::span<const double> xs, std::span<double> out);

/// For any s != t with T_3(s) = T_3(t),
///   (T_k(t) - T_k(s)) / (t - s) = ε(k) V_{k-1}(s + t),
/// so a series Q = Σ c_k T_k maps to R = Σ c_{j+1} ε(j+1) V_j. The constant
/// term cancels in the difference and is ignored.
template <typename Ring>
BasicSeries<Ring, Basis::V> divided_difference_on_ellipse(const BasicSeries<Ring, Basis::T>& q) {
  if (q.degree() < 1) return {};
  std::vector<Ring> r(static_cast<std::size_t>(q.degree()), Ring(0));
  for (int j = 0; j < q.degree(); ++j) r[static_cast<std::size_t>(j)] = q[j + 1] * Ring(epsilon(j + 1));
  return BasicSeries<Ring, Basis::V>(std::move(r));
}

/// (p(t) - p(s)) / (t - s) written exactly in e1 = s + t, e2 = s t. Uses the
/// complete homogeneous sums h_m = e1 h_{m-1} - e2 h_{m-2}, h_0 = 1, h_1 = e1,
/// since (t^k - s^k) / (t - s) = h_{k-1}.
BivariatePolynomial symmetric_divided_difference(const Polynomial& p);

}  // namespace polyknot
