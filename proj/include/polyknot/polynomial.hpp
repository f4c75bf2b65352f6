#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

namespace polyknot {

double compensated_horner(std::span<const double> coeffs, double x);

/// Dense univariate polynomial in the monomial basis over a commutative ring
/// (double, Rational, SymbolicPolynomial). Index k holds the coefficient of
/// t^k. Trailing zeros are trimmed after every operation; the zero
/// polynomial is the empty coefficient vector and has degree -1.
template <typename Ring>
class BasicPolynomial {
 public:
  BasicPolynomial() = default;
  explicit BasicPolynomial(std::vector<Ring> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  BasicPolynomial(std::initializer_list<Ring> coeffs) : coeffs_(coeffs) { trim(); }

  static BasicPolynomial constant(Ring c) { return BasicPolynomial(std::vector<Ring>{std::move(c)}); }

  static BasicPolynomial monomial(int k, Ring c = Ring(1)) {
    std::vector<Ring> v(static_cast<std::size_t>(k) + 1, Ring(0));
    v.back() = std::move(c);
    return BasicPolynomial(std::move(v));
  }

  const std::vector<Ring>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of t^k; zero outside the stored range.
  Ring operator[](int k) const {
    if (k < 0 || k > degree()) return Ring(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }

  const Ring& leading() const { return coeffs_.back(); }

  Ring operator()(const Ring& x) const {
    if constexpr (std::is_same_v<Ring, double>) {
      return compensated_horner(coeffs_, x);
    } else {
      Ring acc(0);
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
      return acc;
    }
  }

  /// Plain Horner evaluation; for double this skips error compensation.
  Ring horner(const Ring& x) const {
    Ring acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  BasicPolynomial derivative() const {
    if (degree() < 1) return {};
    std::vector<Ring> d(coeffs_.size() - 1, Ring(0));
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Ring(static_cast<int>(k));
    return BasicPolynomial(std::move(d));
  }

  /// p(t) * t
  BasicPolynomial mul_t() const {
    if (is_zero()) return {};
    std::vector<Ring> v;
    v.reserve(coeffs_.size() + 1);
    v.push_back(Ring(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return BasicPolynomial(std::move(v));
  }

  /// p(t + c) by repeated synthetic division (Taylor shift).
  BasicPolynomial shifted(const Ring& c) const {
    std::vector<Ring> a = coeffs_;
    const int n = degree();
    for (int i = 0; i < n; ++i)
      for (int k = n - 1; k >= i; --k) a[k] = a[k] + c * a[k + 1];
    return BasicPolynomial(std::move(a));
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Ring(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    trim();
    return *this;
  }
  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Ring(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    trim();
    return *this;
  }
  BasicPolynomial& operator*=(const Ring& c) {
    for (auto& v : coeffs_) v = v * c;
    trim();
    return *this;
  }

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  friend BasicPolynomial operator-(BasicPolynomial a) { return a *= Ring(-1); }
  friend BasicPolynomial operator*(BasicPolynomial a, const Ring& c) { return a *= c; }
  friend BasicPolynomial operator*(const Ring& c, BasicPolynomial a) { return a *= c; }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Ring> v(a.coeffs_.size() + b.coeffs_.size() - 1, Ring(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return BasicPolynomial(std::move(v));
  }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Ring(0)) coeffs_.pop_back();
  }

  std::vector<Ring> coeffs_;
};

using Polynomial = BasicPolynomial<double>;

/// max_k |c_k|; zero for the zero polynomial.
double max_abs_coeff(const Polynomial& p);

/// sum_k |c_k| |x|^k, the natural scale of rounding errors when evaluating p at x.
double abs_eval(const Polynomial& p, double x);

}  // namespace polyknot
