#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyknot/rational.hpp"

namespace polyknot {

/// Sparse polynomial over Q in the indeterminates a_1, a_2, ... A monomial
/// is the sorted list of its variable indices with repetition, so a_3^2 a_7
/// is {3, 3, 7} and the constant monomial is {}.
class SymbolicPolynomial {
 public:
  using Monomial = std::vector<int>;

  SymbolicPolynomial() = default;
  SymbolicPolynomial(int c) : SymbolicPolynomial(Rational(c)) {}  // NOLINT: ring literal
  SymbolicPolynomial(const Rational& c);                          // NOLINT

  static SymbolicPolynomial variable(int index);

  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const;
  std::optional<Rational> as_constant() const;
  Rational coefficient(const Monomial& m) const;
  std::vector<int> variables() const;

  SymbolicPolynomial& operator+=(const SymbolicPolynomial& o);
  SymbolicPolynomial& operator-=(const SymbolicPolynomial& o);
  SymbolicPolynomial& operator*=(const SymbolicPolynomial& o);

  friend SymbolicPolynomial operator+(SymbolicPolynomial a, const SymbolicPolynomial& b) { return a += b; }
  friend SymbolicPolynomial operator-(SymbolicPolynomial a, const SymbolicPolynomial& b) { return a -= b; }
  friend SymbolicPolynomial operator-(const SymbolicPolynomial& a) { return SymbolicPolynomial(0) - a; }
  friend SymbolicPolynomial operator*(SymbolicPolynomial a, const SymbolicPolynomial& b) { return a *= b; }
  friend bool operator==(const SymbolicPolynomial& a, const SymbolicPolynomial& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::map<Monomial, Rational> terms_;
};

/// Highest total degree first, then by variable indices: "a7^2 + 12".
std::string to_string(const SymbolicPolynomial& p);

/// Exact infimum of a polynomial of total degree at most 2 over real
/// values of its variables, by completing squares. Empty when the
/// polynomial is unbounded below or has degree above 2.
std::optional<Rational> quadratic_minimum(const SymbolicPolynomial& p);

}  // namespace polyknot
