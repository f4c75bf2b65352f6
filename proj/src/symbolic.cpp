#include "polyknot/symbolic.hpp"

#include <algorithm>
#include <set>

namespace polyknot {

SymbolicPolynomial::SymbolicPolynomial(const Rational& c) {
  if (c != 0) terms_[{}] = c;
}

SymbolicPolynomial SymbolicPolynomial::variable(int index) {
  SymbolicPolynomial p;
  p.terms_[{index}] = Rational(1);
  return p;
}

int SymbolicPolynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

std::optional<Rational> SymbolicPolynomial::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

Rational SymbolicPolynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<int> SymbolicPolynomial::variables() const {
  std::set<int> v;
  for (const auto& [m, c] : terms_) v.insert(m.begin(), m.end());
  return {v.begin(), v.end()};
}

void SymbolicPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SymbolicPolynomial& SymbolicPolynomial::operator+=(const SymbolicPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SymbolicPolynomial& SymbolicPolynomial::operator-=(const SymbolicPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SymbolicPolynomial& SymbolicPolynomial::operator*=(const SymbolicPolynomial& o) {
  SymbolicPolynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out.add_term(m, ca * cb);
    }
  terms_ = std::move(out.terms_);
  return *this;
}

std::string to_string(const SymbolicPolynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<SymbolicPolynomial::Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
  std::string out;
  for (const auto& [m, c] : terms) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      if (!mono.empty()) mono += "*";
      mono += "a" + std::to_string(m[i]);
      if (j - i > 1) mono += "^" + std::to_string(j - i);
      i = j;
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

std::optional<Rational> quadratic_minimum(const SymbolicPolynomial& p) {
  if (p.degree() > 2) return std::nullopt;
  const std::vector<int> vars = p.variables();
  const std::size_t n = vars.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
  std::vector<Rational> b(n, Rational(0));
  Rational c = p.coefficient({});
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = p.coefficient({vars[i]});
    a[i][i] = p.coefficient({vars[i], vars[i]});
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational half = p.coefficient({vars[i], vars[j]}) / 2;
      a[i][j] = half;
      a[j][i] = half;
    }
  }

  // p = x^T A x + b^T x + c. Complete the square in one variable at a time.
  std::vector<bool> done(n, false);
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n && pivot == n; ++i)
      if (!done[i] && a[i][i] != 0) pivot = i;
    if (pivot == n) {
      // No square terms left: any surviving cross or linear term is unbounded.
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        if (b[i] != 0) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j)
          if (!done[j] && a[i][j] != 0) return std::nullopt;
      }
      break;
    }
    const Rational d = a[pivot][pivot];
    if (d < 0) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j] || j == pivot) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (done[k] || k == pivot) continue;
        a[j][k] -= a[j][pivot] * a[pivot][k] / d;
      }
      b[j] -= a[j][pivot] * b[pivot] / d;
    }
    c -= b[pivot] * b[pivot] / (4 * d);
    done[pivot] = true;
  }
  return c;
}

}  // namespace polyknot
