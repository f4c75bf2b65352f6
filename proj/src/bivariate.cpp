#include "polyknot/bivariate.hpp"

#include <algorithm>

namespace polyknot {

BivariatePolynomial::BivariatePolynomial(std::vector<Polynomial> by_e2_power) : parts_(std::move(by_e2_power)) {
  trim();
}

BivariatePolynomial BivariatePolynomial::constant(double c) {
  return BivariatePolynomial({Polynomial::constant(c)});
}

double BivariatePolynomial::coefficient(int i, int j) const {
  if (j < 0 || j > degree_e2()) return 0.0;
  return parts_[static_cast<std::size_t>(j)][i];
}

int BivariatePolynomial::degree_e1() const {
  int d = -1;
  for (const auto& p : parts_) d = std::max(d, p.degree());
  return d;
}

int BivariatePolynomial::total_degree() const {
  int d = -1;
  for (std::size_t j = 0; j < parts_.size(); ++j)
    if (!parts_[j].is_zero()) d = std::max(d, parts_[j].degree() + static_cast<int>(j));
  return d;
}

double BivariatePolynomial::operator()(double e1, double e2) const {
  double acc = 0.0;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) acc = acc * e2 + (*it)(e1);
  return acc;
}

Polynomial BivariatePolynomial::substitute_e2(const Polynomial& q) const {
  Polynomial acc;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

Polynomial BivariatePolynomial::at_e1(double e1) const {
  std::vector<double> c(parts_.size());
  for (std::size_t j = 0; j < parts_.size(); ++j) c[j] = parts_[j](e1);
  return Polynomial(std::move(c));
}

BivariatePolynomial BivariatePolynomial::mul_e1() const {
  std::vector<Polynomial> v;
  v.reserve(parts_.size());
  for (const auto& p : parts_) v.push_back(p.mul_t());
  return BivariatePolynomial(std::move(v));
}

BivariatePolynomial BivariatePolynomial::mul_e2() const {
  if (parts_.empty()) return {};
  std::vector<Polynomial> v;
  v.reserve(parts_.size() + 1);
  v.emplace_back();
  v.insert(v.end(), parts_.begin(), parts_.end());
  return BivariatePolynomial(std::move(v));
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
  if (o.parts_.size() > parts_.size()) parts_.resize(o.parts_.size());
  for (std::size_t j = 0; j < o.parts_.size(); ++j) parts_[j] += o.parts_[j];
  trim();
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
  if (o.parts_.size() > parts_.size()) parts_.resize(o.parts_.size());
  for (std::size_t j = 0; j < o.parts_.size(); ++j) parts_[j] -= o.parts_[j];
  trim();
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(double c) {
  for (auto& p : parts_) p *= c;
  trim();
  return *this;
}

void BivariatePolynomial::trim() {
  while (!parts_.empty() && parts_.back().is_zero()) parts_.pop_back();
}

}  // namespace polyknot
