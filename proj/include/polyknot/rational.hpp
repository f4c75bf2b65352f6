#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyknot {

// Expression templates off: generic code over Ring stores intermediate
// results in `auto` and conditionals.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// "p" for integers, "p/q" otherwise; always in lowest terms.
std::string to_string(const Rational& q);

/// Exact value of a finite double.
Rational to_rational(double x);

}  // namespace polyknot
