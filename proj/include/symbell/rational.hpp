// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace symbell {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Int& v);
double to_double(const Rational& r);

// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double x);

// Accepts "p", "+p", "-p", "p/q" with integer p and positive integer q.
Rational parse_rational(const std::string& text);

std::string to_string(const Int& v);
std::string to_string(const Rational& r);

Int binomial(int n, int k);

}  // namespace symbell
