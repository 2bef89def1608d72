#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace equilef {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_integral(const Rational& q);
// "3", "-1/2"
std::string format_rational(const Rational& q);
Rational parse_rational(const std::string& text);

}  // namespace equilef
