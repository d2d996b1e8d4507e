#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace courantx {

// Exact scalar field. cpp_rational keeps lowest terms and a positive
// denominator as class invariants, so equality is structural.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string rational_str(const Rational& r) {
  return r.str();
}

}  // namespace courantx
