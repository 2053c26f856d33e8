#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace defperm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

/// Unique positive scaling of v with coprime integer entries.
/// The first nonzero entry keeps its sign.
inline std::vector<Int> primitive_integer_form(const std::vector<Rat>& v) {
  Int lcm_den = 1;
  bool all_zero = true;
  for (const Rat& x : v) {
    if (x != 0) all_zero = false;
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  }
  if (all_zero) throw std::invalid_argument("zero vector has no primitive form");
  std::vector<Int> w;
  w.reserve(v.size());
  Int g = 0;
  for (const Rat& x : v) {
    Int e = numerator(x) * (lcm_den / denominator(x));
    g = boost::multiprecision::gcd(g, e);
    w.push_back(std::move(e));
  }
  for (Int& e : w) e /= g;
  return w;
}

}  // namespace defperm
