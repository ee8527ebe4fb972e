#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace eqfp {

// Exact scalars. Everything downstream (traces, homology ranks, orbifold
// weights) is computed without rounding, so mismatches are always bugs,
// never tolerance artifacts.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Int& n) { return n.str(); }

inline std::string to_string(const Rat& q) {
  if (rat_den(q) == 1) return rat_num(q).str();
  return rat_num(q).str() + "/" + rat_den(q).str();
}

}  // namespace eqfp
