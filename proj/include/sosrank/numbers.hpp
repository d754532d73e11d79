#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sosrank {

// All counting and coefficient arithmetic is exact. Int is an
// arbitrary-precision integer, Rat an arbitrary-precision rational.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Rank of an integer matrix over the rationals, by fraction-free
/// (Bareiss) elimination. Rows may be empty; the matrix need not be square.
int exact_rank(std::vector<std::vector<Int>> m);

}  // namespace sosrank
