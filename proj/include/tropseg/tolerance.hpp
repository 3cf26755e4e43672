#pragma once

#include <cmath>

namespace tropseg {

// Absolute tolerance shared by every floating comparison in the library.
// Tree-level code (heights, branch lengths) compares in height units;
// vector-level code (torus points, raw ultrametric entries) in coordinate units.
inline constexpr double kDefaultTol = 1e-9;

inline bool approx_equal(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool definitely_less(double a, double b, double tol) { return a < b - tol; }

}  // namespace tropseg
