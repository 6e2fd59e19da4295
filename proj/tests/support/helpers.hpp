#pragma once

#include <doctest.h>

#include <algorithm>
#include <complex>
#include <span>
#include <vector>

#include "phase_ambiguity/signal.hpp"

namespace test_support {

using phase_ambiguity::Complex;
using phase_ambiguity::ComplexVector;

inline constexpr Complex I{0.0, 1.0};

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  REQUIRE(a.size() == b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

/// True when the two multisets agree after sorting greedily by nearest match
/// (fine for the small, well separated root sets used in tests).
inline bool same_multiset(ComplexVector a, ComplexVector b, double tol) {
  if (a.size() != b.size()) return false;
  for (const auto& z : a) {
    auto it = std::min_element(b.begin(), b.end(), [&](Complex p, Complex q) {
      return std::abs(p - z) < std::abs(q - z);
    });
    if (it == b.end() || std::abs(*it - z) > tol * std::max(1.0, std::abs(z))) return false;
    b.erase(it);
  }
  return true;
}

inline phase_ambiguity::Signal golden_x() { return phase_ambiguity::Signal({4.5, 9.0, 0.5, 1.0}); }

}  // namespace test_support
