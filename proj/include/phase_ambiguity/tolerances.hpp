#pragma once

#include <cstddef>

namespace phase_ambiguity {

/// Numerical thresholds shared by every module. All values are relative
/// unless stated otherwise.
struct Tolerances {
  /// |x[0]| and |x[N]| must exceed this fraction of max|x[n]|.
  double support = 1e-12;
  /// Backward error |p(r)| / sum |p_k||r|^k accepted for a computed root.
  double residual = 1e-9;
  /// ||r| - 1| at or below this marks a root as lying on the unit circle.
  double circle = 1e-8;
  /// Relative distance allowed when matching two root multisets.
  double matching = 1e-6;
  /// Relative distance allowed between a root and the mirror image of its partner.
  double pairing = 1e-7;
  /// Canonical forms closer than this are the same candidate.
  double dedup = 1e-9;
  /// Relative slack for constraint predicates.
  double predicate = 1e-8;
  /// Used by trivial_equivalent / spectra_equal when classifying candidates.
  double equivalence = 1e-8;
  /// Computed roots closer than this (relative) are merged into one repeated root.
  double cluster = 1e-6;
  /// Newton polish steps applied to each eigenvalue.
  int newton_steps = 2;
  /// Largest degree for which 2^N enumeration is attempted.
  std::size_t max_n = 24;
};

}  // namespace phase_ambiguity
