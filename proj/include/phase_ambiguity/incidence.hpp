#pragma once

#include <utility>
#include <vector>

#include "phase_ambiguity/root_cover.hpp"
#include "phase_ambiguity/signal.hpp"
#include "phase_ambiguity/tolerances.hpp"

namespace phase_ambiguity {

/// Which incidence components I_k contain the pair (x, x'). Component k
/// collects pairs whose root configurations differ by exactly k flips, so
/// I_0 is the diagonal and I_N the graph of reflect-conjugation.
struct PairClassification {
  /// Ascending. A single entry unless x has roots on the unit circle, each of
  /// which may count as flipped or not.
  std::vector<std::size_t> components;
  /// witnesses[i] has popcount components[i].
  std::vector<FlipMask> witnesses;
  /// Indices (into x's root form) of roots on the unit circle.
  std::vector<std::size_t> degenerate_roots;
};

/// Throws NotEquiIntensity unless the spectra agree to `tol.equivalence`,
/// and NoMatch when the root sets are numerically inconsistent.
PairClassification classify_pair(const Signal& x, const Signal& xp, const Tolerances& tol = {});

/// (x, x') -> (x, reflect_conjugate(x')), which maps I_k onto I_{N-k}.
std::pair<Signal, Signal> involution_partner(const Signal& x, const Signal& xp,
                                             const Tolerances& tol = {});

/// Witness that x = x1 ⋆ x2 and x' = x1 ⋆ ẋ2 modulo global phase.
///
/// x2 is the monic polynomial over the k flipped roots and x1 carries the
/// leading coefficient and the N - k unflipped roots, so x1 has N - k + 1
/// coefficients and x2 has k + 1.
struct ConvolutionCertificate {
  std::size_t k = 0;
  FlipMask mask = FlipMask::none(0);
  ComplexVector x1;
  ComplexVector x2;
  /// max|x1 ⋆ x2 - x| / max|x|.
  double residual_x = 0.0;
  /// Same for x1 ⋆ ẋ2 against x', after canonicalizing both phases.
  double residual_xprime = 0.0;
};

/// Uses the numerically smallest witness mask when several exist.
ConvolutionCertificate convolution_factor(const Signal& x, const Signal& xp,
                                          const Tolerances& tol = {});

}  // namespace phase_ambiguity
