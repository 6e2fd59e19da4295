#pragma once

#include <cstdint>
#include <vector>

#include "phase_ambiguity/root_cover.hpp"
#include "phase_ambiguity/signal.hpp"
#include "phase_ambiguity/tolerances.hpp"

namespace phase_ambiguity {

struct Candidate {
  FlipMask mask;
  PhaseClassRep rep;
};

/// Candidates related by a trivial ambiguity (global phase and/or
/// reflect-conjugation).
struct CandidateClass {
  /// Masks of every candidate in the class, ascending.
  std::vector<std::uint64_t> mask_members;
  /// Index into CandidateSet::candidates of the member with the fewest flips
  /// (ties broken by the smaller mask).
  std::size_t representative;
};

/// All signals sharing one Fourier intensity, indexed by the root flips that
/// produce them.
struct CandidateSet {
  IntensitySpectrum source;
  /// One entry per mask, in ascending mask order (2^N entries).
  std::vector<Candidate> candidates;
  /// Ordered by smallest member mask.
  std::vector<CandidateClass> classes;
  /// Number of numerically distinct candidates; below 2^N when roots repeat
  /// or sit on the unit circle.
  std::size_t distinct_count = 0;

  const PhaseClassRep& representative(const CandidateClass& c) const {
    return candidates[c.representative].rep;
  }
};

struct RootPair {
  Complex inside;
  Complex outside;
};

/// Roots of ω^N A(ω) grouped as {β, 1/conj(β)} with |inside| <= |outside|.
struct RootPairing {
  /// Sorted by inside modulus, then argument.
  std::vector<RootPair> pairs;
  /// |b| such that b·Π(ω - inside_i) has the source spectrum.
  double scale = 0.0;
  /// Pair indices whose roots lie on the unit circle (inside == outside).
  std::vector<std::size_t> degenerate;
};

/// Enumerates canonicalize_phase(synthesize(flip(to_root_form(x), m))) over
/// every mask m and partitions the results into trivial-equivalence classes.
CandidateSet enumerate_candidates(const Signal& x, const Tolerances& tol = {});

/// Spectral factorization of A(ω) into reciprocal-conjugate root pairs.
/// Throws PairingFailure when the roots do not pair up, which happens for
/// instance when A takes negative values on the unit circle.
RootPairing factor_intensity(const IntensitySpectrum& s, const Tolerances& tol = {});

/// Every signal with spectrum `s`, built from each inside/outside choice of
/// the root pairs. Mask bit i selects the outside root of pair i.
CandidateSet candidates_from_intensity(const IntensitySpectrum& s, const Tolerances& tol = {});

/// The spectral factor whose roots all lie in the closed unit disk.
PhaseClassRep minimum_phase(const IntensitySpectrum& s, const Tolerances& tol = {});

}  // namespace phase_ambiguity
