#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "phase_ambiguity/signal.hpp"
#include "phase_ambiguity/tolerances.hpp"

namespace phase_ambiguity {

using SignalTuple = std::vector<Signal>;

/// An algebraic subset W of tuples of signals, given by a membership test
/// and a sampler that draws points of W.
struct ConstraintSystem {
  std::string description;
  /// Length N_i + 1 of each component signal.
  std::vector<std::size_t> lengths;
  /// Membership at relative tolerance; must not depend on the global phase
  /// of any single component.
  std::function<bool(std::span<const Signal>, double)> predicate;
  std::function<SignalTuple(std::mt19937_64&)> sampler;
};

/// Which candidate tuples count as trivially related to the witness and are
/// skipped by check_witness.
enum class WitnessMode {
  /// Skip tuples equal to the witness, and tuples equal to the witness with
  /// every component reflect-conjugated, modulo per-component global phase.
  ModGlobalPhase,
  /// Skip only tuples equal to the witness modulo per-component global phase.
  ModTrivial,
};

enum class WitnessConclusion { WitnessHolds, WitnessFails };

struct Violation {
  /// Flip mask of each component, relative to its own root form.
  std::vector<std::uint64_t> masks;
  /// Phase-canonical candidate tuple that satisfies the constraint.
  SignalTuple candidate;
};

struct WitnessReport {
  SignalTuple witness;
  std::size_t total_pairs_checked = 0;
  std::vector<Violation> violating_pairs;
  WitnessConclusion conclusion = WitnessConclusion::WitnessHolds;
  WitnessMode mode = WitnessMode::ModGlobalPhase;
};

/// Enumerates every combination of per-component root flips of `w0` and
/// records the non-trivial ones that still satisfy the constraint. If none
/// do, generic points of W are determined by their intensities.
///
/// Throws PreconditionError if `w0` does not match the arity or fails the
/// predicate, and EnumerationCapExceeded when Σ N_i exceeds `tol.max_n`.
WitnessReport check_witness(const ConstraintSystem& c, const SignalTuple& w0, WitnessMode mode,
                            double predicate_tol, const Tolerances& tol = {});

struct FailedTrial {
  std::size_t trial;
  WitnessReport report;
};

struct UniquenessReport {
  std::size_t trials = 0;
  std::size_t failures = 0;
  double failure_fraction = 0.0;
  std::vector<FailedTrial> failing;
};

/// Runs check_witness on `trials` sampler draws. Trial t uses the engine
/// make_engine(seed, t), so results do not depend on thread scheduling.
UniquenessReport generic_uniqueness_test(const ConstraintSystem& c, std::size_t trials,
                                         std::uint64_t seed, WitnessMode mode,
                                         double predicate_tol, const Tolerances& tol = {});

/// Spectral factors of `s` whose last coefficient has modulus `a` (within
/// predicate_tol·a), one per distinct phase class, in mask order. Generically
/// exactly one survives. An empty result means no factor matches `a`.
std::vector<PhaseClassRep> recover_with_last_modulus(const IntensitySpectrum& s, double a,
                                                     double predicate_tol,
                                                     const Tolerances& tol = {});

/// Signals of the given length with |x[N]| = a.
ConstraintSystem fixed_last_modulus_constraint(double a, std::size_t length);

/// Every signal of the given length.
ConstraintSystem unconstrained(std::size_t length);

/// The single point `w` (modulo per-component global phase).
ConstraintSystem point_constraint(SignalTuple w);

/// Triples (y1, y2, y3) of lengths (L+1, 2L+1, 3L+1) with
/// y1[n]·y3[L+n] = λ·y2[n]·y2[L+n] for n = 0..L and one common |λ| = 1.
/// The free λ makes membership independent of each component's phase;
/// λ = 1 gives the quadratic system itself, which the sampler satisfies.
ConstraintSystem stft_constraint(std::size_t L);

/// Draws `samples` points and checks that each satisfies the predicate at
/// predicate_tol / 10 and still does after random per-component phases.
bool audit_constraint(const ConstraintSystem& c, std::uint64_t seed, std::size_t samples,
                      double predicate_tol);

}  // namespace phase_ambiguity
