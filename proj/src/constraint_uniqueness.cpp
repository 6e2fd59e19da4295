#include "phase_ambiguity/constraint_uniqueness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "phase_ambiguity/ambiguity_enum.hpp"
#include "phase_ambiguity/errors.hpp"
#include "phase_ambiguity/parallel.hpp"
#include "phase_ambiguity/sampling.hpp"

namespace phase_ambiguity {

namespace {

struct ComponentCandidates {
  std::size_t degree;
  std::vector<Signal> signals;  // indexed by mask
  std::vector<bool> same;       // equals the witness component mod S¹
  std::vector<bool> reflected;  // equals its reflect-conjugate mod S¹
};

ComponentCandidates component_candidates(const Signal& w, const Tolerances& tol) {
  const CandidateSet set = enumerate_candidates(w, tol);
  const auto base = canonicalize_phase(w);
  const auto refl = canonicalize_phase(reflect_conjugate(w));
  ComponentCandidates out{w.degree(), {}, {}, {}};
  for (const auto& c : set.candidates) {
    const auto coeffs = c.rep.signal().coeffs();
    out.same.push_back(relative_max_distance(base.signal().coeffs(), coeffs) <= tol.equivalence);
    out.reflected.push_back(relative_max_distance(refl.signal().coeffs(), coeffs) <=
                            tol.equivalence);
    out.signals.push_back(c.rep.signal());
  }
  return out;
}

WitnessReport check_witness_impl(const ConstraintSystem& c, const SignalTuple& w0,
                                 WitnessMode mode, double predicate_tol, const Tolerances& tol,
                                 bool parallel) {
  if (w0.size() != c.lengths.size()) {
    throw PreconditionError("witness has " + std::to_string(w0.size()) + " components, constraint expects " +
                            std::to_string(c.lengths.size()));
  }
  std::size_t total_degree = 0;
  for (std::size_t i = 0; i < w0.size(); ++i) {
    if (w0[i].size() != c.lengths[i]) {
      throw PreconditionError("witness component " + std::to_string(i) + " has the wrong length");
    }
    total_degree += w0[i].degree();
  }
  if (total_degree > tol.max_n) {
    throw EnumerationCapExceeded("total degree " + std::to_string(total_degree) +
                                 " exceeds the enumeration cap of " + std::to_string(tol.max_n));
  }
  if (!c.predicate(w0, predicate_tol)) {
    throw PreconditionError("witness does not satisfy the constraint: " + c.description);
  }

  std::vector<ComponentCandidates> comps;
  comps.reserve(w0.size());
  for (const auto& w : w0) comps.push_back(component_candidates(w, tol));

  const std::size_t total = std::size_t{1} << total_degree;
  auto split = [&](std::size_t t) {
    std::vector<std::uint64_t> masks(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      masks[i] = t & ((std::uint64_t{1} << comps[i].degree) - 1);
      t >>= comps[i].degree;
    }
    return masks;
  };

  // 0 = skipped as trivial, 1 = checked and fine, 2 = violation.
  std::vector<unsigned char> status(total, 0);
  auto visit = [&](std::size_t t) {
    const auto masks = split(t);
    bool all_same = true;
    bool all_reflected = true;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      all_same = all_same && comps[i].same[masks[i]];
      all_reflected = all_reflected && comps[i].reflected[masks[i]];
    }
    if (all_same || (mode == WitnessMode::ModGlobalPhase && all_reflected)) return;
    SignalTuple tuple;
    tuple.reserve(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) tuple.push_back(comps[i].signals[masks[i]]);
    status[t] = c.predicate(tuple, predicate_tol) ? 2 : 1;
  };
  if (parallel) {
    parallel_for(total, visit);
  } else {
    for (std::size_t t = 0; t < total; ++t) visit(t);
  }

  WitnessReport report;
  report.witness = w0;
  report.mode = mode;
  for (std::size_t t = 0; t < total; ++t) {
    if (status[t] == 0) continue;
    ++report.total_pairs_checked;
    if (status[t] != 2) continue;
    Violation v{split(t), {}};
    for (std::size_t i = 0; i < comps.size(); ++i) v.candidate.push_back(comps[i].signals[v.masks[i]]);
    report.violating_pairs.push_back(std::move(v));
  }
  report.conclusion = report.violating_pairs.empty() ? WitnessConclusion::WitnessHolds
                                                     : WitnessConclusion::WitnessFails;
  return report;
}

bool close_relative(Complex lhs, Complex rhs, double tol) {
  return std::abs(lhs - rhs) <= tol * std::max(std::abs(lhs), std::abs(rhs));
}

}  // namespace

WitnessReport check_witness(const ConstraintSystem& c, const SignalTuple& w0, WitnessMode mode,
                            double predicate_tol, const Tolerances& tol) {
  return check_witness_impl(c, w0, mode, predicate_tol, tol, true);
}

UniquenessReport generic_uniqueness_test(const ConstraintSystem& c, std::size_t trials,
                                         std::uint64_t seed, WitnessMode mode,
                                         double predicate_tol, const Tolerances& tol) {
  std::vector<std::optional<WitnessReport>> reports(trials);
  parallel_for(
      trials,
      [&](std::size_t t) {
        auto rng = make_engine(seed, t);
        const SignalTuple sample = c.sampler(rng);
        reports[t].emplace(check_witness_impl(c, sample, mode, predicate_tol, tol, false));
      },
      2);

  UniquenessReport out;
  out.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    if (reports[t]->conclusion == WitnessConclusion::WitnessFails) {
      out.failing.push_back(FailedTrial{t, std::move(*reports[t])});
    }
  }
  out.failures = out.failing.size();
  out.failure_fraction = trials == 0 ? 0.0 : static_cast<double>(out.failures) / static_cast<double>(trials);
  return out;
}

std::vector<PhaseClassRep> recover_with_last_modulus(const IntensitySpectrum& s, double a,
                                                     double predicate_tol,
                                                     const Tolerances& tol) {
  if (!(a > 0.0) || !std::isfinite(a)) throw PreconditionError("last modulus must be positive");
  const CandidateSet set = candidates_from_intensity(s, tol);
  const std::size_t n = s.degree();
  std::vector<PhaseClassRep> out;
  for (const auto& cand : set.candidates) {
    const Signal& x = cand.rep.signal();
    if (!(std::abs(std::abs(x[n]) - a) <= predicate_tol * a)) continue;
    const bool seen = std::any_of(out.begin(), out.end(), [&](const PhaseClassRep& r) {
      return relative_max_distance(r.signal().coeffs(), x.coeffs()) <= tol.dedup;
    });
    if (!seen) out.push_back(cand.rep);
  }
  return out;
}

ConstraintSystem fixed_last_modulus_constraint(double a, std::size_t length) {
  if (!(a > 0.0)) throw PreconditionError("fixed-last-modulus needs a > 0");
  if (length < 2) throw PreconditionError("signals need at least two coefficients");
  ConstraintSystem c;
  c.description = "fixed-last-modulus:a=" + std::to_string(a);
  c.lengths = {length};
  c.predicate = [a](std::span<const Signal> y, double tol) {
    const Signal& x = y[0];
    return std::abs(std::abs(x[x.degree()]) - a) <= tol * a;
  };
  c.sampler = [a, length](std::mt19937_64& rng) {
    const Signal x = random_generic_signal(rng, length - 1);
    const double scale = a / std::abs(x[x.degree()]);
    ComplexVector v(x.coeffs().begin(), x.coeffs().end());
    for (auto& z : v) z *= scale;
    return SignalTuple{Signal(std::move(v), 0.0)};
  };
  return c;
}

ConstraintSystem unconstrained(std::size_t length) {
  if (length < 2) throw PreconditionError("signals need at least two coefficients");
  ConstraintSystem c;
  c.description = "none";
  c.lengths = {length};
  c.predicate = [](std::span<const Signal>, double) { return true; };
  c.sampler = [length](std::mt19937_64& rng) {
    return SignalTuple{random_generic_signal(rng, length - 1)};
  };
  return c;
}

ConstraintSystem point_constraint(SignalTuple w) {
  ConstraintSystem c;
  c.description = "point";
  for (const auto& s : w) c.lengths.push_back(s.size());
  std::vector<Signal> canonical;
  for (const auto& s : w) canonical.push_back(canonicalize_phase(s).signal());
  c.predicate = [canonical](std::span<const Signal> y, double tol) {
    if (y.size() != canonical.size()) return false;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i].size() != canonical[i].size()) return false;
      if (relative_max_distance(canonical[i].coeffs(), canonicalize_phase(y[i]).signal().coeffs()) > tol) {
        return false;
      }
    }
    return true;
  };
  c.sampler = [w = std::move(w)](std::mt19937_64&) { return w; };
  return c;
}

ConstraintSystem stft_constraint(std::size_t L) {
  if (L == 0) throw PreconditionError("stft constraint needs L >= 1");
  ConstraintSystem c;
  c.description = "stft:L=" + std::to_string(L);
  c.lengths = {L + 1, 2 * L + 1, 3 * L + 1};
  c.predicate = [L](std::span<const Signal> y, double tol) {
    if (y.size() != 3 || y[0].size() != L + 1 || y[1].size() != 2 * L + 1 ||
        y[2].size() != 3 * L + 1) {
      return false;
    }
    ComplexVector lhs(L + 1);
    ComplexVector rhs(L + 1);
    Complex overlap{0.0, 0.0};
    for (std::size_t n = 0; n <= L; ++n) {
      lhs[n] = y[0][n] * y[2][L + n];
      rhs[n] = y[1][n] * y[1][L + n];
      overlap += lhs[n] * std::conj(rhs[n]);
    }
    const Complex lambda = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
    for (std::size_t n = 0; n <= L; ++n) {
      if (!close_relative(lhs[n], lambda * rhs[n], tol)) return false;
    }
    return true;
  };
  const auto predicate = c.predicate;
  c.sampler = [L, predicate](std::mt19937_64& rng) {
    ComplexVector y1(L + 1), y2(2 * L + 1), y3(3 * L + 1);
    for (auto& z : y1) z = complex_normal(rng);
    for (auto& z : y2) z = complex_normal(rng);
    for (auto& z : y3) z = complex_normal(rng);
    for (std::size_t n = 0; n <= L; ++n) y3[L + n] = y2[n] * y2[L + n] / y1[n];
    SignalTuple out{Signal(std::move(y1)), Signal(std::move(y2)), Signal(std::move(y3))};
    if (!predicate(out, 1e-12)) throw InternalError("stft sampler produced a point off the constraint");
    return out;
  };
  return c;
}

bool audit_constraint(const ConstraintSystem& c, std::uint64_t seed, std::size_t samples,
                      double predicate_tol) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (std::size_t t = 0; t < samples; ++t) {
    auto rng = make_engine(seed, t);
    const SignalTuple y = c.sampler(rng);
    if (y.size() != c.lengths.size()) return false;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i].size() != c.lengths[i]) return false;
    }
    if (!c.predicate(y, predicate_tol / 10.0)) return false;
    SignalTuple rotated;
    for (const auto& s : y) {
      const Complex unit = std::polar(1.0, angle(rng));
      ComplexVector v(s.coeffs().begin(), s.coeffs().end());
      for (auto& z : v) z *= unit;
      rotated.emplace_back(std::move(v), 0.0);
    }
    if (!c.predicate(rotated, predicate_tol)) return false;
  }
  return true;
}

}  // namespace phase_ambiguity
