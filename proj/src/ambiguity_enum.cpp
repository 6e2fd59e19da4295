#include "phase_ambiguity/ambiguity_enum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "phase_ambiguity/assignment.hpp"
#include "phase_ambiguity/errors.hpp"
#include "phase_ambiguity/parallel.hpp"
#include "phase_ambiguity/polynomial.hpp"

namespace phase_ambiguity {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void check_cap(std::size_t n, const Tolerances& tol) {
  if (n > tol.max_n || n > 63) {
    throw EnumerationCapExceeded("degree " + std::to_string(n) + " exceeds the enumeration cap of " +
                                 std::to_string(tol.max_n));
  }
}

// Candidates are canonical (x[0] > 0), so |x[N]| is invariant under global
// phase and |x[0]| is the |x[N]| of the reflect-conjugate. Sorting on |x[N]|
// confines every comparison to a narrow window.
void partition(CandidateSet& set, const Tolerances& tol) {
  const auto& cands = set.candidates;
  const std::size_t count = cands.size();
  const std::size_t n = cands.front().rep.signal().degree();

  double scale = 0.0;
  for (const auto& c : cands) scale = std::max(scale, c.rep.signal().max_abs());
  const double window = std::max(tol.equivalence, tol.dedup) * scale;

  std::vector<double> key(count);
  for (std::size_t i = 0; i < count; ++i) key[i] = std::abs(cands[i].rep.signal()[n]);
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  std::vector<double> sorted_key(count);
  for (std::size_t i = 0; i < count; ++i) sorted_key[i] = key[order[i]];

  auto for_window = [&](double centre, auto&& visit) {
    auto it = std::lower_bound(sorted_key.begin(), sorted_key.end(), centre - window);
    for (; it != sorted_key.end() && *it <= centre + window; ++it) {
      visit(order[static_cast<std::size_t>(it - sorted_key.begin())]);
    }
  };

  DisjointSets same(count);
  DisjointSets trivial(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto ci = cands[i].rep.signal().coeffs();
    for_window(key[i], [&](std::size_t j) {
      if (j <= i) return;
      const double d = relative_max_distance(ci, cands[j].rep.signal().coeffs());
      if (d <= tol.dedup) same.unite(i, j);
      if (d <= tol.equivalence) trivial.unite(i, j);
    });
    const auto reflected = canonicalize_phase(reflect_conjugate(cands[i].rep.signal()));
    for_window(ci[0].real(), [&](std::size_t j) {
      if (j == i) return;
      if (relative_max_distance(reflected.signal().coeffs(), cands[j].rep.signal().coeffs()) <=
          tol.equivalence) {
        trivial.unite(i, j);
      }
    });
  }

  set.distinct_count = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (same.find(i) == i) ++set.distinct_count;
  }

  // Roots are the smallest index of their group, so iterating in index
  // (= mask) order opens classes by smallest member mask.
  std::vector<std::size_t> class_of(count, count);
  set.classes.clear();
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t root = trivial.find(i);
    if (class_of[root] == count) {
      class_of[root] = set.classes.size();
      set.classes.push_back(CandidateClass{{}, i});
    }
    auto& cls = set.classes[class_of[root]];
    cls.mask_members.push_back(cands[i].mask.bits());
    const auto& best = cands[cls.representative].mask;
    const auto& mine = cands[i].mask;
    if (mine.popcount() < best.popcount() ||
        (mine.popcount() == best.popcount() && mine.bits() < best.bits())) {
      cls.representative = i;
    }
  }
}

CandidateSet build_set(IntensitySpectrum source, std::size_t n, const Tolerances& tol,
                       const std::function<Signal(FlipMask)>& make) {
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::optional<Candidate>> slots(total);
  parallel_for(total, [&](std::size_t m) {
    const FlipMask mask(m, n);
    slots[m].emplace(Candidate{mask, canonicalize_phase(make(mask))});
  });
  CandidateSet set{std::move(source), {}, {}, 0};
  set.candidates.reserve(total);
  for (auto& s : slots) set.candidates.push_back(std::move(*s));
  partition(set, tol);
  return set;
}

double relative_gap(Complex u, Complex v) {
  const double scale = std::max(std::abs(u), std::abs(v));
  return scale > 0.0 ? std::abs(u - v) / scale : 0.0;
}

}  // namespace

CandidateSet enumerate_candidates(const Signal& x, const Tolerances& tol) {
  check_cap(x.degree(), tol);
  const RootForm root_form = to_root_form(x, tol);
  return build_set(intensity(x), x.degree(), tol,
                   [&](FlipMask m) { return synthesize(flip(root_form, m)); });
}

RootPairing factor_intensity(const IntensitySpectrum& s, const Tolerances& tol) {
  const std::size_t n = s.degree();
  const double c0 = s.energy();
  if (!(std::abs(s.at(static_cast<std::ptrdiff_t>(n))) > tol.support * c0)) {
    throw PreconditionError("spectrum has a vanishing top lag c[N]");
  }

  // ω^N A(ω) has coefficients c[-N..N] in low-to-high order.
  ComplexVector roots = find_roots(s.coeffs(), tol);
  std::sort(roots.begin(), roots.end(),
            [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
  const ComplexVector inside(roots.begin(), roots.begin() + static_cast<std::ptrdiff_t>(n));
  const ComplexVector outside(roots.begin() + static_cast<std::ptrdiff_t>(n), roots.end());

  std::vector<double> cost(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex target = 1.0 / std::conj(inside[i]);
    for (std::size_t j = 0; j < n; ++j) cost[i * n + j] = relative_gap(outside[j], target);
  }
  const auto assigned = solve_assignment(cost, n);

  std::vector<RootPair> pairs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double err = cost[i * n + assigned[i]];
    if (!(err <= tol.pairing)) {
      throw PairingFailure("root " + std::to_string(i) +
                           " has no reciprocal-conjugate partner (relative gap " +
                           std::to_string(err) + "); the spectrum is not a valid intensity");
    }
    pairs[i] = RootPair{inside[i], outside[assigned[i]]};
  }
  std::sort(pairs.begin(), pairs.end(), [](const RootPair& a, const RootPair& b) {
    const double ma = std::abs(a.inside);
    const double mb = std::abs(b.inside);
    if (ma != mb) return ma < mb;
    return std::arg(a.inside) < std::arg(b.inside);
  });

  RootPairing out;
  for (std::size_t i = 0; i < n; ++i) {
    auto& p = pairs[i];
    if (on_unit_circle(p.inside, tol.circle) || on_unit_circle(p.outside, tol.circle)) {
      const Complex mid = 0.5 * (p.inside + p.outside);
      p.inside = p.outside = mid / std::abs(mid);
      out.degenerate.push_back(i);
    }
  }
  out.pairs = std::move(pairs);

  ComplexVector inner;
  inner.reserve(n);
  for (const auto& p : out.pairs) inner.push_back(p.inside);
  const ComplexVector monic = expand_roots(1.0, inner);
  double norm2 = 0.0;
  for (const auto& z : monic) norm2 += std::norm(z);
  out.scale = std::sqrt(c0 / norm2);

  const Signal factor(expand_roots(out.scale, inner), 0.0);
  const double mismatch = spectrum_distance(s, intensity(factor));
  if (!(mismatch <= tol.pairing)) {
    throw PairingFailure("paired roots reproduce the spectrum only to " + std::to_string(mismatch));
  }
  return out;
}

CandidateSet candidates_from_intensity(const IntensitySpectrum& s, const Tolerances& tol) {
  check_cap(s.degree(), tol);
  const RootPairing pairing = factor_intensity(s, tol);
  return build_set(s, s.degree(), tol, [&](FlipMask m) {
    double leading = pairing.scale;
    ComplexVector roots(pairing.pairs.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const auto& p = pairing.pairs[i];
      if (m.contains(i)) {
        roots[i] = p.outside;
        leading *= std::abs(p.inside);
      } else {
        roots[i] = p.inside;
      }
    }
    return Signal(expand_roots(leading, roots), 0.0);
  });
}

PhaseClassRep minimum_phase(const IntensitySpectrum& s, const Tolerances& tol) {
  const RootPairing pairing = factor_intensity(s, tol);
  ComplexVector roots;
  roots.reserve(pairing.pairs.size());
  for (const auto& p : pairing.pairs) roots.push_back(p.inside);
  return canonicalize_phase(Signal(expand_roots(pairing.scale, roots), 0.0));
}

}  // namespace phase_ambiguity
