#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "phase_ambiguity/signal.hpp"
#include "phase_ambiguity/tolerances.hpp"

namespace phase_ambiguity {

/// A point of the root cover: x̂(ω) = leading · Π (ω - roots[i]).
/// Root order is bookkeeping only; FlipMask bits refer to it.
class RootForm {
 public:
  RootForm(Complex leading, ComplexVector roots, double support_tol = Tolerances{}.support);

  std::size_t degree() const noexcept { return roots_.size(); }
  Complex leading() const noexcept { return leading_; }
  const ComplexVector& roots() const noexcept { return roots_; }

 private:
  Complex leading_;
  ComplexVector roots_;
};

/// Subset S of root indices {0..n-1}; bit i set means root i is flipped.
class FlipMask {
 public:
  FlipMask(std::uint64_t bits, std::size_t n);

  static FlipMask none(std::size_t n) { return FlipMask(0, n); }
  static FlipMask full(std::size_t n);

  std::uint64_t bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return n_; }
  std::size_t popcount() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool contains(std::size_t i) const noexcept { return i < n_ && ((bits_ >> i) & 1U) != 0; }
  FlipMask with(std::size_t i) const { return FlipMask(bits_ | (std::uint64_t{1} << i), n_); }

  friend bool operator==(const FlipMask&, const FlipMask&) = default;

 private:
  std::uint64_t bits_;
  std::size_t n_;
};

RootForm to_root_form(const Signal& x, const Tolerances& tol = {});

/// x[n] = leading · e_{N-n}(-β₁, …, -β_N).
Signal synthesize(const RootForm& r);

/// For each i in m: β_i -> 1/conj(β_i) and leading -> leading·|β_i|.
RootForm flip(const RootForm& r, FlipMask m);

bool on_unit_circle(Complex z, double circle_tol);

struct RootMatch {
  FlipMask mask;
  /// pairing[i] is the index in b of the root matched to a's root i.
  std::vector<std::size_t> pairing;
  /// Indices of a's roots on the unit circle, whose flip state is undecidable
  /// and which are always reported as not flipped.
  std::vector<std::size_t> degenerate;
  double max_error = 0.0;
};

/// Finds S with b.roots ≈ {β_i : i ∉ S} ∪ {1/conj(β_i) : i ∈ S} as multisets,
/// aligning the multisets by minimum-cost assignment. Leading coefficients
/// are not compared. Throws NoMatch if some pair misses `tol`.
RootMatch match_roots(const RootForm& a, const RootForm& b, double tol,
                      double circle_tol = Tolerances{}.circle);

}  // namespace phase_ambiguity
