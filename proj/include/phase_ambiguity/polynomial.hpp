#pragma once

#include <span>

#include "phase_ambiguity/signal.hpp"
#include "phase_ambiguity/tolerances.hpp"

namespace phase_ambiguity {

// Coefficient vectors here are ordered low-to-high: p(ω) = Σ p[k] ωᵏ.

Complex horner(std::span<const Complex> p, Complex z);

/// |p(z)| / Σ |p[k]| |z|ᵏ, the backward error of z as a root of p.
double root_backward_error(std::span<const Complex> p, Complex z);

/// All deg(p) roots of p, counted with multiplicity.
///
/// Roots come from Aberth-Ehrlich iteration started on the Newton polygon
/// circles, falling back to the eigenvalues of the balanced companion matrix
/// if the iteration stalls. Each is then polished by up to `tol.newton_steps` guarded Newton steps on p itself.
/// Roots closer than `tol.cluster` (relative) are replaced by their common
/// centroid, which is far more accurate for a repeated root than the
/// individual eigenvalues. Throws RootFindingError when a root misses
/// `tol.residual` and PreconditionError when the leading coefficient is zero.
ComplexVector find_roots(std::span<const Complex> p, const Tolerances& tol = {});

/// Coefficients of leading · Π (ω - roots[i]).
ComplexVector expand_roots(Complex leading, std::span<const Complex> roots);

}  // namespace phase_ambiguity
