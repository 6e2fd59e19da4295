#include "phase_ambiguity/root_cover.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "phase_ambiguity/assignment.hpp"
#include "phase_ambiguity/errors.hpp"
#include "phase_ambiguity/polynomial.hpp"

namespace phase_ambiguity {

namespace {

Complex mirror(Complex z) { return 1.0 / std::conj(z); }

double relative_gap(Complex u, Complex v) {
  const double scale = std::max(std::abs(u), std::abs(v));
  return scale > 0.0 ? std::abs(u - v) / scale : 0.0;
}

}  // namespace

RootForm::RootForm(Complex leading, ComplexVector roots, double support_tol)
    : leading_(leading), roots_(std::move(roots)) {
  if (roots_.empty()) throw PreconditionError("root form needs at least one root");
  if (!(std::abs(leading_) > 0.0)) throw PreconditionError("root form leading coefficient is zero");
  for (const auto& r : roots_) {
    if (!(std::abs(r) > support_tol)) throw PreconditionError("root form has a zero root");
  }
}

FlipMask::FlipMask(std::uint64_t bits, std::size_t n) : bits_(bits), n_(n) {
  if (n > 64 || (n < 64 && (bits >> n) != 0)) {
    throw PreconditionError("flip mask " + std::to_string(bits) + " does not fit " +
                            std::to_string(n) + " roots");
  }
}

FlipMask FlipMask::full(std::size_t n) {
  return FlipMask(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, n);
}

RootForm to_root_form(const Signal& x, const Tolerances& tol) {
  return RootForm(x[x.degree()], find_roots(x.coeffs(), tol), 0.0);
}

Signal synthesize(const RootForm& r) {
  return Signal(expand_roots(r.leading(), r.roots()), 0.0);
}

RootForm flip(const RootForm& r, FlipMask m) {
  if (m.size() != r.degree()) throw PreconditionError("flip mask size differs from root count");
  Complex leading = r.leading();
  ComplexVector roots = r.roots();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!m.contains(i)) continue;
    leading *= std::abs(roots[i]);
    roots[i] = mirror(roots[i]);
  }
  return RootForm(leading, std::move(roots), 0.0);
}

bool on_unit_circle(Complex z, double circle_tol) {
  return std::abs(std::abs(z) - 1.0) <= circle_tol;
}

RootMatch match_roots(const RootForm& a, const RootForm& b, double tol, double circle_tol) {
  const std::size_t n = a.degree();
  if (b.degree() != n) throw PreconditionError("match_roots: root counts differ");
  const auto& ra = a.roots();
  const auto& rb = b.roots();

  std::vector<double> cost(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cost[i * n + j] = std::min(relative_gap(rb[j], ra[i]), relative_gap(rb[j], mirror(ra[i])));
    }
  }
  const auto pairing = solve_assignment(cost, n);

  RootMatch out{FlipMask::none(n), pairing, {}, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    const Complex target = rb[pairing[i]];
    const double same = relative_gap(target, ra[i]);
    const double flipped = relative_gap(target, mirror(ra[i]));
    double err = same;
    if (on_unit_circle(ra[i], circle_tol)) {
      out.degenerate.push_back(i);
      err = std::min(same, flipped);
    } else if (flipped < same) {
      out.mask = out.mask.with(i);
      err = flipped;
    }
    if (!(err <= tol)) {
      throw NoMatch("root " + std::to_string(i) + " has no partner within tolerance (error " +
                    std::to_string(err) + ")");
    }
    out.max_error = std::max(out.max_error, err);
  }
  return out;
}

}  // namespace phase_ambiguity
