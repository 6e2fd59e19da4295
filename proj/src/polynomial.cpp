#include "phase_ambiguity/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "phase_ambiguity/errors.hpp"

namespace phase_ambiguity {

namespace {

using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

// Parlett-Reinsch balancing with power-of-two scale factors, so the
// similarity transform is exact.
void balance(Matrix& m) {
  const Eigen::Index n = m.rows();
  constexpr double kGamma = 0.95;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      double row = 0.0;
      double col = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        row += std::abs(m(i, j));
        col += std::abs(m(j, i));
      }
      if (row == 0.0 || col == 0.0) continue;
      int exponent = 0;
      std::frexp(row / col, &exponent);
      exponent /= 2;
      if (exponent == 0) continue;
      const double scaled_col = std::ldexp(col, exponent);
      const double scaled_row = std::ldexp(row, -exponent);
      if (scaled_col + scaled_row < kGamma * (row + col)) {
        changed = true;
        m.row(i) *= std::ldexp(1.0, -exponent);
        m.col(i) *= std::ldexp(1.0, exponent);
      }
    }
  }
}

// Starting points on the circles given by the upper convex hull of
// (k, log|p[k]|), the Newton polygon, so every root modulus gets a guess of
// the right order.
ComplexVector initial_guesses(std::span<const Complex> p) {
  const std::size_t n = p.size() - 1;
  std::vector<double> logs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    logs[k] = p[k] == Complex{0.0, 0.0} ? -HUGE_VAL : std::log(std::abs(p[k]));
  }
  std::vector<std::size_t> hull;
  for (std::size_t k = 0; k <= n; ++k) {
    if (std::isinf(logs[k])) continue;
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull.back();
      const double cross = (logs[b] - logs[a]) * static_cast<double>(k - a) -
                           (logs[k] - logs[a]) * static_cast<double>(b - a);
      if (cross > 0.0) break;
      hull.pop_back();
    }
    hull.push_back(k);
  }
  constexpr double kTwoPi = 6.283185307179586;
  ComplexVector z;
  z.reserve(n);
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const std::size_t m = hull[h + 1] - hull[h];
    const double radius = std::exp((logs[hull[h]] - logs[hull[h + 1]]) / static_cast<double>(m));
    for (std::size_t j = 0; j < m; ++j) {
      const double angle = kTwoPi * (static_cast<double>(j) / static_cast<double>(m) +
                                     static_cast<double>(hull[h]) / static_cast<double>(n)) + 0.4;
      z.push_back(std::polar(radius, angle));
    }
  }
  return z;
}

// Aberth-Ehrlich iteration. Returns false if some root has not reached the
// rounding level of p within the iteration budget.
bool aberth(std::span<const Complex> p, ComplexVector& z) {
  constexpr int kMaxIterations = 200;
  constexpr double kEps = 2.220446049250313e-16;
  const std::size_t n = z.size();
  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  for (int it = 0; it < kMaxIterations && remaining > 0; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      Complex value{0.0, 0.0};
      Complex deriv{0.0, 0.0};
      double bound = 0.0;
      const double r = std::abs(z[i]);
      for (std::size_t k = p.size(); k-- > 0;) {
        deriv = deriv * z[i] + value;
        value = value * z[i] + p[k];
        bound = bound * r + std::abs(p[k]);
      }
      if (std::abs(value) <= 4.0 * kEps * bound) {
        done[i] = true;
        --remaining;
        continue;
      }
      const Complex ratio = value / deriv;
      Complex repulsion{0.0, 0.0};
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return false;
      z[i] -= step;
    }
  }
  return remaining == 0;
}

ComplexVector companion_eigenvalues(std::span<const Complex> p) {
  const std::size_t degree = p.size() - 1;
  const auto d = static_cast<Eigen::Index>(degree);
  Matrix companion = Matrix::Zero(d, d);
  for (Eigen::Index i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    companion(i, d - 1) = -p[static_cast<std::size_t>(i)] / p[degree];
  }
  balance(companion);

  Eigen::ComplexEigenSolver<Matrix> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    std::vector<std::size_t> all(degree);
    std::iota(all.begin(), all.end(), std::size_t{0});
    throw RootFindingError("companion eigenvalue iteration did not converge", std::move(all));
  }
  ComplexVector out(degree);
  for (std::size_t i = 0; i < degree; ++i) out[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
  return out;
}

Complex newton_polish(std::span<const Complex> p, Complex z, int steps) {
  double best = std::abs(horner(p, z));
  for (int s = 0; s < steps && best > 0.0; ++s) {
    Complex value{0.0, 0.0};
    Complex deriv{0.0, 0.0};
    for (std::size_t k = p.size(); k-- > 0;) {
      deriv = deriv * z + value;
      value = value * z + p[k];
    }
    if (deriv == Complex{0.0, 0.0}) break;
    const Complex next = z - value / deriv;
    const double next_err = std::abs(horner(p, next));
    if (!(next_err < best)) break;
    z = next;
    best = next_err;
  }
  return z;
}

// An m-fold root of p is a simple root of its (m-1)-th derivative.
ComplexVector derivative(std::span<const Complex> p, std::size_t order) {
  ComplexVector d(p.begin(), p.end());
  for (std::size_t o = 0; o < order && d.size() > 1; ++o) {
    for (std::size_t k = 1; k < d.size(); ++k) d[k - 1] = d[k] * static_cast<double>(k);
    d.pop_back();
  }
  return d;
}

// Single-linkage clustering; members of a cluster are replaced by the mean,
// refined by Newton steps on the derivative where the root is simple.
void merge_clusters(std::span<const Complex> p, ComplexVector& roots, double cluster_tol, int steps) {
  const std::size_t n = roots.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double scale = std::max(std::abs(roots[i]), std::abs(roots[j]));
      if (std::abs(roots[i] - roots[j]) <= cluster_tol * scale) {
        parent[find(i)] = find(j);
        any = true;
      }
    }
  }
  if (!any) return;
  std::vector<Complex> sum(n, Complex{0.0, 0.0});
  std::vector<std::size_t> count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    sum[find(i)] += roots[i];
    ++count[find(i)];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (find(i) != i || count[i] < 2) continue;
    sum[i] = newton_polish(derivative(p, count[i] - 1), sum[i] / static_cast<double>(count[i]),
                           steps + 1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (count[r] > 1) roots[i] = sum[r];
  }
}

}  // namespace

Complex horner(std::span<const Complex> p, Complex z) {
  Complex acc{0.0, 0.0};
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * z + p[k];
  return acc;
}

double root_backward_error(std::span<const Complex> p, Complex z) {
  const double r = std::abs(z);
  double norm = 0.0;
  for (std::size_t k = p.size(); k-- > 0;) norm = norm * r + std::abs(p[k]);
  const double value = std::abs(horner(p, z));
  return norm > 0.0 ? value / norm : value;
}

ComplexVector find_roots(std::span<const Complex> p, const Tolerances& tol) {
  if (p.empty() || p.back() == Complex{0.0, 0.0}) {
    throw PreconditionError("find_roots: leading coefficient is zero");
  }
  const std::size_t degree = p.size() - 1;
  if (degree == 0) return {};
  if (degree == 1) return {-p[0] / p[1]};

  ComplexVector roots = initial_guesses(p);
  if (!aberth(p, roots)) roots = companion_eigenvalues(p);
  for (auto& r : roots) r = newton_polish(p, r, tol.newton_steps);
  merge_clusters(p, roots, tol.cluster, tol.newton_steps);

  std::vector<std::size_t> failed;
  for (std::size_t i = 0; i < degree; ++i) {
    if (!(root_backward_error(p, roots[i]) <= tol.residual)) failed.push_back(i);
  }
  if (!failed.empty()) {
    throw RootFindingError(std::to_string(failed.size()) + " root(s) missed the residual tolerance",
                           std::move(failed));
  }
  return roots;
}

ComplexVector expand_roots(Complex leading, std::span<const Complex> roots) {
  ComplexVector c{leading};
  c.reserve(roots.size() + 1);
  for (const auto& r : roots) {
    c.push_back(Complex{0.0, 0.0});
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return c;
}

}  // namespace phase_ambiguity
