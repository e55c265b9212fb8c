#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace memest {

struct SearchSpec {
  double lower;
  double upper;
  double tolerance = 1e-10;
  int max_iterations = 200;

  void validate() const {
    if (!(lower < upper)) throw std::invalid_argument("search interval: lower must be < upper");
    if (!(tolerance >= 1e-12)) throw std::invalid_argument("search tolerance must be >= 1e-12");
    if (max_iterations < 1) throw std::invalid_argument("max_iterations must be positive");
  }
};

struct ScalarMinimum {
  double argmin;
  double min;
  bool converged;
  int iterations;
};

/// Golden-section search. Caller guarantees f is unimodal on the
/// interval; otherwise a local minimum is returned. The interval shrinks
/// by 1/phi per iteration, so convergence on [a, b] takes at most
/// ceil(log((b-a)/tol) / log(phi)) iterations. If max_iterations runs out
/// first, the best point so far is returned with converged = false.
template <typename F>
ScalarMinimum golden_minimize(F&& f, const SearchSpec& spec) {
  spec.validate();
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = spec.lower, b = spec.upper;
  double c = b - (b - a) * inv_phi;
  double d = a + (b - a) * inv_phi;
  double fc = f(c), fd = f(d);
  int iter = 0;
  while ((b - a) > spec.tolerance && iter < spec.max_iterations) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = f(d);
    }
    ++iter;
  }
  const double x = (a + b) / 2.0;
  return {x, f(x), (b - a) <= spec.tolerance, iter};
}

struct Box2 {
  double x_lo, x_hi;
  double y_lo, y_hi;
};

struct GridMinimum2d {
  double x;
  double y;
  double min;
};

/// Nested grid search: evaluate a coarse x coarse lattice, recenter a
/// shrunken box (two grid steps around the best cell, clamped to the
/// original box) and repeat. Ties go to the lowest row-major index, so
/// the result does not depend on evaluation order.
template <typename F>
GridMinimum2d grid_refine_minimize_2d(F&& f, Box2 box, int coarse, int refinements) {
  if (coarse < 8) throw std::invalid_argument("grid search: coarse must be >= 8");
  if (refinements < 1) throw std::invalid_argument("grid search: refinements must be >= 1");
  if (!(box.x_lo < box.x_hi) || !(box.y_lo < box.y_hi))
    throw std::invalid_argument("grid search: degenerate box");
  const Box2 outer = box;
  double best_x = box.x_lo, best_y = box.y_lo;
  double best = f(best_x, best_y);
  for (int level = 0; level < refinements; ++level) {
    const double sx = (box.x_hi - box.x_lo) / (coarse - 1);
    const double sy = (box.y_hi - box.y_lo) / (coarse - 1);
    double lvl_best = 0.0, lvl_x = 0.0, lvl_y = 0.0;
    bool first = true;
    for (int i = 0; i < coarse; ++i) {
      for (int j = 0; j < coarse; ++j) {
        const double x = box.x_lo + i * sx;
        const double y = box.y_lo + j * sy;
        const double v = f(x, y);
        if (first || v < lvl_best) {
          first = false;
          lvl_best = v;
          lvl_x = x;
          lvl_y = y;
        }
      }
    }
    if (lvl_best < best) {
      best = lvl_best;
      best_x = lvl_x;
      best_y = lvl_y;
    }
    box.x_lo = std::max(outer.x_lo, lvl_x - 2 * sx);
    box.x_hi = std::min(outer.x_hi, lvl_x + 2 * sx);
    box.y_lo = std::max(outer.y_lo, lvl_y - 2 * sy);
    box.y_hi = std::min(outer.y_hi, lvl_y + 2 * sy);
  }
  return {best_x, best_y, best};
}

}  // namespace memest
