#pragma once

// Composite Simpson quadrature with dyadic refinement. The error estimate is
// the Richardson difference |S_k - S_{k-1}|/15; refinement stops when it
// drops below rel_tol * |S_k| or the node cap is hit.

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace edgelab {

struct QuadratureSpec {
  double rel_tol = 0.01;
  std::size_t max_nodes = (1u << 20);
  std::size_t min_intervals = 64;
};

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
  bool converged = false;
  std::size_t nodes = 0;
};

template <typename F>
QuadratureResult simpson_adaptive(F&& f, double a, double b, QuadratureSpec spec = {}) {
  if (!(b > a)) throw std::invalid_argument("simpson_adaptive: empty interval");
  std::size_t n = spec.min_intervals;  // number of intervals, even
  if (n % 2) ++n;

  auto simpson = [&](std::size_t intervals) {
    double h = (b - a) / double(intervals);
    double s = f(a) + f(b);
    for (std::size_t i = 1; i < intervals; ++i) s += f(a + h * double(i)) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
  };

  double prev = simpson(n);
  QuadratureResult r;
  for (;;) {
    n *= 2;
    double cur = simpson(n);
    r.value = cur;
    r.nodes = n + 1;
    r.error_estimate = std::abs(cur - prev) / 15.0;
    double scale = std::max(std::abs(cur), 1e-300);
    if (r.error_estimate <= spec.rel_tol * scale) {
      r.converged = true;
      return r;
    }
    if (n + 1 >= spec.max_nodes) {
      r.converged = false;
      return r;
    }
    prev = cur;
  }
}

}  // namespace edgelab
