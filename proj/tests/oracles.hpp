#pragma once

// Test-only oracles. These are intentionally independent of the library
// code paths they are used to check (the only shared dependency is the
// symmetric eigensolver, which has its own closed-form unit tests).

#include <complex>
#include <vector>

#include "edgelab/linalg.hpp"

namespace oracle {

struct GaussHermite {
  std::vector<double> nodes;    // for weight e^{-x^2}
  std::vector<double> weights;
};

// Golub-Welsch: nodes/weights from the symmetric tridiagonal Jacobi matrix
// with off-diagonals sqrt(k/2); mu0 = sqrt(pi).
inline GaussHermite gauss_hermite(int n) {
  edgelab::Matrix j(n, n);
  for (int k = 1; k < n; ++k) j(k - 1, k) = j(k, k - 1) = std::sqrt(k / 2.0);
  edgelab::EigenSym es = edgelab::eigen_sym(j, 1e-13);
  GaussHermite gh;
  gh.nodes.resize(n);
  gh.weights.resize(n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return es.values[a] < es.values[b]; });
  const double sqrt_pi = 1.7724538509055160273;
  for (int i = 0; i < n; ++i) {
    int k = order[i];
    gh.nodes[i] = es.values[k];
    double v0 = es.vectors(0, k);
    gh.weights[i] = sqrt_pi * v0 * v0;
  }
  return gh;
}

// E[g(W)] for W ~ N(0,1): (1/sqrt(pi)) sum w_i g(sqrt(2) x_i)
template <typename G>
auto gauss_expectation(const GaussHermite& gh, G&& g) -> decltype(g(0.0)) {
  decltype(g(0.0)) s{};
  for (std::size_t i = 0; i < gh.nodes.size(); ++i)
    s += gh.weights[i] * g(1.4142135623730950488 * gh.nodes[i]);
  return s / 1.7724538509055160273;
}

// |E exp(it (a W + lambda W^2))| by quadrature.
inline double abs_char_quadrature(const GaussHermite& gh, double a, double lambda, double t) {
  auto g = [&](double w) {
    return std::exp(std::complex<double>(0.0, t * (a * w + lambda * w * w)));
  };
  return std::abs(gauss_expectation(gh, g));
}

}  // namespace oracle
