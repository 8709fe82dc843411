#pragma once

// Fourier-Walsh decomposition of X = e(G[U]) + sum_{v in U} e_v + e0 over
// x_v = +-1 variables:
//   X = EX + (1/2) sum_v (e_v + deg(v)/2) x_v + (1/4) sum_{uv in E} x_u x_v
// with EX = e0 + e(G)/4 + (1/2) sum_v e_v and the closed-form variance
//   sigma^2 = (1/4)||d||_2^2 + e(G)/16,   d_v = e_v + deg(v)/2.

#include <utility>
#include <vector>

#include "edgelab/graph.hpp"

namespace edgelab {

struct WalshDecomposition {
  double mean = 0;                           // EX
  std::vector<double> linear;                // coefficient of x_v: d_v / 2
  std::vector<std::pair<int, int>> quad;     // edges, each with coefficient 1/4
  double quad_coeff = 0.25;
  double sigma2 = 0;                         // (1/4)||d||^2 + e(G)/16
};

inline WalshDecomposition walsh_decompose(const Graph& g) {
  WalshDecomposition w;
  double wsum = 0;
  for (long long x : g.e_weights()) wsum += double(x);
  w.mean = double(g.e0()) + double(g.edge_count()) / 4.0 + 0.5 * wsum;
  std::vector<double> d = degree_profile(g);
  w.linear.resize(g.n());
  double d2 = 0;
  for (int v = 0; v < g.n(); ++v) {
    w.linear[v] = 0.5 * d[v];
    d2 += d[v] * d[v];
  }
  for (int u = 0; u < g.n(); ++u)
    g.neighbors(u).for_each([&](std::size_t v) {
      if (static_cast<int>(v) > u) w.quad.emplace_back(u, static_cast<int>(v));
    });
  w.sigma2 = 0.25 * d2 + double(g.edge_count()) / 16.0;
  return w;
}

}  // namespace edgelab
