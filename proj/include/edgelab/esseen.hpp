#pragma once

// Esseen-type bound evaluators. The relative check uses the explicit
// constants from the smoothing-kernel proof: with f = psi-hat,
// f(t) = (2 sin t / t)^2, one gets L(X,1) <= 40 L(Y,1) + 2I where
// I = int_{-2}^{2} |phi_X - phi_Y|; rescaling t -> t/eps gives
// L(X,eps) <= 40 L(Y,eps) + 2 eps int_{-2/eps}^{2/eps} |phi_X - phi_Y| dt.

#include <complex>
#include <functional>

#include "edgelab/distribution.hpp"
#include "edgelab/quadrature.hpp"

namespace edgelab {

struct EsseenRhs {
  double value = 0;
  double error_estimate = 0;
  bool converged = false;
};

// eps * int_{-2/eps}^{2/eps} |phi(t)| dt
inline EsseenRhs esseen_rhs(const std::function<std::complex<double>(double)>& charfn, double eps,
                            QuadratureSpec spec = {}) {
  if (!(eps > 0)) throw std::invalid_argument("esseen_rhs: eps <= 0");
  auto integrand = [&](double t) { return std::abs(charfn(t)); };
  QuadratureResult q = simpson_adaptive(integrand, -2.0 / eps, 2.0 / eps, spec);
  if (!q.converged) throw std::runtime_error("esseen_rhs: quadrature-not-converged");
  return {eps * q.value, eps * q.error_estimate, q.converged};
}

// Smoothing kernel f(t) = (2 sin t / t)^2 = psi-hat with psi = 1_[-1,1] * 1_[-1,1].
inline double esseen_kernel(double t) {
  if (t == 0.0) return 4.0;
  double s = 2.0 * std::sin(t) / t;
  return s * s;
}

struct EsseenRelativeReport {
  double lhs = 0;          // L(X, eps)
  double ylevy = 0;        // L(Y, eps)
  double integral = 0;     // int_{-2/eps}^{2/eps} |phi_X - phi_Y|
  bool inequality_holds = false;
  bool kernel_ok = false;  // f(0)=4, f >= 1 on [-1,1], f <= 8/(t^2+1)
};

inline bool esseen_kernel_identities() {
  if (std::abs(esseen_kernel(0.0) - 4.0) > 1e-12) return false;
  for (int i = -1000; i <= 1000; ++i) {
    double t = i / 1000.0;
    if (esseen_kernel(t) < 1.0 - 1e-12) return false;
  }
  for (int i = -20000; i <= 20000; ++i) {
    double t = i / 200.0;
    if (esseen_kernel(t) > 8.0 / (t * t + 1.0) + 1e-12) return false;
  }
  return true;
}

inline EsseenRelativeReport esseen_relative_check(const EmpiricalDistribution& dx,
                                                  const EmpiricalDistribution& dy, double eps,
                                                  QuadratureSpec spec = {}) {
  if (!(eps > 0)) throw std::invalid_argument("esseen_relative_check: eps <= 0");
  EsseenRelativeReport rep;
  rep.lhs = levy(dx, eps);
  rep.ylevy = levy(dy, eps);
  auto integrand = [&](double t) { return std::abs(char_fn(dx, t) - char_fn(dy, t)); };
  QuadratureResult q = simpson_adaptive(integrand, -2.0 / eps, 2.0 / eps, spec);
  if (!q.converged) throw std::runtime_error("esseen_relative_check: quadrature-not-converged");
  rep.integral = q.value;
  rep.inequality_holds = rep.lhs <= 40.0 * rep.ylevy + 2.0 * eps * rep.integral + 1e-12;
  rep.kernel_ok = esseen_kernel_identities();
  return rep;
}

}  // namespace edgelab
