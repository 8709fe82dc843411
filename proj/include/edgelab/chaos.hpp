#pragma once

// Quadratic polynomials of Gaussian vectors: canonicalization via the
// symmetric eigendecomposition, robust rank, the exact characteristic
// function (product of non-central chi-squared factors), density by
// numerical inversion, and Monte Carlo small-ball estimation.
//
// Canonical form: f(Z) = a0 + sum_i (a_i W_i + lambda_i W_i^2) with
// a = Q^T f, lambda the eigenvalues of F, a0 = f0. Then
//   E f(Z) = f0 + trace(F),  sigma^2 = sum_i (a_i^2 + 2 lambda_i^2).

#include <algorithm>
#include <complex>
#include <cstdint>
#include <vector>

#include "edgelab/linalg.hpp"
#include "edgelab/parallel.hpp"
#include "edgelab/quadrature.hpp"
#include "edgelab/rng.hpp"
#include "edgelab/stats.hpp"

namespace edgelab {

struct QuadraticForm {
  Matrix F;                 // symmetric
  std::vector<double> f;    // linear part
  double f0 = 0;

  void validate() const {
    if (F.rows != F.cols || F.rows < 1) throw std::invalid_argument("QuadraticForm: bad F");
    if (static_cast<int>(f.size()) != F.rows) throw std::invalid_argument("QuadraticForm: f size");
    if (!F.is_symmetric(1e-12)) throw std::invalid_argument("QuadraticForm: F not symmetric");
  }
};

struct CanonicalChaos {
  std::vector<double> a;       // rotated linear coefficients
  std::vector<double> lambda;  // eigenvalues of F
  double a0 = 0;
  double mean = 0;             // a0 + sum lambda_i = f0 + trace(F)
  double sigma = 0;            // sigma^2 = sum (a_i^2 + 2 lambda_i^2)
};

inline CanonicalChaos canonicalize(const QuadraticForm& qf, double tol = 1e-10) {
  qf.validate();
  EigenSym es = eigen_sym(qf.F, tol);
  int n = qf.F.rows;
  CanonicalChaos c;
  c.lambda = es.values;
  c.a.resize(n);
  for (int k = 0; k < n; ++k) {
    double s = 0;
    for (int i = 0; i < n; ++i) s += es.vectors(i, k) * qf.f[i];
    c.a[k] = s;
  }
  c.a0 = qf.f0;
  double s2 = 0, tr = 0;
  for (int i = 0; i < n; ++i) {
    s2 += c.a[i] * c.a[i] + 2.0 * c.lambda[i] * c.lambda[i];
    tr += c.lambda[i];
  }
  c.mean = c.a0 + tr;
  c.sigma = std::sqrt(s2);
  return c;
}

// Squared Frobenius distance to the nearest rank-<=r matrix: the sum of the
// n-r smallest squared eigenvalues (by magnitude).
inline double eckart_young(const std::vector<double>& eigenvalues, int r) {
  int n = static_cast<int>(eigenvalues.size());
  if (r < 0 || r > n) throw std::invalid_argument("eckart_young: r out of range");
  std::vector<double> sq(n);
  for (int i = 0; i < n; ++i) sq[i] = eigenvalues[i] * eigenvalues[i];
  std::sort(sq.begin(), sq.end());
  double s = 0;
  for (int i = 0; i < n - r; ++i) s += sq[i];
  return s;
}

inline double eckart_young(const Matrix& f, int r, double tol = 1e-10) {
  return eckart_young(eigen_sym(f, tol).values, r);
}

inline double robust_rank_ratio(const Matrix& f, int r, double tol = 1e-10) {
  EigenSym es = eigen_sym(f, tol);
  double total = 0;
  for (double v : es.values) total += v * v;
  if (total == 0) return 0.0;
  return eckart_young(es.values, r) / total;
}

// |E e^{it(aW + lambda W^2)}| = exp(-a^2 t^2 / (2 + 8 lambda^2 t^2)) / (1 + 4 lambda^2 t^2)^{1/4}
inline double char_term_abs(double a, double lambda, double t) {
  double l2t2 = lambda * lambda * t * t;
  return std::exp(-a * a * t * t / (2.0 + 8.0 * l2t2)) / std::pow(1.0 + 4.0 * l2t2, 0.25);
}

// E e^{it(aW + lambda W^2)} via the non-central chi-squared formula:
// (1 - 2 i lambda t)^{-1/2} exp(-a^2 t^2 / (2 (1 - 2 i lambda t))).
// Re(1 - 2 i lambda t) = 1 > 0, so the principal square root is the branch
// continuous in t from t = 0.
inline std::complex<double> char_term(double a, double lambda, double t) {
  std::complex<double> w(1.0, -2.0 * lambda * t);
  return std::exp(-a * a * t * t / (2.0 * w)) / std::sqrt(w);
}

inline std::complex<double> char_chaos(const CanonicalChaos& c, double t) {
  std::complex<double> out = std::exp(std::complex<double>(0.0, t * c.a0));
  for (std::size_t i = 0; i < c.a.size(); ++i) out *= char_term(c.a[i], c.lambda[i], t);
  return out;
}

// ---- density by inversion ----

struct DensityResult {
  double value = 0;
  double clamp_magnitude = 0;  // how far below 0 the raw estimate was
  double tail_bound = 0;       // analytic bound on the discarded tail mass of the integral
};

namespace detail {

// Integrability certificate for |phi|: either some Gaussian factor survives
// (lambda_i = 0, a_i != 0), or at least three lambda_i are nonzero, giving
// the per-factor decay prod (1+4 lambda^2 t^2)^{-1/4} <= c t^{-3/2}.
struct TailCert {
  bool integrable = false;
  bool gaussian = false;
  double gauss_a2 = 0;      // sum of a_i^2 over pure-Gaussian factors
  double c3 = 0;            // prod over 3 largest |lambda| of (2|lambda|)^{-1/2}
};

inline TailCert tail_certificate(const CanonicalChaos& c) {
  TailCert tc;
  std::vector<double> nz;
  for (std::size_t i = 0; i < c.lambda.size(); ++i) {
    if (c.lambda[i] != 0.0)
      nz.push_back(std::abs(c.lambda[i]));
    else if (c.a[i] != 0.0) {
      tc.gaussian = true;
      tc.gauss_a2 += c.a[i] * c.a[i];
    }
  }
  std::sort(nz.rbegin(), nz.rend());
  if (tc.gaussian) {
    tc.integrable = true;
  } else if (nz.size() >= 3) {
    tc.integrable = true;
    tc.c3 = 1.0 / std::sqrt(8.0 * nz[0] * nz[1] * nz[2]);
  }
  return tc;
}

}  // namespace detail

// p_X(u) = (1/2pi) int e^{-itu} phi(t) dt, truncated where the analytic tail
// bound is below 0.1% of the Gaussian-scale peak 1/(sigma sqrt(2pi)).
inline DensityResult density_inversion(const CanonicalChaos& c, double u, QuadratureSpec spec = {}) {
  detail::TailCert tc = detail::tail_certificate(c);
  if (!tc.integrable) throw std::runtime_error("density_inversion: not-integrable");
  double peak = 1.0 / (std::max(c.sigma, 1e-12) * 2.5066282746310005);
  double budget = 1e-3 * peak * 3.141592653589793;  // allowed int_T^inf |phi|
  double T;
  if (tc.gaussian) {
    // int_T^inf e^{-A t^2/2} dt <= e^{-A T^2 / 2} / (A T)
    double A = tc.gauss_a2;
    T = 1.0 / std::sqrt(A);
    while (std::exp(-A * T * T / 2.0) / (A * T) > budget) T *= 1.25;
  } else {
    // int_T^inf c3 t^{-3/2} dt = 2 c3 / sqrt(T)
    T = std::pow(2.0 * tc.c3 / budget, 2.0);
    T = std::max(T, 1.0 / std::max(c.sigma, 1e-12));
  }
  auto integrand = [&](double t) {
    // phi(-t) = conj(phi(t)): p(u) = (1/pi) int_0^T Re(e^{-itu} phi(t)) dt
    return (std::exp(std::complex<double>(0.0, -t * u)) * char_chaos(c, t)).real();
  };
  QuadratureResult q = simpson_adaptive(integrand, 0.0, T, spec);
  if (!q.converged) throw std::runtime_error("density_inversion: quadrature-not-converged");
  DensityResult r;
  double raw = q.value / 3.141592653589793;
  r.clamp_magnitude = raw < 0 ? -raw : 0.0;
  r.value = std::max(0.0, raw);
  r.tail_bound = budget / 3.141592653589793;
  return r;
}

// ---- sampling and small ball ----

inline double sample_chaos(const CanonicalChaos& c, Rng& rng) {
  double x = c.a0;
  for (std::size_t i = 0; i < c.a.size(); ++i) {
    if (c.a[i] == 0.0 && c.lambda[i] == 0.0) continue;
    double w = rng.next_normal();
    x += c.a[i] * w + c.lambda[i] * w * w;
  }
  return x;
}

inline std::vector<double> sample_chaos_many(const CanonicalChaos& c, std::uint64_t replicas,
                                             std::uint64_t seed) {
  std::vector<double> xs(replicas);
  std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(replicas, kMcChunks));
  parallel_chunks(chunks, [&](std::size_t ch) {
    auto [lo, hi] = chunk_range(replicas, chunks, ch);
    for (std::uint64_t r = lo; r < hi; ++r) {
      Rng rng(derive_stream(seed, r));
      xs[r] = sample_chaos(c, rng);
    }
  });
  return xs;
}

struct SmallBall {
  double estimate = 0;
  Interval ci95;
};

// Monte Carlo Pr[|f(Z) - x| <= eps]. Degenerate sigma = 0 returns the
// indicator of |a0 - x| <= eps.
inline SmallBall small_ball(const CanonicalChaos& c, double x, double eps, std::uint64_t replicas,
                            std::uint64_t seed) {
  if (eps < 0 || replicas < 1) throw std::invalid_argument("small_ball: bad arguments");
  if (c.sigma == 0.0) {
    double ind = std::abs(c.a0 - x) <= eps ? 1.0 : 0.0;
    return {ind, {ind, ind}};
  }
  std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(replicas, kMcChunks));
  std::vector<std::uint64_t> hits(chunks, 0);
  parallel_chunks(chunks, [&](std::size_t ch) {
    auto [lo, hi] = chunk_range(replicas, chunks, ch);
    std::uint64_t h = 0;
    for (std::uint64_t r = lo; r < hi; ++r) {
      Rng rng(derive_stream(seed, r));
      if (std::abs(sample_chaos(c, rng) - x) <= eps) ++h;
    }
    hits[ch] = h;
  });
  std::uint64_t h = 0;
  for (auto v : hits) h += v;
  return {double(h) / double(replicas), wilson95(h, replicas)};
}

// L(f, eps) from one sorted sample: max over windows of width 2 eps.
inline double levy_from_sorted_samples(const std::vector<double>& sorted, double eps) {
  std::size_t n = sorted.size();
  std::size_t j = 0, best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (j < n && sorted[j] <= sorted[i] + 2.0 * eps) ++j;
    best = std::max(best, j - i);
  }
  return double(best) / double(n);
}

// ---- regime classification ----

enum class SmallBallRegime { Linear, CarberyWright, EpsLog, Degenerate };

struct RegimeReport {
  SmallBallRegime regime = SmallBallRegime::Degenerate;
  double slope = 0;
  double slope_se = 0;
  double log_residual_trend = 0;  // slope of (log L - log eps) vs log(1/eps)
  double rank_ratio = 0;          // robust_rank_ratio at r = 2
  std::vector<double> eps_grid;
  std::vector<double> levy_values;
};

inline RegimeReport regime_report(const CanonicalChaos& c, double eta,
                                  const std::vector<double>& eps_grid, std::uint64_t replicas,
                                  std::uint64_t seed) {
  if (!(eta > 0 && eta < 1)) throw std::invalid_argument("regime_report: eta outside (0,1)");
  RegimeReport rep;
  rep.eps_grid = eps_grid;
  if (c.sigma == 0.0) return rep;
  double tot = 0;
  for (std::size_t i = 0; i < c.lambda.size(); ++i) tot += c.lambda[i] * c.lambda[i];
  rep.rank_ratio = tot > 0 ? eckart_young(c.lambda, 2) / tot : 0.0;

  std::vector<double> xs = sample_chaos_many(c, replicas, seed);
  std::sort(xs.begin(), xs.end());
  std::vector<double> lx, le;
  for (double eps : eps_grid) {
    double l = levy_from_sorted_samples(xs, eps);
    rep.levy_values.push_back(l);
    if (l > 0) {
      lx.push_back(std::log(eps));
      le.push_back(std::log(l));
    }
  }
  if (lx.size() < 3) return rep;
  LineFit fit = fit_line(lx, le);
  rep.slope = fit.slope;
  rep.slope_se = fit.slope_se;

  // residuals from a slope-1 line, regressed against log(1/eps); an
  // eps*log(1/eps) law shows up as a positive trend
  std::vector<double> rx, ry;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    rx.push_back(-lx[i]);
    ry.push_back(le[i] - lx[i]);
  }
  rep.log_residual_trend = fit_line(rx, ry).slope;

  if (rep.slope > 0.75) {
    bool logcorr = rep.rank_ratio < eta && rep.log_residual_trend > 0.02;
    rep.regime = logcorr ? SmallBallRegime::EpsLog : SmallBallRegime::Linear;
  } else if (rep.slope > 0.3) {
    rep.regime = SmallBallRegime::CarberyWright;
  } else {
    rep.regime = SmallBallRegime::Degenerate;
  }
  return rep;
}

}  // namespace edgelab
