#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace edgelab {

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / 1.4142135623730950488); }
inline double normal_pdf(double x) { return std::exp(-0.5 * x * x) / 2.5066282746310005024; }

struct Interval {
  double lo = 0, hi = 0;
};

// Wilson 95% score interval for a binomial proportion.
inline Interval wilson95(std::uint64_t hits, std::uint64_t n) {
  if (n == 0) return {0.0, 1.0};
  const double z = 1.959963984540054;
  double p = double(hits) / double(n);
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = (p + z2 / (2.0 * n)) / denom;
  double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

struct LineFit {
  double slope = 0, intercept = 0;
  double slope_se = 0;       // standard error of the slope
  double residual_rms = 0;   // RMS of residuals
};

inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_line: need >= 2 points");
  std::size_t n = x.size();
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) sx += x[i], sy += y[i];
  double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = y[i] - (f.intercept + f.slope * x[i]);
    ss += r * r;
  }
  f.residual_rms = std::sqrt(ss / n);
  f.slope_se = (n > 2) ? std::sqrt(ss / (n - 2) / sxx) : 0.0;
  return f;
}

// Kolmogorov-Smirnov distance between a sorted sample and N(mu, sigma^2).
inline double ks_to_normal(std::vector<double> sample, double mu, double sigma) {
  if (sample.empty() || sigma <= 0) throw std::invalid_argument("ks_to_normal");
  std::sort(sample.begin(), sample.end());
  double n = double(sample.size());
  double ks = 0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    double f = normal_cdf((sample[i] - mu) / sigma);
    ks = std::max(ks, std::abs(f - (i + 1) / n));
    ks = std::max(ks, std::abs(f - i / n));
  }
  return ks;
}

inline double log_binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) - std::lgamma(double(n - k) + 1);
}

// Exact Binomial(n,p) CDF by direct summation (small n).
inline double binom_cdf(std::uint64_t n, double p, std::uint64_t k) {
  double s = 0;
  for (std::uint64_t j = 0; j <= std::min(k, n); ++j)
    s += std::exp(log_binom(n, j) + j * std::log(p) + double(n - j) * std::log1p(-p));
  return std::min(1.0, s);
}

struct Moments {
  double mean = 0, var = 0, skew = 0;
  std::size_t n = 0;
};

inline Moments sample_moments(const std::vector<double>& xs) {
  Moments m;
  m.n = xs.size();
  if (m.n == 0) return m;
  double s = 0;
  for (double x : xs) s += x;
  m.mean = s / m.n;
  double s2 = 0, s3 = 0;
  for (double x : xs) {
    double d = x - m.mean;
    s2 += d * d;
    s3 += d * d * d;
  }
  m.var = s2 / m.n;
  double sd = std::sqrt(m.var);
  m.skew = sd > 0 ? (s3 / m.n) / (sd * sd * sd) : 0.0;
  return m;
}

}  // namespace edgelab
