#pragma once

// Integer-keyed empirical/exact distributions of X, Monte Carlo sampling,
// characteristic-function and Levy-concentration queries.

#include <complex>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "edgelab/graph.hpp"
#include "edgelab/parallel.hpp"
#include "edgelab/stats.hpp"

namespace edgelab {

class EmpiricalDistribution {
 public:
  void add(long long x, double mass = 1.0) {
    mass_[x] += mass;
    total_ += mass;
  }

  void merge(const EmpiricalDistribution& o) {
    for (const auto& [x, m] : o.mass_) mass_[x] += m;
    total_ += o.total_;
  }

  double total() const { return total_; }
  std::size_t support_size() const { return mass_.size(); }
  const std::map<long long, double>& masses() const { return mass_; }

  double prob(long long x) const {
    auto it = mass_.find(x);
    return it == mass_.end() ? 0.0 : it->second / total_;
  }

  double max_point_prob() const {
    double m = 0;
    for (const auto& [x, v] : mass_) m = std::max(m, v);
    return total_ > 0 ? m / total_ : 0.0;
  }

  // Pr[lo <= X <= hi] with real bounds (the real-shift query path).
  double interval_prob(double lo, double hi) const {
    if (total_ <= 0 || lo > hi) return 0.0;
    double s = 0;
    auto it = mass_.lower_bound(static_cast<long long>(std::ceil(lo)));
    for (; it != mass_.end() && it->first <= hi; ++it) s += it->second;
    return s / total_;
  }

  double mean() const {
    double s = 0;
    for (const auto& [x, m] : mass_) s += double(x) * m;
    return total_ > 0 ? s / total_ : 0.0;
  }

  double variance() const {
    double mu = mean(), s = 0;
    for (const auto& [x, m] : mass_) s += (x - mu) * (x - mu) * m;
    return total_ > 0 ? s / total_ : 0.0;
  }

  long long min_support() const { return mass_.empty() ? 0 : mass_.begin()->first; }
  long long max_support() const { return mass_.empty() ? 0 : mass_.rbegin()->first; }

  long long mode() const {
    long long arg = 0;
    double best = -1;
    for (const auto& [x, m] : mass_)
      if (m > best) best = m, arg = x;
    return arg;
  }

 private:
  std::map<long long, double> mass_;
  double total_ = 0;
};

// phi_X(t) = E e^{itX}
inline std::complex<double> char_fn(const EmpiricalDistribution& d, double t) {
  std::complex<double> s{0, 0};
  for (const auto& [x, m] : d.masses()) s += m * std::exp(std::complex<double>(0.0, t * double(x)));
  return s / d.total();
}

// Levy concentration L(X, eps) = sup_x Pr[|X - x| <= eps]. X has integer
// support, so the sup over real centers is attained at an integer center and
// reduces to a max over windows of radius floor(eps).
inline double levy(const EmpiricalDistribution& d, double eps) {
  if (eps < 0) throw std::invalid_argument("levy: eps < 0");
  long long r = static_cast<long long>(std::floor(eps));
  const auto& m = d.masses();
  std::vector<std::pair<long long, double>> v(m.begin(), m.end());
  double best = 0;
  std::size_t j = 0;
  double window = 0;
  for (std::size_t i = 0, k = 0; i < v.size(); ++i) {
    // window of keys in [v[i].first, v[i].first + 2r]
    while (j < v.size() && v[j].first <= v[i].first + 2 * r) window += v[j++].second;
    while (k < i) window -= v[k++].second;
    best = std::max(best, window);
  }
  return d.total() > 0 ? best / d.total() : 0.0;
}

// ---- exact distributions (small n) ----

namespace detail {
// Gray-code walk over all subsets of 0..n-1, calling visit(X, popcount)
// at every subset. X is maintained incrementally.
template <typename Visit>
void gray_walk(const Graph& g, Visit&& visit) {
  int n = g.n();
  VertexSubset u(n);
  long long x = g.e0();
  int pc = 0;
  visit(x, pc);
  std::uint64_t total = 1ULL << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    int b = std::countr_zero(i);
    if (u.contains(b)) {
      x += eval_X_delta(g, u, b, ToggleDir::Remove);
      u.remove(b);
      --pc;
    } else {
      x += eval_X_delta(g, u, b, ToggleDir::Add);
      u.add(b);
      ++pc;
    }
    visit(x, pc);
  }
}
}  // namespace detail

// Exact distribution of X under the law. Bernoulli requires n <= 24;
// Slice(k) requires C(n,k) <= 2^24; ProductOfSlices requires the product of
// the per-part counts to stay below 2^24.
inline EmpiricalDistribution exact_pmf(const Graph& g, const SubsetLaw& law) {
  validate_law(law, g.n());
  EmpiricalDistribution out;
  int n = g.n();
  if (std::holds_alternative<BernoulliLaw>(law)) {
    if (n > 24) throw std::runtime_error("exact_pmf: size-exceeded (n > 24)");
    double p = std::get<BernoulliLaw>(law).p;
    std::vector<double> wk(n + 1);
    for (int k = 0; k <= n; ++k)
      wk[k] = std::pow(p, k) * std::pow(1.0 - p, n - k);
    detail::gray_walk(g, [&](long long x, int pc) { out.add(x, wk[pc]); });
    return out;
  }
  if (std::holds_alternative<SliceLaw>(law)) {
    int k = std::get<SliceLaw>(law).k;
    if (log_binom(n, k) > 24 * std::log(2.0) + 1e-9)
      throw std::runtime_error("exact_pmf: size-exceeded (C(n,k) > 2^24)");
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    VertexSubset u(n);
    for (;;) {
      u.members.clear();
      u.size = 0;
      for (int i : idx) u.add(i);
      out.add(eval_X(g, u), 1.0);
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
  }
  const auto& ps = std::get<ProductOfSlicesLaw>(law);
  double logtotal = 0;
  for (std::size_t j = 0; j < ps.parts.size(); ++j)
    logtotal += log_binom(ps.parts[j].size(), ps.counts[j]);
  if (logtotal > 24 * std::log(2.0) + 1e-9)
    throw std::runtime_error("exact_pmf: size-exceeded (product of slices > 2^24)");
  VertexSubset u(n);
  std::vector<std::vector<int>> idx(ps.parts.size());
  // recursive enumeration over parts
  auto rec = [&](auto&& self, std::size_t part) -> void {
    if (part == ps.parts.size()) {
      out.add(eval_X(g, u), 1.0);
      return;
    }
    const auto& pp = ps.parts[part];
    int k = ps.counts[part];
    std::vector<int>& id = idx[part];
    id.resize(k);
    for (int i = 0; i < k; ++i) id[i] = i;
    for (;;) {
      for (int i : id) u.add(pp[i]);
      self(self, part + 1);
      for (int i : id) u.remove(pp[i]);
      int i = k - 1;
      int m = static_cast<int>(pp.size());
      while (i >= 0 && id[i] == m - k + i) --i;
      if (i < 0) break;
      ++id[i];
      for (int j = i + 1; j < k; ++j) id[j] = id[j - 1] + 1;
    }
  };
  rec(rec, 0);
  return out;
}

// ---- Monte Carlo ----

// Histogram of eval_X over independent subsets. Replica r always uses the
// stream derive_stream(seed, r), and chunk results are merged by commutative
// integer addition, so the output is independent of the worker count.
inline EmpiricalDistribution mc_distribution(const Graph& g, const SubsetLaw& law,
                                             std::uint64_t replicas, std::uint64_t seed) {
  if (replicas < 1) throw std::invalid_argument("mc_distribution: replicas < 1");
  validate_law(law, g.n());
  std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(replicas, kMcChunks));
  std::vector<std::unordered_map<long long, std::uint64_t>> part(chunks);
  parallel_chunks(chunks, [&](std::size_t c) {
    auto [lo, hi] = chunk_range(replicas, chunks, c);
    auto& h = part[c];
    for (std::uint64_t r = lo; r < hi; ++r) {
      VertexSubset u = sample_subset(g, law, derive_stream(seed, r));
      ++h[eval_X(g, u)];
    }
  });
  EmpiricalDistribution out;
  for (std::size_t c = 0; c < chunks; ++c)
    for (const auto& [x, cnt] : part[c]) out.add(x, double(cnt));
  return out;
}

// Real-weight evaluation path (interval probabilities only; X need not be
// integer-valued here, so no histogram is built).
inline double eval_X_real(const Graph& g, const VertexSubset& u,
                          const std::vector<double>& rweights, double r0) {
  long long twice_edges = 0;
  double wsum = 0;
  u.members.for_each([&](std::size_t v) {
    twice_edges += static_cast<long long>(g.neighbors(static_cast<int>(v)).and_count(u.members));
    wsum += rweights[v];
  });
  return double(twice_edges / 2) + wsum + r0;
}

struct IntervalEstimate {
  double estimate = 0;
  Interval ci95;
};

inline IntervalEstimate mc_interval_prob_real(const Graph& g, const SubsetLaw& law,
                                              const std::vector<double>& rweights, double r0,
                                              double lo, double hi, std::uint64_t replicas,
                                              std::uint64_t seed) {
  if (static_cast<int>(rweights.size()) != g.n())
    throw std::invalid_argument("mc_interval_prob_real: weight size");
  std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(replicas, kMcChunks));
  std::vector<std::uint64_t> hits(chunks, 0);
  parallel_chunks(chunks, [&](std::size_t c) {
    auto [a, b] = chunk_range(replicas, chunks, c);
    std::uint64_t h = 0;
    for (std::uint64_t r = a; r < b; ++r) {
      VertexSubset u = sample_subset(g, law, derive_stream(seed, r));
      double x = eval_X_real(g, u, rweights, r0);
      if (x >= lo && x <= hi) ++h;
    }
    hits[c] = h;
  });
  std::uint64_t h = 0;
  for (auto x : hits) h += x;
  IntervalEstimate e;
  e.estimate = double(h) / double(replicas);
  e.ci95 = wilson95(h, replicas);
  return e;
}

}  // namespace edgelab
