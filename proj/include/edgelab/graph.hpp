#pragma once

// Graph core: bitset-adjacency graphs, generators, random subset laws, and
// the edge-statistic X(U) = e(G[U]) + sum_{v in U} e_v + e0 with O(n/64)
// single-vertex deltas.

#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "edgelab/bitset.hpp"
#include "edgelab/rng.hpp"

namespace edgelab {

class Graph {
 public:
  Graph() : n_(0), e0_(0), edges_(0) {}
  explicit Graph(int n) : n_(n), adj_(n, Bitset(n)), ew_(n, 0), e0_(0), edges_(0) {
    if (n < 0) throw std::invalid_argument("Graph: negative n");
  }

  int n() const { return n_; }
  long long e0() const { return e0_; }
  void set_e0(long long v) { e0_ = v; }

  const std::vector<long long>& e_weights() const { return ew_; }
  void set_e_weight(int v, long long w) {
    if (w < 0) throw std::invalid_argument("Graph: negative vertex weight");
    ew_.at(v) = w;
  }
  void set_e_weights(std::vector<long long> w) {
    if (static_cast<int>(w.size()) != n_) throw std::invalid_argument("Graph: weight size");
    for (long long x : w)
      if (x < 0) throw std::invalid_argument("Graph: negative vertex weight");
    ew_ = std::move(w);
  }

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("Graph: loop");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("Graph: vertex range");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++edges_;
  }

  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  const Bitset& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].count()); }
  long long edge_count() const { return edges_; }

  Graph complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (!has_edge(u, v)) g.add_edge(u, v);
    g.ew_ = ew_;
    g.e0_ = e0_;
    return g;
  }

 private:
  int n_;
  std::vector<Bitset> adj_;
  std::vector<long long> ew_;
  long long e0_;
  long long edges_;
};

struct VertexSubset {
  Bitset members;
  int size = 0;

  VertexSubset() = default;
  explicit VertexSubset(int n) : members(n) {}

  bool contains(int v) const { return members.test(v); }
  void add(int v) {
    if (!members.test(v)) {
      members.set(v);
      ++size;
    }
  }
  void remove(int v) {
    if (members.test(v)) {
      members.reset(v);
      --size;
    }
  }
};

// ---- subset laws ----

struct BernoulliLaw {
  double p;
};
struct SliceLaw {
  int k;
};
struct ProductOfSlicesLaw {
  std::vector<std::vector<int>> parts;  // disjoint, covering 0..n-1
  std::vector<int> counts;              // 0 <= counts[j] <= |parts[j]|
};

using SubsetLaw = std::variant<BernoulliLaw, SliceLaw, ProductOfSlicesLaw>;

inline void validate_law(const SubsetLaw& law, int n) {
  if (std::holds_alternative<BernoulliLaw>(law)) {
    double p = std::get<BernoulliLaw>(law).p;
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("Bernoulli p outside [0,1]");
  } else if (std::holds_alternative<SliceLaw>(law)) {
    int k = std::get<SliceLaw>(law).k;
    if (k < 0 || k > n) throw std::invalid_argument("Slice k outside [0,n]");
  } else {
    const auto& ps = std::get<ProductOfSlicesLaw>(law);
    if (ps.parts.size() != ps.counts.size()) throw std::invalid_argument("ProductOfSlices: sizes");
    std::vector<char> seen(n, 0);
    for (std::size_t j = 0; j < ps.parts.size(); ++j) {
      if (ps.counts[j] < 0 || ps.counts[j] > static_cast<int>(ps.parts[j].size()))
        throw std::invalid_argument("ProductOfSlices: count out of range");
      for (int v : ps.parts[j]) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("ProductOfSlices: bad partition");
        seen[v] = 1;
      }
    }
    for (int v = 0; v < n; ++v)
      if (!seen[v]) throw std::invalid_argument("ProductOfSlices: partition does not cover");
  }
}

// ---- generators ----

inline Graph gen_erdos_renyi(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_erdos_renyi: p outside [0,1]");
  Graph g(n);
  Rng rng(derive_stream(seed, 0x4752415048ULL));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_bernoulli(p)) g.add_edge(u, v);
  return g;
}

inline bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// Paley graph on a prime q = 1 (mod 4): i ~ j iff i-j is a nonzero QR mod q.
inline Graph gen_paley(long long q) {
  if (!is_prime(q) || q % 4 != 1) throw std::invalid_argument("gen_paley: need prime q = 1 mod 4");
  std::vector<char> is_qr(q, 0);
  for (long long x = 1; x < q; ++x) is_qr[(x * x) % q] = 1;
  Graph g(static_cast<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      if (is_qr[(j - i) % q]) g.add_edge(i, j);
  return g;
}

inline Graph gen_disjoint_union(const Graph& g1, const Graph& g2) {
  Graph g(g1.n() + g2.n());
  for (int u = 0; u < g1.n(); ++u) {
    g1.neighbors(u).for_each([&](std::size_t v) {
      if (static_cast<int>(v) > u) g.add_edge(u, static_cast<int>(v));
    });
    g.set_e_weight(u, g1.e_weights()[u]);
  }
  int off = g1.n();
  for (int u = 0; u < g2.n(); ++u) {
    g2.neighbors(u).for_each([&](std::size_t v) {
      if (static_cast<int>(v) > u) g.add_edge(u + off, static_cast<int>(v) + off);
    });
    g.set_e_weight(u + off, g2.e_weights()[u]);
  }
  g.set_e0(g1.e0() + g2.e0());
  return g;
}

inline Graph gen_complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph gen_path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph gen_cycle(int n) {
  Graph g = gen_path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

// Circulant (n/2)-regular graph: i ~ i +- 1..n/4 (mod n); needs n = 0 mod 4.
inline Graph gen_half_regular_circulant(int n) {
  if (n % 4 != 0) throw std::invalid_argument("gen_half_regular_circulant: need n = 0 mod 4");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int d = 1; d <= n / 4; ++d) {
      int j = (i + d) % n;
      if (i < j)
        g.add_edge(i, j);
      else
        g.add_edge(j, i);
    }
  return g;
}

// Inhomogeneous random graph on index set {m/4,...,3m/4}: edge ij present
// with probability (i*j)/m^2.
inline Graph gen_inhomogeneous(int m, std::uint64_t seed) {
  int lo = m / 4, hi = 3 * m / 4;
  int n = hi - lo + 1;
  Graph g(n);
  Rng rng(derive_stream(seed, 0x494E484F4DULL));
  double m2 = double(m) * double(m);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      double p = double(a + lo) * double(b + lo) / m2;
      if (rng.next_bernoulli(p)) g.add_edge(a, b);
    }
  return g;
}

// ---- X evaluation ----

// X = e(G[U]) + sum_{v in U} e_v + e0
inline long long eval_X(const Graph& g, const VertexSubset& u) {
  if (static_cast<int>(u.members.size()) != g.n()) throw std::invalid_argument("eval_X: size mismatch");
  long long twice_edges = 0;
  long long wsum = 0;
  u.members.for_each([&](std::size_t v) {
    twice_edges += static_cast<long long>(g.neighbors(static_cast<int>(v)).and_count(u.members));
    wsum += g.e_weights()[v];
  });
  return twice_edges / 2 + wsum + g.e0();
}

enum class ToggleDir { Add, Remove };

// X(U') - X(U) for U' = U toggle v. Equals +-(deg_{U \ {v}}(v) + e_v).
inline long long eval_X_delta(const Graph& g, const VertexSubset& u, int v, ToggleDir dir) {
  bool in = u.contains(v);
  if (dir == ToggleDir::Add && in) throw std::invalid_argument("eval_X_delta: v already in U");
  if (dir == ToggleDir::Remove && !in) throw std::invalid_argument("eval_X_delta: v not in U");
  long long d = static_cast<long long>(g.neighbors(v).and_count(u.members)) + g.e_weights()[v];
  return dir == ToggleDir::Add ? d : -d;
}

// ---- subset sampling ----

namespace detail {
// Writes a uniform k-subset of part[] into out (partial Fisher-Yates).
inline void sample_k_of(const std::vector<int>& part, int k, Rng& rng, VertexSubset& out,
                        std::vector<int>& scratch) {
  scratch.assign(part.begin(), part.end());
  int m = static_cast<int>(scratch.size());
  for (int i = 0; i < k; ++i) {
    int j = i + static_cast<int>(rng.next_below(m - i));
    std::swap(scratch[i], scratch[j]);
    out.add(scratch[i]);
  }
}
}  // namespace detail

inline VertexSubset sample_subset(const Graph& g, const SubsetLaw& law, std::uint64_t seed) {
  validate_law(law, g.n());
  VertexSubset u(g.n());
  Rng rng(derive_stream(seed, 0x5355425345ULL));
  if (std::holds_alternative<BernoulliLaw>(law)) {
    double p = std::get<BernoulliLaw>(law).p;
    for (int v = 0; v < g.n(); ++v)
      if (rng.next_bernoulli(p)) u.add(v);
  } else if (std::holds_alternative<SliceLaw>(law)) {
    int k = std::get<SliceLaw>(law).k;
    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> scratch;
    detail::sample_k_of(all, k, rng, u, scratch);
  } else {
    const auto& ps = std::get<ProductOfSlicesLaw>(law);
    std::vector<int> scratch;
    for (std::size_t j = 0; j < ps.parts.size(); ++j)
      detail::sample_k_of(ps.parts[j], ps.counts[j], rng, u, scratch);
  }
  return u;
}

// d_v = e_v + deg(v)/2
inline std::vector<double> degree_profile(const Graph& g) {
  std::vector<double> d(g.n());
  for (int v = 0; v < g.n(); ++v) d[v] = double(g.e_weights()[v]) + 0.5 * g.degree(v);
  return d;
}

// ---- text format ----
// line 1: "n m", then m lines "u v" (lexicographically sorted, u < v),
// then optional "weights" block with n integers and "e0" with one integer.

inline void write_graph(std::ostream& os, const Graph& g) {
  os << g.n() << ' ' << g.edge_count() << '\n';
  for (int u = 0; u < g.n(); ++u)
    g.neighbors(u).for_each([&](std::size_t v) {
      if (static_cast<int>(v) > u) os << u << ' ' << v << '\n';
    });
  bool any_w = false;
  for (long long w : g.e_weights()) any_w |= (w != 0);
  if (any_w || g.e0() != 0) {
    os << "weights\n";
    for (int v = 0; v < g.n(); ++v) os << g.e_weights()[v] << (v + 1 == g.n() ? '\n' : ' ');
    if (g.n() == 0) os << '\n';
    os << "e0\n" << g.e0() << '\n';
  }
}

inline Graph read_graph(std::istream& is) {
  int n;
  long long m;
  if (!(is >> n >> m)) throw std::runtime_error("read_graph: bad header");
  Graph g(n);
  for (long long i = 0; i < m; ++i) {
    int u, v;
    if (!(is >> u >> v)) throw std::runtime_error("read_graph: bad edge line");
    if (!(0 <= u && u < v && v < n)) throw std::runtime_error("read_graph: edge out of order");
    g.add_edge(u, v);
  }
  std::string tok;
  if (is >> tok) {
    if (tok != "weights") throw std::runtime_error("read_graph: expected 'weights'");
    std::vector<long long> w(n);
    for (int v = 0; v < n; ++v)
      if (!(is >> w[v])) throw std::runtime_error("read_graph: bad weight");
    g.set_e_weights(std::move(w));
    if (!(is >> tok) || tok != "e0") throw std::runtime_error("read_graph: expected 'e0'");
    long long e0;
    if (!(is >> e0)) throw std::runtime_error("read_graph: bad e0");
    g.set_e0(e0);
  }
  return g;
}

}  // namespace edgelab
