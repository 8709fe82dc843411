#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "edgelab/distribution.hpp"
#include "edgelab/graph.hpp"

using namespace edgelab;

namespace {

// Naive reference: double loop over all pairs.
long long eval_X_naive(const Graph& g, const VertexSubset& u) {
  long long x = g.e0();
  for (int a = 0; a < g.n(); ++a) {
    if (!u.contains(a)) continue;
    x += g.e_weights()[a];
    for (int b = a + 1; b < g.n(); ++b)
      if (u.contains(b) && g.has_edge(a, b)) ++x;
  }
  return x;
}

VertexSubset make_subset(int n, std::initializer_list<int> vs) {
  VertexSubset u(n);
  for (int v : vs) u.add(v);
  return u;
}

}  // namespace

TEST_CASE("erdos-renyi endpoints") {
  Graph k4 = gen_erdos_renyi(4, 1.0, 7);
  REQUIRE(k4.edge_count() == 6);
  Graph e4 = gen_erdos_renyi(4, 0.0, 7);
  REQUIRE(e4.edge_count() == 0);
  REQUIRE_THROWS_AS(gen_erdos_renyi(4, 1.5, 7), std::invalid_argument);
}

TEST_CASE("erdos-renyi edge count tail") {
  // Oracle audit at small n: the 4-sigma two-sided binomial tail mass is
  // tiny, checked against the exact CDF.
  {
    std::uint64_t N = 20 * 19 / 2;
    double p = 0.8, mu = N * p, sd = std::sqrt(N * p * (1 - p));
    double lo_mass = binom_cdf(N, p, static_cast<std::uint64_t>(mu - 4 * sd));
    double hi_mass = 1.0 - binom_cdf(N, p, static_cast<std::uint64_t>(mu + 4 * sd));
    REQUIRE(lo_mass + hi_mass < 1e-3);
  }
  const int n = 1000;
  const double p = 0.8;
  double pairs = double(n) * (n - 1) / 2;
  double tol = 4.0 * std::sqrt(0.16 * pairs);
  int bad = 0, seeds = 120;
  for (int s = 0; s < seeds; ++s) {
    Graph g = gen_erdos_renyi(n, p, 1000 + s);
    if (std::abs(double(g.edge_count()) - p * pairs) > tol) ++bad;
  }
  REQUIRE(double(bad) / seeds <= 0.01);
}

TEST_CASE("paley graphs") {
  Graph p5 = gen_paley(5);
  REQUIRE(p5.edge_count() == 5);
  for (int v = 0; v < 5; ++v) REQUIRE(p5.degree(v) == 2);
  // brute-force residues mod 5: {1,4}
  REQUIRE(p5.has_edge(0, 1));
  REQUIRE(p5.has_edge(0, 4));
  REQUIRE(!p5.has_edge(0, 2));

  Graph p13 = gen_paley(13);
  REQUIRE(p13.edge_count() == 39);
  for (int v = 0; v < 13; ++v) REQUIRE(p13.degree(v) == 6);

  REQUIRE_THROWS_AS(gen_paley(4), std::invalid_argument);
  REQUIRE_THROWS_AS(gen_paley(7), std::invalid_argument);
}

TEST_CASE("paley strongly regular: A commutes with complement's") {
  for (long long q : {5LL, 13LL, 17LL}) {
    Graph g = gen_paley(q);
    Graph h = g.complement();
    int n = g.n();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long long ab = 0, ba = 0;
        for (int k = 0; k < n; ++k) {
          ab += (g.has_edge(i, k) ? 1 : 0) * (h.has_edge(k, j) ? 1 : 0);
          ba += (h.has_edge(i, k) ? 1 : 0) * (g.has_edge(k, j) ? 1 : 0);
        }
        REQUIRE(ab == ba);
      }
  }
}

TEST_CASE("disjoint union") {
  Graph k3 = gen_complete(3);
  Graph u = gen_disjoint_union(k3, k3);
  REQUIRE(u.n() == 6);
  REQUIRE(u.edge_count() == 6);
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) REQUIRE(!u.has_edge(a, b));

  Graph e5(5);
  Graph e10 = gen_disjoint_union(e5, e5);
  REQUIRE(e10.n() == 10);
  REQUIRE(e10.edge_count() == 0);

  Graph a = gen_erdos_renyi(150, 0.96, 3), b = gen_erdos_renyi(150, 0.96, 4);
  Graph ab = gen_disjoint_union(a, b);
  REQUIRE(ab.edge_count() == a.edge_count() + b.edge_count());
}

TEST_CASE("eval_X examples") {
  Graph k3 = gen_complete(3);
  REQUIRE(eval_X(k3, make_subset(3, {0, 1, 2})) == 3);

  Graph path = gen_path(3);
  REQUIRE(eval_X(path, make_subset(3, {0, 2})) == 0);

  Graph c5 = gen_cycle(5);
  REQUIRE(eval_X(c5, make_subset(5, {0, 1, 2})) == 2);
}

TEST_CASE("eval_X equals naive double loop") {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(60));
    Graph g = gen_erdos_renyi(n, 0.4, 100 + trial);
    for (int v = 0; v < n; ++v) g.set_e_weight(v, rng.next_below(5));
    g.set_e0(static_cast<long long>(rng.next_below(9)) - 4);
    VertexSubset u(n);
    for (int v = 0; v < n; ++v)
      if (rng.next_bernoulli(0.5)) u.add(v);
    REQUIRE(eval_X(g, u) == eval_X_naive(g, u));
  }
}

TEST_CASE("eval_X_delta") {
  Graph k3 = gen_complete(3);
  k3.set_e_weight(2, 5);
  VertexSubset u = make_subset(3, {0, 1});
  REQUIRE(eval_X_delta(k3, u, 2, ToggleDir::Add) == 2 + 5);

  Graph e4(4);
  e4.set_e_weight(1, 7);
  VertexSubset v = make_subset(4, {0});
  REQUIRE(eval_X_delta(e4, v, 1, ToggleDir::Add) == 7);

  REQUIRE_THROWS_AS(eval_X_delta(k3, u, 0, ToggleDir::Add), std::invalid_argument);
  REQUIRE_THROWS_AS(eval_X_delta(k3, u, 2, ToggleDir::Remove), std::invalid_argument);
}

TEST_CASE("toggle consistency over random sequences") {
  Rng rng(77);
  Graph g = gen_erdos_renyi(48, 0.5, 5);
  for (int v = 0; v < g.n(); ++v) g.set_e_weight(v, rng.next_below(4));
  VertexSubset u(g.n());
  long long x = eval_X(g, u);
  for (int step = 0; step < 400; ++step) {
    int v = static_cast<int>(rng.next_below(g.n()));
    ToggleDir dir = u.contains(v) ? ToggleDir::Remove : ToggleDir::Add;
    x += eval_X_delta(g, u, v, dir);
    if (dir == ToggleDir::Add)
      u.add(v);
    else
      u.remove(v);
    REQUIRE(x == eval_X(g, u));
  }
}

TEST_CASE("sample_subset laws") {
  Graph g(20);
  VertexSubset full = sample_subset(g, SliceLaw{20}, 1);
  REQUIRE(full.size == 20);
  VertexSubset none = sample_subset(g, SliceLaw{0}, 1);
  REQUIRE(none.size == 0);

  // Bernoulli(1/2) inclusion frequencies over many draws
  const std::uint64_t draws = 1000000;
  std::vector<std::uint64_t> freq(20, 0);
  for (std::uint64_t r = 0; r < draws; ++r) {
    VertexSubset u = sample_subset(g, BernoulliLaw{0.5}, derive_stream(9, r));
    u.members.for_each([&](std::size_t v) { ++freq[v]; });
  }
  for (int v = 0; v < 20; ++v) REQUIRE(std::abs(double(freq[v]) / draws - 0.5) < 0.005);

  // product of slices hits the exact per-part counts
  ProductOfSlicesLaw ps{{{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}, {10, 11, 12, 13, 14, 15, 16, 17, 18, 19}},
                        {2, 0, 7}};
  VertexSubset u = sample_subset(g, ps, 3);
  int c0 = 0, c1 = 0, c2 = 0;
  u.members.for_each([&](std::size_t v) {
    if (v < 5)
      ++c0;
    else if (v < 10)
      ++c1;
    else
      ++c2;
  });
  REQUIRE(c0 == 2);
  REQUIRE(c1 == 0);
  REQUIRE(c2 == 7);

  REQUIRE_THROWS_AS(sample_subset(g, SliceLaw{21}, 0), std::invalid_argument);
}

TEST_CASE("slice sampling is uniform over patterns") {
  // m=1, n=4, l=2: each of the 6 patterns with frequency 1/6 +- 0.003
  Graph g(4);
  std::map<std::vector<int>, std::uint64_t> counts;
  const std::uint64_t draws = 1000000;
  for (std::uint64_t r = 0; r < draws; ++r) {
    VertexSubset u = sample_subset(g, SliceLaw{2}, derive_stream(4242, r));
    counts[u.members.to_vector()]++;
  }
  REQUIRE(counts.size() == 6);
  for (const auto& [pat, c] : counts)
    REQUIRE(std::abs(double(c) / draws - 1.0 / 6.0) < 0.003);
}

TEST_CASE("reproducibility: same seed, same object") {
  Graph a = gen_erdos_renyi(200, 0.3, 123), b = gen_erdos_renyi(200, 0.3, 123);
  REQUIRE(a.edge_count() == b.edge_count());
  for (int u = 0; u < 200; ++u)
    for (int v = u + 1; v < 200; ++v) REQUIRE(a.has_edge(u, v) == b.has_edge(u, v));

  VertexSubset s1 = sample_subset(a, SliceLaw{70}, 99);
  VertexSubset s2 = sample_subset(a, SliceLaw{70}, 99);
  REQUIRE(s1.members == s2.members);
}

TEST_CASE("degree_profile") {
  Graph k2 = gen_complete(2);
  auto d = degree_profile(k2);
  REQUIRE(d[0] == 0.5);
  REQUIRE(d[1] == 0.5);

  Graph c5 = gen_cycle(5);
  c5.set_e_weight(0, 1);
  auto dc = degree_profile(c5);
  REQUIRE(dc[0] == 2.0);
  for (int v = 1; v < 5; ++v) REQUIRE(dc[v] == 1.0);

  Graph reg = gen_half_regular_circulant(16);
  auto dr = degree_profile(reg);
  for (int v = 0; v < 16; ++v) REQUIRE(dr[v] == 4.0);
}

TEST_CASE("graph text format round trip") {
  Graph g = gen_erdos_renyi(17, 0.4, 55);
  g.set_e_weight(3, 2);
  g.set_e0(-1);
  std::stringstream ss;
  write_graph(ss, g);
  Graph h = read_graph(ss);
  REQUIRE(h.n() == g.n());
  REQUIRE(h.edge_count() == g.edge_count());
  REQUIRE(h.e0() == g.e0());
  REQUIRE(h.e_weights() == g.e_weights());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) REQUIRE(g.has_edge(u, v) == h.has_edge(u, v));

  // writer emits edges sorted lexicographically
  std::stringstream ss2;
  write_graph(ss2, g);
  std::string line;
  std::getline(ss2, line);
  std::pair<int, int> prev{-1, -1};
  for (long long i = 0; i < g.edge_count(); ++i) {
    std::getline(ss2, line);
    std::istringstream ls(line);
    int u, v;
    ls >> u >> v;
    REQUIRE(std::pair<int, int>(u, v) > prev);
    prev = {u, v};
  }
}

TEST_CASE("negative weights rejected") {
  Graph g(3);
  REQUIRE_THROWS_AS(g.set_e_weight(0, -1), std::invalid_argument);
}
