#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "specconn/graph.hpp"
#include "specconn/spectral.hpp"
#include "specconn/transforms.hpp"

using namespace specconn;

TEST_CASE("rotation on a path") {
  const Graph p4 = path_graph(4);
  const Graph rotated = rotate(p4, {1, 2, {3}});
  CHECK(rotated == Graph(4, {{0, 1}, {1, 2}, {1, 3}}));
  CHECK_THROWS_AS(rotate(p4, {1, 2, {}}), InvalidTransform);
  CHECK_THROWS_AS(rotate(p4, {1, 2, {0}}), InvalidTransform);   // 0 is not a neighbour of 2
  CHECK_THROWS_AS(rotate(p4, {0, 2, {1}}), InvalidTransform);   // 1 already adjacent to 0
  CHECK_THROWS_AS(rotate(p4, {1, 2, {2}}), InvalidTransform);
}

TEST_CASE("rotation on C5") {
  const Graph c5 = cycle_graph(5);
  const Graph rotated = rotate(c5, {0, 2, {3}});
  CHECK(rotated == Graph(5, {{0, 1}, {0, 4}, {1, 2}, {0, 3}, {3, 4}}));
  const RotationVerdict v = check_rotation(c5, {0, 2, {3}});
  CHECK(v.applicable);
  CHECK(std::abs(v.x_u - v.x_v) <= 1e-9);
  CHECK(v.holds);
  CHECK(v.rho_after == doctest::Approx(oracle::dense_rho(rotated)));
  CHECK(v.rho_after > v.rho_before + kStrictMargin);
}

TEST_CASE("twin leaves of a star admit no rotation") {
  const Graph star = star_graph(4);
  CHECK((star.neighbors(2) - star.neighbors(1)).empty());
  CHECK_THROWS_AS(rotate(star, {1, 2, {0}}), InvalidTransform);
}

TEST_CASE("rotation preserves edge count and inverts by the mirrored spec") {
  std::mt19937_64 rng(67);
  int exercised = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + trial % 8;
    const Graph g = random_connected_graph(n, 0.4, rng);
    const Vertex u = static_cast<Vertex>(rng() % n);
    const Vertex v = (u + 1 + static_cast<Vertex>(rng() % (n - 1))) % n;
    VertexSet candidates = g.neighbors(v) - g.neighbors(u) - VertexSet{u};
    if (candidates.empty()) continue;
    VertexSet moved;
    for (Vertex w : candidates) {
      if (rng() % 2 || moved.empty()) moved.insert(w);
    }
    const Graph rotated = rotate(g, {u, v, moved});
    CHECK(rotated.edge_count() == g.edge_count());
    for (Vertex x = 0; x < n; ++x) CHECK_FALSE(rotated.adjacent(x, x));
    CHECK(rotate(rotated, {v, u, moved}) == g);
    ++exercised;
  }
  CHECK(exercised > 100);
}

TEST_CASE("proper subgraph examples") {
  const SubgraphVerdict k = check_proper_subgraph(complete_graph(5), complete_graph(4));
  CHECK(k.rho_graph == doctest::Approx(4.0));
  CHECK(k.rho_subgraph == doctest::Approx(3.0));
  CHECK(k.holds);

  const SubgraphVerdict c = check_proper_subgraph(cycle_graph(6), path_graph(6));
  CHECK(c.rho_graph == doctest::Approx(2.0));
  CHECK(c.rho_subgraph < 2.0);
  CHECK(c.holds);

  CHECK_THROWS_AS(check_proper_subgraph(cycle_graph(5), cycle_graph(5)), InvalidTransform);
  CHECK_THROWS_AS(check_proper_subgraph(path_graph(4), cycle_graph(4)), InvalidTransform);
  CHECK_THROWS_AS(check_proper_subgraph(path_graph(4), path_graph(5)), InvalidTransform);
}

TEST_CASE("join rebalance examples") {
  const JoinRebalanceVerdict v = check_join_rebalance(2, {3, 3}, 2);
  CHECK(v.rebalanced.core == 2);
  CHECK(v.rebalanced.parts == std::vector<int>{4, 2});
  CHECK(v.holds);
  const double before = oracle::dense_rho(oracle::from_matrix(oracle::clique_join(2, {3, 3})));
  const double after = oracle::dense_rho(oracle::from_matrix(oracle::clique_join(2, {4, 2})));
  CHECK(std::abs(v.rho_original - before) <= 1e-9);
  CHECK(std::abs(v.rho_rebalanced - after) <= 1e-9);
  CHECK(before < after);

  CHECK_FALSE(join_rebalance_applies(1, {2, 2, 2}, 2));
  CHECK_THROWS_AS(check_join_rebalance(1, {2, 2, 2}, 2), InvalidTransform);
  CHECK_FALSE(join_rebalance_applies(2, {3, 1}, 2));   // n_t < p
  CHECK_FALSE(join_rebalance_applies(2, {2, 3}, 1));   // not non-increasing
}

TEST_CASE("join rebalance grid against dense radii") {
  int instances = 0;
  for (int s = 1; s <= 3; ++s) {
    for (int t = 2; t <= 3; ++t) {
      for (int p = 1; p <= 2; ++p) {
        std::vector<int> parts(t, 1);
        // Every non-increasing part list with n <= 12.
        std::function<void(int, int, int)> fill = [&](int idx, int cap, int used) {
          if (idx == t) {
            if (!join_rebalance_applies(s, parts, p)) return;
            const JoinRebalanceVerdict v = check_join_rebalance(s, parts, p);
            CHECK(v.holds);
            const double dense_before = oracle::dense_rho(oracle::from_matrix(oracle::clique_join(s, parts)));
            const double dense_after = oracle::dense_rho(
                oracle::from_matrix(oracle::clique_join(s, v.rebalanced.parts)));
            CHECK(dense_before < dense_after - kStrictMargin);
            ++instances;
            return;
          }
          for (int x = 1; x <= cap && s + used + x <= 12; ++x) {
            parts[idx] = x;
            fill(idx + 1, x, used + x);
          }
        };
        fill(0, 12, 0);
      }
    }
  }
  CHECK(instances >= 30);
}

TEST_CASE("rotation fuzzing finds no violation") {
  const FuzzSummary s = fuzz_rotation(300, 1234);
  CHECK(s.trials == 300);
  CHECK(s.violations == 0);
  CHECK_FALSE(s.first_violation_seed.has_value());
  CHECK(s.min_gap > kStrictMargin);
}

TEST_CASE("subgraph fuzzing finds no violation") {
  const FuzzSummary s = fuzz_proper_subgraph(300, 4321);
  CHECK(s.trials == 300);
  CHECK(s.violations == 0);
  CHECK(s.min_gap > kStrictMargin);
}

TEST_CASE("fuzz runs are reproducible") {
  const FuzzSummary a = fuzz_rotation(50, 99);
  const FuzzSummary b = fuzz_rotation(50, 99);
  CHECK(a.min_gap == b.min_gap);
  CHECK(a.disconnected_results == b.disconnected_results);
}

TEST_CASE("random connected graphs are connected") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_connected_graph(1 + trial % 12, 0.3, rng);
    CHECK(oracle::connected(oracle::to_matrix(g)));
  }
}
