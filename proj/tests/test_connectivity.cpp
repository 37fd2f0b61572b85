#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "specconn/connectivity.hpp"
#include "specconn/enumerate.hpp"
#include "specconn/families.hpp"
#include "specconn/graph.hpp"
#include "specconn/transforms.hpp"

using namespace specconn;

namespace {

oracle::Mode oracle_mode(CutMode m) {
  switch (m) {
    case CutMode::classic: return oracle::Mode::classic;
    case CutMode::component: return oracle::Mode::component;
    case CutMode::neighbor: return oracle::Mode::neighbor;
    case CutMode::full: return oracle::Mode::full;
  }
  return oracle::Mode::full;
}

}  // namespace

TEST_CASE("cut validity examples") {
  const CutQuery q{1, 2, CutMode::full};
  const auto good = is_valid_cut(cycle_graph(6), {0, 3}, q);
  REQUIRE(good);
  CHECK(good->component_sizes == std::vector<int>{2, 2});
  CHECK(good->min_residual_degree == 1);
  CHECK_FALSE(is_valid_cut(cycle_graph(6), {0, 2}, q));

  const Graph k5 = complete_graph(5);
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    CHECK_FALSE(is_valid_cut(k5, VertexSet(mask), {0, 2, CutMode::full}));
  }
  CHECK_FALSE(min_cut(k5, {0, 2, CutMode::full}));
}

TEST_CASE("minimum cut examples") {
  const auto c5 = min_cut(cycle_graph(5), {0, 2, CutMode::full});
  REQUIRE(c5);
  CHECK(c5->value == 2);
  CHECK(c5->certificate.cut == VertexSet{0, 2});

  const auto c6 = min_cut(cycle_graph(6), {1, 2, CutMode::full});
  REQUIRE(c6);
  CHECK(c6->value == 2);
  CHECK(c6->certificate.cut == VertexSet{0, 3});

  const FamilyGraph fam = construct({FamilyId::deltamg_g, 9, 2, 2, 1, 2});
  const auto f = min_cut(fam.graph, {1, 2, CutMode::full});
  REQUIRE(f);
  CHECK(f->value == 2);
}

TEST_CASE("minimum cut argument checks") {
  CHECK_THROWS_AS(min_cut(cycle_graph(21), {}), std::invalid_argument);
  CHECK_THROWS_AS(min_cut(cycle_graph(5), {0, 1, CutMode::full}), std::invalid_argument);
  CHECK_THROWS_AS(min_cut(cycle_graph(5), {-1, 2, CutMode::full}), std::invalid_argument);
  CHECK_THROWS_AS(min_cut(Graph(4, {{0, 1}}), {}), std::invalid_argument);
  CHECK(parse_cut_mode("neighbor") == CutMode::neighbor);
  CHECK_THROWS(parse_cut_mode("bogus"));
}

TEST_CASE("classic mode equals vertex connectivity of known graphs") {
  CHECK(vertex_connectivity(complete_graph(6)) == 5);
  CHECK(vertex_connectivity(cycle_graph(7)) == 2);
  CHECK(vertex_connectivity(path_graph(5)) == 1);
  CHECK(vertex_connectivity(star_graph(5)) == 1);
  GraphBuilder b(7);
  b.add_biclique(VertexSet::range(3), VertexSet::range(7) - VertexSet::range(3));
  CHECK(vertex_connectivity(std::move(b).build()) == 3);
}

TEST_CASE("edge connectivity") {
  CHECK(edge_connectivity(cycle_graph(7)) == 2);
  CHECK(edge_connectivity(complete_graph(5)) == 4);
  CHECK(edge_connectivity(path_graph(6)) == 1);
  CHECK(edge_connectivity(Graph(1)) == 0);
  CHECK(edge_connectivity(Graph(3)) == 0);
  // Two K_4 sharing a vertex.
  GraphBuilder b(7);
  b.add_clique(VertexSet::range(4));
  b.add_clique(VertexSet::range(7) - VertexSet::range(3));
  CHECK(edge_connectivity(std::move(b).build()) == 3);
}

TEST_CASE("vertex <= edge connectivity <= min degree") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_connected_graph(2 + trial % 12, 0.2 + 0.6 * (trial % 5) / 5.0, rng);
    const int kappa = vertex_connectivity(g);
    const int lambda = edge_connectivity(g);
    CHECK(kappa <= lambda);
    CHECK(lambda <= degree_profile(g).min_degree);
  }
}

TEST_CASE("cut values agree with a subset-scanning oracle") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 9;
    const Graph g = random_connected_graph(n, 0.25 + 0.5 * (trial % 3) / 3.0, rng);
    for (CutMode mode : {CutMode::classic, CutMode::component, CutMode::neighbor, CutMode::full}) {
      for (int gp : {0, 1, 2}) {
        for (int r : {2, 3}) {
          const auto got = min_cut(g, {gp, r, mode});
          const auto want = oracle::min_cut(g, gp, r, oracle_mode(mode));
          CHECK(got.has_value() == want.has_value());
          if (got && want) {
            CHECK(got->value == *want);
          }
        }
      }
    }
  }
}

TEST_CASE("certificates are sound and least among minimum cuts") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + trial % 7;
    const Graph g = random_connected_graph(n, 0.35, rng);
    const CutQuery q{static_cast<int>(trial % 2), 2 + static_cast<int>(trial % 3 == 0), CutMode::full};
    const auto res = min_cut(g, q);
    if (!res) continue;
    const VertexSet f = res->certificate.cut;
    CHECK(f.size() == res->value);
    const auto again = is_valid_cut(g, f, q);
    REQUIRE(again);
    CHECK(again->component_sizes == res->certificate.component_sizes);
    CHECK(again->min_residual_degree == res->certificate.min_residual_degree);

    // Independent recount of the certificate.
    std::vector<bool> alive(n);
    for (int v = 0; v < n; ++v) alive[v] = !f.contains(v);
    const auto parts = oracle::components(oracle::to_matrix(g), alive);
    CHECK(static_cast<int>(parts.size()) >= q.r);
    CHECK(static_cast<int>(parts.size()) == static_cast<int>(again->component_sizes.size()));
    CHECK(again->min_residual_degree >= q.g);

    // No valid cut of the same size has a smaller bitmask.
    for (std::uint64_t mask = 0; mask < f.bits(); ++mask) {
      if (VertexSet(mask).size() == res->value) CHECK_FALSE(is_valid_cut(g, VertexSet(mask), q));
    }
  }
}

TEST_CASE("classic mode matches textbook connectivity on all graphs of order <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const auto want = oracle::min_cut(g, 0, 2, oracle::Mode::classic);
      REQUIRE(want);
      CHECK(vertex_connectivity(g) == *want);
    }
  }
}
