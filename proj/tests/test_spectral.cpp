#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "specconn/enumerate.hpp"
#include "specconn/families.hpp"
#include "specconn/graph.hpp"
#include "specconn/spectral.hpp"
#include "specconn/transforms.hpp"

using namespace specconn;

TEST_CASE("spectral radius of small reference graphs") {
  CHECK(spectral_radius(complete_graph(8)).rho == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(spectral_radius(cycle_graph(4)).rho == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(spectral_radius(star_graph(4)).rho == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(spectral_radius(Graph(1)).rho == 0.0);
  CHECK(spectral_radius(Graph(4)).rho == 0.0);
  CHECK_THROWS_AS(spectral_radius(cycle_graph(4), 0.0), std::invalid_argument);
}

TEST_CASE("star radius matches sqrt(m)") {
  for (int m = 1; m <= 40; ++m) {
    CHECK(std::abs(spectral_radius(star_graph(m)).rho - std::sqrt(double(m))) <= 1e-10);
  }
}

TEST_CASE("complete graphs up to order 50") {
  for (int n = 2; n <= 50; ++n) {
    CHECK(std::abs(spectral_radius(complete_graph(n)).rho - (n - 1)) <= 1e-10);
  }
}

TEST_CASE("Perron vector is positive, unit length and an eigenvector") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_connected_graph(2 + trial % 15, 0.3, rng);
    const auto r = spectral_radius(g);
    CHECK(r.perron.minCoeff() > 0);
    CHECK(r.perron.norm() == doctest::Approx(1.0));
    const auto a = adjacency_matrix(g);
    CHECK((a * r.perron - r.rho * r.perron).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(std::abs(r.rho - oracle::dense_rho(g)) <= 1e-9);
  }
}

TEST_CASE("disconnected graphs take the largest component radius") {
  const Graph g(7, {{0, 1}, {2, 3}, {3, 4}, {4, 2}, {5, 6}});
  const auto r = spectral_radius(g);
  CHECK(r.rho == doctest::Approx(2.0));
  CHECK(r.perron(0) == 0.0);
  CHECK(r.perron(2) > 0.0);
}

TEST_CASE("long float precision") {
  const auto r = spectral_radius<long double>(cycle_graph(9), 1e-15L);
  CHECK(std::abs(r.rho - 2.0L) <= 1e-13L);
}

TEST_CASE("quotient radius reference shapes") {
  CHECK(std::abs(quotient_spectral_radius({0, {8}}) - 7.0) <= 1e-10);
  CHECK(std::abs(quotient_spectral_radius({1, {1, 1}}) - std::sqrt(2.0)) <= 1e-10);
  const double dense = oracle::dense_rho(oracle::from_matrix(oracle::clique_join(2, {3, 2})));
  CHECK(std::abs(quotient_spectral_radius({2, {3, 2}}) - dense) <= 1e-9);
}

TEST_CASE("quotient and dense radii agree on random clique-join shapes") {
  std::mt19937_64 rng(37);
  int compared = 0;
  for (int s = 0; s <= 4; ++s) {
    for (int t = 1; t <= (s == 0 ? 1 : 4); ++t) {
      for (int rep = 0; rep < 5; ++rep) {
        std::vector<int> parts(t);
        for (int& x : parts) x = 1 + static_cast<int>(rng() % 5);
        const CliqueJoinShape shape{s, parts};
        const Graph assembled = assemble(shape);
        CHECK(assembled == oracle::from_matrix(oracle::clique_join(s, parts)));
        const double dense = oracle::dense_rho(assembled);
        CHECK(std::abs(quotient_spectral_radius(shape) - dense) <= 1e-9);
        ++compared;
      }
    }
  }
  CHECK(compared >= 50);
}

TEST_CASE("clique-join shape validation") {
  CHECK_THROWS(validate({-1, {2}}));
  CHECK_THROWS(validate({1, {}}));
  CHECK_THROWS(validate({1, {0}}));
  CHECK_THROWS(validate({0, {2, 2}}));
  CHECK_THROWS(validate({10, {30, 30}}));
  CHECK_NOTHROW(validate({0, {5}}));
}

TEST_CASE("characteristic polynomial of K_3 and P_3") {
  const auto k3 = characteristic_polynomial<double>(adjacency_matrix(complete_graph(3)));
  // (x-2)(x+1)^2 = x^3 - 3x - 2
  REQUIRE(k3.size() == 4);
  CHECK(k3[0] == doctest::Approx(-2));
  CHECK(k3[1] == doctest::Approx(-3));
  CHECK(k3[2] == doctest::Approx(0).epsilon(1e-12));
  CHECK(k3[3] == 1);
  const auto p3 = characteristic_polynomial<double>(adjacency_matrix(path_graph(3)));
  CHECK(p3[1] == doctest::Approx(-2));
  CHECK(largest_real_root(p3, 0.0, 3.0) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("Perron comparison examples") {
  const auto star = perron_compare(star_graph(4), 0, 1);
  CHECK(star.relation == PerronRelation::u_dominates);
  CHECK(star.x_u > star.x_v);
  CHECK(star.consistent);
  const auto flipped = perron_compare(star_graph(4), 1, 0);
  CHECK(flipped.relation == PerronRelation::v_dominates);
  CHECK(flipped.consistent);

  for (Vertex v = 1; v < 4; ++v) {
    const auto k4 = perron_compare(complete_graph(4), 0, v);
    CHECK(k4.relation == PerronRelation::twins);
    CHECK(std::abs(k4.x_u - k4.x_v) <= 1e-9);
  }

  // Two vertices of the big clique part in the delta0 construction.
  const FamilyGraph fam = construct({FamilyId::delta0, 8, 3, 2, 1, 2});
  const int first_big = 1 + fam.blocks[1];
  const auto same_part = perron_compare(fam.graph, first_big, first_big + 1);
  CHECK(same_part.relation == PerronRelation::twins);
  CHECK(same_part.consistent);

  const auto c6 = perron_compare(cycle_graph(6), 0, 2);
  CHECK(c6.relation == PerronRelation::incomparable);
  CHECK_THROWS(perron_compare(Graph(3, {{0, 1}}), 0, 1));
  CHECK_THROWS(perron_compare(complete_graph(3), 1, 1));
}

TEST_CASE("Perron comparison is consistent on random graphs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 10;
    const Graph g = random_connected_graph(n, 0.4, rng);
    const Vertex u = static_cast<Vertex>(rng() % n);
    const Vertex v = (u + 1 + static_cast<Vertex>(rng() % (n - 1))) % n;
    CHECK(perron_compare(g, u, v).consistent);
  }
}

TEST_CASE("min degree <= rho <= max degree with equality exactly for regular graphs") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    const Graph g = random_connected_graph(2 + trial % 14, 0.1 + 0.8 * (trial % 7) / 7.0, rng);
    const auto p = degree_profile(g);
    const double rho = spectral_radius(g).rho;
    CHECK(rho >= p.min_degree - 1e-10);
    CHECK(rho <= p.max_degree + 1e-10);
    const bool regular = p.min_degree == p.max_degree;
    CHECK(regular == (std::abs(rho - p.max_degree) <= 1e-9));
  }
}

TEST_CASE("edge additions raise and vertex deletions lower the radius") {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const double rho = spectral_radius(g).rho;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (!g.adjacent(u, v)) CHECK(spectral_radius(g.with_edge(u, v)).rho > rho + 1e-10);
        }
        CHECK(spectral_radius(g.isolate(u)).rho < rho - 1e-10);
      }
    }
  }
}

TEST_CASE("isomorphic graphs share a radius") {
  std::mt19937_64 rng(47);
  for (const Graph& g : enumerate_connected(6)) {
    std::vector<Vertex> perm{0, 1, 2, 3, 4, 5};
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(std::abs(spectral_radius(g).rho - spectral_radius(g.relabeled(perm)).rho) <= 1e-11);
  }
}
