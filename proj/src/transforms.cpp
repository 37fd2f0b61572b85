#include "specconn/transforms.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace specconn {

void validate(const Graph& g, const RotationSpec& spec) {
  const int n = g.order();
  if (spec.u < 0 || spec.v < 0 || spec.u >= n || spec.v >= n) {
    throw InvalidTransform("rotation endpoints out of range");
  }
  if (spec.u == spec.v) throw InvalidTransform("rotation needs u != v");
  if (spec.moved.empty()) throw InvalidTransform("rotation moves no edges");
  if (!spec.moved.subset_of(g.vertices())) throw InvalidTransform("moved set out of range");
  if (spec.moved.contains(spec.u) || spec.moved.contains(spec.v)) {
    throw InvalidTransform("moved set must avoid u and v");
  }
  if (!spec.moved.subset_of(g.neighbors(spec.v))) {
    throw InvalidTransform("moved vertices must be neighbours of v");
  }
  if (!(spec.moved & g.neighbors(spec.u)).empty()) {
    throw InvalidTransform("moved vertices must not already be neighbours of u");
  }
}

Graph rotate(const Graph& g, const RotationSpec& spec) {
  validate(g, spec);
  GraphBuilder b(g);
  for (Vertex w : spec.moved) {
    b.remove_edge(spec.v, w);
    b.add_edge(spec.u, w);
  }
  return std::move(b).build();
}

RotationVerdict check_rotation(const Graph& g, const RotationSpec& spec) {
  if (!g.connected()) throw std::invalid_argument("rotation check needs a connected graph");
  const Graph rotated = rotate(g, spec);
  const auto before = spectral_radius(g);
  RotationVerdict out;
  out.x_u = before.perron(spec.u);
  out.x_v = before.perron(spec.v);
  out.rho_before = before.rho;
  out.applicable = out.x_u >= out.x_v - kPerronTieBand;
  out.rotated_connected = rotated.connected();
  if (out.applicable) {
    out.rho_after = spectral_radius(rotated).rho;
    out.holds = out.rho_after > out.rho_before + kStrictMargin;
  }
  return out;
}

SubgraphVerdict check_proper_subgraph(const Graph& g, const Graph& sub) {
  if (!g.connected()) throw std::invalid_argument("subgraph check needs a connected host graph");
  if (sub.order() > g.order()) throw InvalidTransform("subgraph has more vertices than host");
  for (Vertex v = 0; v < sub.order(); ++v) {
    if (!sub.neighbors(v).subset_of(g.neighbors(v))) {
      throw InvalidTransform("edge at vertex " + std::to_string(v) + " missing from host graph");
    }
  }
  if (sub.order() == g.order() && sub.edge_count() == g.edge_count()) {
    throw InvalidTransform("subgraph is not proper");
  }
  SubgraphVerdict out;
  out.rho_graph = spectral_radius(g).rho;
  out.rho_subgraph = spectral_radius(sub).rho;
  out.holds = out.rho_subgraph < out.rho_graph - kStrictMargin;
  return out;
}

bool join_rebalance_applies(int core, const std::vector<int>& parts, int p) {
  if (core < 0 || p < 1 || parts.empty()) return false;
  if (!std::is_sorted(parts.rbegin(), parts.rend())) return false;
  if (parts.back() < p) return false;
  const int t = static_cast<int>(parts.size());
  const int n = core + std::accumulate(parts.begin(), parts.end(), 0);
  return parts.front() < n - core - p * (t - 1);
}

JoinRebalanceVerdict check_join_rebalance(int core, const std::vector<int>& parts, int p) {
  if (!join_rebalance_applies(core, parts, p)) {
    throw InvalidTransform("join rebalance hypothesis fails: need n_1 >= ... >= n_t >= p and "
                           "n_1 < n - s - p(t-1)");
  }
  const int t = static_cast<int>(parts.size());
  JoinRebalanceVerdict out;
  out.original = {core, parts};
  const int n = out.original.order();
  out.rebalanced = {core, {n - core - p * (t - 1)}};
  out.rebalanced.parts.insert(out.rebalanced.parts.end(), t - 1, p);
  out.rho_original = quotient_spectral_radius(out.original);
  out.rho_rebalanced = quotient_spectral_radius(out.rebalanced);
  out.holds = out.rho_original < out.rho_rebalanced - kStrictMargin;
  return out;
}

Graph random_connected_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  for (;;) {
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (coin(rng)) b.add_edge(u, v);
      }
    }
    if (b.peek().connected()) return std::move(b).build();
  }
}

namespace {

Graph draw_graph(std::mt19937_64& rng, int max_order) {
  std::uniform_int_distribution<int> order(3, std::max(3, max_order));
  std::uniform_real_distribution<double> density(0.2, 0.8);
  const int n = order(rng);
  return random_connected_graph(n, density(rng), rng);
}

VertexSet random_nonempty_subset(VertexSet from, std::mt19937_64& rng) {
  const auto members = from.to_vector();
  std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << members.size()) - 1);
  const std::uint64_t mask = pick(rng);
  VertexSet out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if ((mask >> i) & 1u) out.insert(members[i]);
  }
  return out;
}

void record(FuzzSummary& s, double gap, bool ok, std::uint64_t trial_seed) {
  ++s.trials;
  s.min_gap = s.trials == 1 ? gap : std::min(s.min_gap, gap);
  if (!ok) {
    ++s.violations;
    if (!s.first_violation_seed) s.first_violation_seed = trial_seed;
  }
}

}  // namespace

FuzzSummary fuzz_rotation(int trials, std::uint64_t seed, int max_order) {
  FuzzSummary summary;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
    std::mt19937_64 rng(trial_seed);
    for (;;) {
      const Graph g = draw_graph(rng, max_order);
      const auto perron = spectral_radius(g).perron;
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = 0; v < g.order(); ++v) {
          if (u == v || perron(u) < perron(v) - kPerronTieBand) continue;
          const VertexSet movable = g.neighbors(v) - g.closed_neighbors(u);
          if (!movable.empty()) pairs.emplace_back(u, v);
        }
      }
      if (pairs.empty()) continue;
      std::uniform_int_distribution<std::size_t> which(0, pairs.size() - 1);
      const auto [u, v] = pairs[which(rng)];
      const RotationSpec spec{u, v,
                              random_nonempty_subset(g.neighbors(v) - g.closed_neighbors(u), rng)};
      const RotationVerdict verdict = check_rotation(g, spec);
      if (!verdict.rotated_connected) ++summary.disconnected_results;
      record(summary, verdict.rho_after - verdict.rho_before, verdict.applicable && verdict.holds,
             trial_seed);
      break;
    }
  }
  return summary;
}

FuzzSummary fuzz_proper_subgraph(int trials, std::uint64_t seed, int max_order) {
  FuzzSummary summary;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
    std::mt19937_64 rng(trial_seed);
    Graph g = draw_graph(rng, max_order);
    Graph sub = g;
    if (t % 2 == 0) {
      const auto edges = g.edges();
      std::uniform_int_distribution<std::size_t> which(0, edges.size() - 1);
      const auto [a, b] = edges[which(rng)];
      sub = g.without_edge(a, b);
    } else {
      // Move the deleted vertex to the last label so the identity map embeds
      // G - v into G.
      const int n = g.order();
      std::uniform_int_distribution<Vertex> which(0, n - 1);
      const Vertex v = which(rng);
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[v], perm[n - 1]);
      g = g.relabeled(perm);
      sub = g.induced(VertexSet::range(n - 1));
    }
    const SubgraphVerdict verdict = check_proper_subgraph(g, sub);
    record(summary, verdict.rho_graph - verdict.rho_subgraph, verdict.holds, trial_seed);
  }
  return summary;
}

}  // namespace specconn
