#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "specconn/graph.hpp"
#include "specconn/spectral.hpp"

namespace specconn {

/// Strictness band used for every spectral comparison below.
inline constexpr double kStrictMargin = 1e-10;
/// |x(u) - x(v)| within this counts as x(u) >= x(v).
inline constexpr double kPerronTieBand = 1e-12;

/// Move the edges v-w (w in `moved`) over to u-w.
struct RotationSpec {
  Vertex u = 0;
  Vertex v = 0;
  VertexSet moved;
};

class InvalidTransform : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws InvalidTransform unless `moved` is a nonempty subset of
/// N(v) \ N(u) avoiding u and v.
void validate(const Graph& g, const RotationSpec& spec);

Graph rotate(const Graph& g, const RotationSpec& spec);

struct RotationVerdict {
  /// x(u) >= x(v) - kPerronTieBand.
  bool applicable = false;
  double x_u = 0;
  double x_v = 0;
  double rho_before = 0;
  double rho_after = 0;
  /// Only meaningful when applicable: rho_after > rho_before + kStrictMargin.
  bool holds = true;
  bool rotated_connected = true;
};

/// Throws std::invalid_argument for disconnected g.
RotationVerdict check_rotation(const Graph& g, const RotationSpec& spec);

struct SubgraphVerdict {
  double rho_graph = 0;
  double rho_subgraph = 0;
  /// rho_subgraph < rho_graph - kStrictMargin.
  bool holds = false;
};

/// `sub` must be a proper subgraph of `g` under the identity map on
/// 0..sub.order()-1 (fewer vertices, fewer edges, or both).
SubgraphVerdict check_proper_subgraph(const Graph& g, const Graph& sub);

struct JoinRebalanceVerdict {
  CliqueJoinShape original;
  CliqueJoinShape rebalanced;
  double rho_original = 0;
  double rho_rebalanced = 0;
  /// rho_original < rho_rebalanced - kStrictMargin.
  bool holds = false;
};

/// Hypothesis: parts sorted non-increasing, last part >= p >= 1, and
/// parts[0] < n - s - p(t-1).
bool join_rebalance_applies(int core, const std::vector<int>& parts, int p);

/// Compares K_s v (u K_{n_i}) against K_s v (K_{n-s-p(t-1)} u (t-1) K_p).
/// Throws InvalidTransform when the hypothesis fails.
JoinRebalanceVerdict check_join_rebalance(int core, const std::vector<int>& parts, int p);

/// Uniform random graph with edge probability `density`, redrawn until
/// connected.
Graph random_connected_graph(int n, double density, std::mt19937_64& rng);

struct FuzzSummary {
  int trials = 0;
  int violations = 0;
  /// Trials whose transformed graph was disconnected (rotation fuzz only).
  int disconnected_results = 0;
  /// Smallest observed rho gap in the expected direction.
  double min_gap = 0;
  std::optional<std::uint64_t> first_violation_seed;
};

/// Each trial t draws from its own generator seeded with seed + t, so single
/// trials replay independently.
FuzzSummary fuzz_rotation(int trials, std::uint64_t seed, int max_order = 10);
/// Alternates edge deletion (even trials) and vertex deletion (odd trials).
FuzzSummary fuzz_proper_subgraph(int trials, std::uint64_t seed, int max_order = 10);

}  // namespace specconn
