#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "specconn/graph.hpp"
#include "specconn/spectral.hpp"

namespace specconn {

/// Extremal graph families for the (n, k, delta, g, r) classes. In all of
/// them a distinguished vertex u of minimum degree delta hangs off a join of
/// cliques K_core v (K_big u small parts):
///
///   delta0      u -> delta vertices of K_{k-1}; small parts (r-1) x K_{g+1}
///   deltamg-g   u -> delta-g vertices of K_k and all of a K_g part;
///               small parts (r-2) x K_{g+1} plus that K_g
///   km1         u -> all of K_{k-1} and delta-k+1 vertices of K_big;
///               small parts (r-1) x K_{g+1}
///   zero-delta  no core; u -> delta-r+1 vertices of K_big and one vertex of
///               each of the (r-1) x K_{g+1}
///   join-vi     no u; K_k v (K_{n-k-(delta-k+1)(r-1)} u (r-1) x K_{delta-k+1})
///
/// with big = n - (r-1)(g+1) - k throughout.
enum class FamilyId { delta0, deltamg_g, km1_dmkp1, zero_delta, join_vi };

std::string to_string(FamilyId id);
/// CLI names: delta0, deltamg-g, km1, zero-delta, join-vi.
FamilyId parse_family(const std::string& text);

struct FamilyParams {
  FamilyId family = FamilyId::join_vi;
  int n = 0;
  int k = 0;
  int delta = 0;
  int g = 0;
  int r = 2;
};

class InfeasibleParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Constraints without which the described graph does not exist (block
/// sizes and attachment counts). Empty when construct() can build it.
std::vector<std::string> structural_violations(const FamilyParams& p);

/// Structural constraints plus the (k, delta, g) cell the family is claimed
/// for. Only feasible parameters guarantee minimum degree delta, a valid
/// witness and connectivity value exactly k.
std::vector<std::string> feasibility_violations(const FamilyParams& p);
bool feasible(const FamilyParams& p);

struct FamilyGraph {
  Graph graph;
  /// Size-k cut separating the blocks; a g-good r-component cut whenever the
  /// parameters are feasible.
  VertexSet witness;
  /// Vertex 0 for every family except join-vi.
  std::optional<Vertex> min_degree_vertex;
  /// Vertex counts of the blocks in label order: u (if present), core,
  /// big clique, small parts.
  std::vector<int> blocks;
};

/// Builds the family member. Labels: u = 0, then the join core, then the big
/// clique, then the small parts. Within a block u attaches to the lowest
/// labels, and u always has degree delta. Throws InfeasibleParams naming
/// every violated structural constraint.
FamilyGraph construct(const FamilyParams& p);

/// The join-vi member as a clique-join shape.
CliqueJoinShape join_vi_shape(const FamilyParams& p);

class CoverageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Every (k, delta, g) cell, numbered 1..6, whose defining inequalities hold:
///   1: k > delta, delta < g          4: k = 1 <= delta < g
///   2: k > delta >= g                5: k <= delta, g <= delta < g + k
///   3: 2 <= k <= delta < g           6: delta >= g + k
std::vector<int> matching_cases(int k, int delta, int g);

/// The unique matching cell. Throws CoverageError otherwise.
int extremal_case(int k, int delta, int g);

/// Family asserted extremal for the class. Throws CoverageError when the
/// parameters fall in no cell (or in several), and InfeasibleParams when
/// n < k + r(g+1) or k < 1.
FamilyParams claimed_extremal(int n, int k, int delta, int g, int r);

/// r = 2 specialisation for good-neighbour connectivity classes.
/// Requires n >= kappa_g + 2(g+1).
FamilyGraph neighbor_extremal_family(int n, int kappa_g, int delta, int g);

}  // namespace specconn
