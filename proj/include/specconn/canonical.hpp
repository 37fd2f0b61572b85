#pragma once

#include <string>
#include <vector>

#include "specconn/graph.hpp"

namespace specconn {

/// Largest order accepted by canonical_form / is_isomorphic.
inline constexpr int kCanonicalMaxOrder = 12;

/// Labeling-invariant representative: graph6 text of the canonically
/// relabeled graph. Equal forms <=> isomorphic graphs.
struct CanonicalForm {
  std::string graph6;

  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
  /// vertex v of the input becomes vertex relabel[v] of `graph`.
  std::vector<Vertex> relabel;
  Graph graph;
  /// Generators of the automorphism group found during the search (each a
  /// permutation of the input labels). Not necessarily a full generating set.
  std::vector<std::vector<Vertex>> automorphisms;
};

/// Canonical relabeling by colour refinement plus individualization search.
/// Works for any order up to 64; runtime is only guaranteed small for the
/// sizes used here.
CanonicalLabeling canonical_labeling(const Graph& g);

/// Throws std::domain_error above kCanonicalMaxOrder.
CanonicalForm canonical_form(const Graph& g);

/// False on order mismatch.
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace specconn
