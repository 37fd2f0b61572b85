#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "specconn/graph.hpp"

namespace specconn {

enum class CutMode {
  /// kappa: G - F disconnected or a single vertex.
  classic,
  /// c kappa_r: G - F has >= r components or fewer than r vertices.
  component,
  /// kappa_g: G - F disconnected, every survivor keeps >= g neighbours in G - F.
  neighbor,
  /// c kappa_{g,r}: both of the above.
  full,
};

std::string to_string(CutMode mode);
/// Accepts classic, component, neighbor, full. Throws std::invalid_argument.
CutMode parse_cut_mode(const std::string& text);

struct CutQuery {
  int g = 0;
  int r = 2;
  CutMode mode = CutMode::full;
};

struct CutCertificate {
  VertexSet cut;
  /// Sorted descending.
  std::vector<int> component_sizes;
  /// Minimum over survivors of the degree inside G - F; 0 with no survivors.
  int min_residual_degree = 0;
};

struct CutResult {
  int value = 0;
  CutCertificate certificate;
};

/// Residual degrees are measured inside G - F: a survivor needs g neighbours
/// that were not deleted.
///
/// Neighbor and full modes reject the empty cut and the full vertex set.
std::optional<CutCertificate> is_valid_cut(const Graph& g, VertexSet cut, const CutQuery& q);

/// Largest order min_cut will search.
inline constexpr int kMinCutMaxOrder = 20;

/// Minimum valid cut for the query. Candidates are scanned by size, then by
/// increasing bitmask value, so the certificate is the numerically least
/// minimizing set. std::nullopt when no subset qualifies.
///
/// Throws std::invalid_argument for disconnected input, r < 2, g < 0 or
/// order above kMinCutMaxOrder.
std::optional<CutResult> min_cut(const Graph& g, const CutQuery& q);

/// kappa(G); n - 1 for complete graphs.
int vertex_connectivity(const Graph& g);

/// lambda(G) via unit-capacity max flow from vertex 0 to every other vertex.
int edge_connectivity(const Graph& g);

}  // namespace specconn
