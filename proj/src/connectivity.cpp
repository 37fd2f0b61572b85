#include "specconn/connectivity.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>

namespace specconn {

std::string to_string(CutMode mode) {
  switch (mode) {
    case CutMode::classic: return "classic";
    case CutMode::component: return "component";
    case CutMode::neighbor: return "neighbor";
    case CutMode::full: return "full";
  }
  return "unknown";
}

CutMode parse_cut_mode(const std::string& text) {
  if (text == "classic") return CutMode::classic;
  if (text == "component") return CutMode::component;
  if (text == "neighbor") return CutMode::neighbor;
  if (text == "full") return CutMode::full;
  throw std::invalid_argument("unknown cut mode '" + text +
                              "' (expected classic, component, neighbor or full)");
}

namespace {

int min_residual_degree(const Graph& g, VertexSet cut) {
  const VertexSet survivors = g.vertices() - cut;
  if (survivors.empty()) return 0;
  int best = g.order();
  for (Vertex v : survivors) best = std::min(best, (g.neighbors(v) - cut).size());
  return best;
}

bool needs_residual_degree(CutMode mode) {
  return mode == CutMode::neighbor || mode == CutMode::full;
}

}  // namespace

std::optional<CutCertificate> is_valid_cut(const Graph& g, VertexSet cut, const CutQuery& q) {
  cut &= g.vertices();
  const VertexSet survivors = g.vertices() - cut;
  const int residual = min_residual_degree(g, cut);

  if (needs_residual_degree(q.mode)) {
    if (cut.empty() || survivors.empty() || residual < q.g) return std::nullopt;
  }

  const auto parts = components(g, cut);
  const int count = static_cast<int>(parts.size());
  bool ok = false;
  switch (q.mode) {
    case CutMode::classic: ok = count >= 2 || survivors.size() == 1; break;
    case CutMode::component: ok = count >= q.r || survivors.size() < q.r; break;
    case CutMode::neighbor: ok = count >= 2; break;
    case CutMode::full: ok = count >= std::max(q.r, 2); break;
  }
  if (!ok) return std::nullopt;

  CutCertificate cert;
  cert.cut = cut;
  cert.min_residual_degree = residual;
  for (VertexSet p : parts) cert.component_sizes.push_back(p.size());
  std::sort(cert.component_sizes.begin(), cert.component_sizes.end(), std::greater<>());
  return cert;
}

std::optional<CutResult> min_cut(const Graph& g, const CutQuery& q) {
  const int n = g.order();
  if (n > kMinCutMaxOrder) {
    throw std::invalid_argument("min_cut searches graphs of order <= " +
                                std::to_string(kMinCutMaxOrder) + ", got " + std::to_string(n));
  }
  if (q.r < 2) throw std::invalid_argument("component threshold r must be >= 2");
  if (q.g < 0) throw std::invalid_argument("good-neighbour threshold g must be >= 0");
  if (!g.connected()) throw std::invalid_argument("min_cut needs a connected graph");

  const bool residual_mode = needs_residual_degree(q.mode);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (int size = 0; size <= n; ++size) {
    if (size == 0) {
      if (auto cert = is_valid_cut(g, {}, q)) return CutResult{0, *cert};
      continue;
    }
    // Gosper's hack: all masks with `size` bits set, increasing.
    std::uint64_t mask = (std::uint64_t{1} << size) - 1;
    while (mask < limit) {
      const VertexSet cut(mask);
      bool viable = true;
      if (residual_mode) {
        for (Vertex v : g.vertices() - cut) {
          if ((g.neighbors(v) - cut).size() < q.g) {
            viable = false;
            break;
          }
        }
      }
      if (viable) {
        if (auto cert = is_valid_cut(g, cut, q)) return CutResult{size, *cert};
      }
      const std::uint64_t low = mask & -mask;
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  return std::nullopt;
}

int vertex_connectivity(const Graph& g) {
  // Deleting all but one vertex always qualifies, so a value exists.
  return min_cut(g, {0, 2, CutMode::classic})->value;
}

int edge_connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 1) return 0;
  int best = n;
  std::vector<std::vector<int>> capacity(n, std::vector<int>(n, 0));
  for (Vertex sink = 1; sink < n; ++sink) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) capacity[u][v] = g.adjacent(u, v) ? 1 : 0;
    }
    int flow = 0;
    while (flow < best) {
      std::vector<Vertex> parent(n, -1);
      parent[0] = 0;
      std::queue<Vertex> frontier;
      frontier.push(0);
      while (!frontier.empty() && parent[sink] < 0) {
        const Vertex u = frontier.front();
        frontier.pop();
        for (Vertex v = 0; v < n; ++v) {
          if (parent[v] < 0 && capacity[u][v] > 0) {
            parent[v] = u;
            frontier.push(v);
          }
        }
      }
      if (parent[sink] < 0) break;
      for (Vertex v = sink; v != 0; v = parent[v]) {
        --capacity[parent[v]][v];
        ++capacity[v][parent[v]];
      }
      ++flow;
    }
    best = std::min(best, flow);
  }
  return best;
}

}  // namespace specconn
