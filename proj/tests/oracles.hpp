#pragma once

// Reference implementations used only by the tests. They deliberately avoid
// the library's bitset search, colour refinement and power iteration, and
// work from plain adjacency matrices.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "specconn/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix to_matrix(const specconn::Graph& g) {
  const int n = g.order();
  Matrix m(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) m[u][v] = g.adjacent(u, v);
  }
  return m;
}

inline specconn::Graph from_matrix(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  specconn::GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (m[u][v]) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

/// Upper-triangle bit string of m relabeled by perm (vertex i -> perm[i]).
inline std::string key_under(const Matrix& m, const std::vector<int>& perm) {
  const int n = static_cast<int>(m.size());
  std::vector<int> inverse(n);
  for (int i = 0; i < n; ++i) inverse[perm[i]] = i;
  std::string key;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) key.push_back(m[inverse[i]][inverse[j]] ? '1' : '0');
  }
  return key;
}

/// Minimum key over all n! relabelings.
inline std::string brute_canonical(const Matrix& m) {
  std::vector<int> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  bool first = true;
  do {
    std::string k = key_under(m, perm);
    if (first || k < best) best = std::move(k);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Components of the subgraph induced on vertices with alive[v], via DFS.
inline std::vector<std::vector<int>> components(const Matrix& m, const std::vector<bool>& alive) {
  const int n = static_cast<int>(m.size());
  std::vector<int> label(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (!alive[s] || label[s] >= 0) continue;
    std::vector<int> stack{s};
    label[s] = static_cast<int>(out.size());
    out.emplace_back();
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int w = 0; w < n; ++w) {
        if (alive[w] && m[v][w] && label[w] < 0) {
          label[w] = label[s];
          stack.push_back(w);
        }
      }
    }
  }
  return out;
}

inline bool connected(const Matrix& m) {
  return components(m, std::vector<bool>(m.size(), true)).size() == 1;
}

/// Number of isomorphism classes of graphs on n vertices (connected ones
/// only when `connected_only`), by brute force over all labeled graphs.
inline int census(int n, bool connected_only) {
  const int pairs = n * (n - 1) / 2;
  std::set<std::string> seen;
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    Matrix m(n, std::vector<bool>(n, false));
    int bit = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++bit) {
        if ((mask >> bit) & 1u) m[i][j] = m[j][i] = true;
      }
    }
    if (connected_only && !connected(m)) continue;
    seen.insert(brute_canonical(m));
  }
  return static_cast<int>(seen.size());
}

enum class Mode { classic, component, neighbor, full };

/// Minimum cut size by scanning every subset; no pruning.
inline std::optional<int> min_cut(const specconn::Graph& g, int good, int r, Mode mode) {
  const Matrix m = to_matrix(g);
  const int n = g.order();
  std::optional<int> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<bool> alive(n);
    int removed = 0;
    for (int v = 0; v < n; ++v) {
      alive[v] = !((mask >> v) & 1u);
      removed += !alive[v];
    }
    const int survivors = n - removed;
    const auto parts = components(m, alive);
    const int count = static_cast<int>(parts.size());
    int min_res = n;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      int d = 0;
      for (int w = 0; w < n; ++w) d += alive[w] && m[v][w];
      min_res = std::min(min_res, d);
    }
    bool ok = false;
    switch (mode) {
      case Mode::classic: ok = count >= 2 || survivors == 1; break;
      case Mode::component: ok = count >= r || survivors < r; break;
      case Mode::neighbor: ok = removed > 0 && survivors > 0 && count >= 2 && min_res >= good; break;
      case Mode::full: ok = removed > 0 && survivors > 0 && count >= r && min_res >= good; break;
    }
    if (ok && (!best || removed < *best)) best = removed;
  }
  return best;
}

/// Largest adjacency eigenvalue by a dense symmetric eigensolver.
inline double dense_rho(const specconn::Graph& g) {
  const int n = g.order();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) a(u, v) = g.adjacent(u, v) ? 1.0 : 0.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

/// K_core joined to the disjoint union of cliques K_parts[i], built entry by
/// entry: two vertices are adjacent unless they sit in different parts.
inline Matrix clique_join(int core, const std::vector<int>& parts) {
  std::vector<int> owner(core, -1);
  for (std::size_t i = 0; i < parts.size(); ++i) owner.insert(owner.end(), parts[i], static_cast<int>(i));
  const int n = static_cast<int>(owner.size());
  Matrix m(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      m[a][b] = owner[a] < 0 || owner[b] < 0 || owner[a] == owner[b];
    }
  }
  return m;
}

}  // namespace oracle
