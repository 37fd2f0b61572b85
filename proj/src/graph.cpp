#include "specconn/graph.hpp"

#include <algorithm>
#include <string>

namespace specconn {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(g.order() - 1));
  }
}

}  // namespace

Graph::Graph(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw std::invalid_argument("graph order must lie in 1..64, got " + std::to_string(n));
  }
  rows_.assign(n, VertexSet{});
}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    rows_[u].insert(v);
    rows_[v].insert(u);
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet row : rows_) twice += row.size();
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : rows_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  return GraphBuilder(*this).add_edge(u, v).build();
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  return GraphBuilder(*this).remove_edge(u, v).build();
}

Graph Graph::isolate(Vertex v) const {
  check_vertex(*this, v);
  Graph out = *this;
  for (Vertex w : rows_[v]) out.rows_[w].erase(v);
  out.rows_[v] = {};
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != order()) {
    throw std::invalid_argument("permutation size does not match graph order");
  }
  VertexSet seen;
  for (Vertex p : perm) {
    check_vertex(*this, p);
    seen.insert(p);
  }
  if (seen.size() != order()) throw std::invalid_argument("not a permutation");
  Graph out(order());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : rows_[u]) out.rows_[perm[u]].insert(perm[v]);
  }
  return out;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  if (keep.empty()) throw std::invalid_argument("induced subgraph on empty vertex set");
  std::vector<Vertex> index(order(), -1);
  int next = 0;
  for (Vertex v : keep) index[v] = next++;
  Graph out(next);
  for (Vertex u : keep) {
    for (Vertex v : rows_[u] & keep) out.rows_[index[u]].insert(index[v]);
  }
  return out;
}

Graph Graph::complement() const {
  Graph out(order());
  for (Vertex v = 0; v < order(); ++v) {
    out.rows_[v] = vertices() - closed_neighbors(v);
  }
  return out;
}

bool Graph::connected() const { return component_of(*this, 0) == vertices(); }

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  check_vertex(graph_, u);
  check_vertex(graph_, v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  graph_.rows_[u].insert(v);
  graph_.rows_[v].insert(u);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check_vertex(graph_, u);
  check_vertex(graph_, v);
  graph_.rows_[u].erase(v);
  graph_.rows_[v].erase(u);
  return *this;
}

GraphBuilder& GraphBuilder::add_clique(VertexSet members) {
  for (Vertex v : members) {
    check_vertex(graph_, v);
    graph_.rows_[v] |= members - VertexSet::singleton(v);
  }
  return *this;
}

GraphBuilder& GraphBuilder::add_biclique(VertexSet a, VertexSet b) {
  for (Vertex v : a) {
    check_vertex(graph_, v);
    graph_.rows_[v] |= b;
  }
  for (Vertex v : b) {
    check_vertex(graph_, v);
    graph_.rows_[v] |= a;
  }
  return *this;
}

Graph complete_graph(int n) {
  return GraphBuilder(n).add_clique(VertexSet::range(n)).build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph star_graph(int leaves) {
  GraphBuilder b(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.reserve(g.order());
  p.min_degree = g.order();
  for (Vertex v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    p.degrees.push_back(d);
    p.min_degree = std::min(p.min_degree, d);
    p.max_degree = std::max(p.max_degree, d);
  }
  return p;
}

VertexSet component_of(const Graph& g, Vertex seed, VertexSet removed) {
  VertexSet allowed = g.vertices() - removed;
  if (!allowed.contains(seed)) return {};
  VertexSet reached = VertexSet::singleton(seed);
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next = (next & allowed) - reached;
    reached |= next;
    frontier = next;
  }
  return reached;
}

std::vector<VertexSet> components(const Graph& g, VertexSet removed) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices() - removed;
  while (!rest.empty()) {
    VertexSet c = component_of(g, rest.front(), removed);
    out.push_back(c);
    rest -= c;
  }
  return out;
}

}  // namespace specconn
