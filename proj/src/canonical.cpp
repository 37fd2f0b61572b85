#include "specconn/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "specconn/graph6.hpp"

namespace specconn {

namespace {

// Ordered partition as a colour per vertex; colours 0..cells-1 give the cell
// order.
using Colouring = std::vector<int>;

int cell_count(const Colouring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// 1-dimensional Weisfeiler-Leman refinement. New cells are ordered by
// (old colour, neighbour count per colour), so the result commutes with
// relabeling.
void refine(const Graph& g, Colouring& colour) {
  const int n = g.order();
  int cells = cell_count(colour);
  std::vector<std::vector<int>> signature(n);
  std::vector<int> idx(n);
  while (cells < n) {
    for (Vertex v = 0; v < n; ++v) {
      auto& sig = signature[v];
      sig.assign(cells + 1, 0);
      sig[0] = colour[v];
      for (Vertex w : g.neighbors(v)) ++sig[colour[w] + 1];
    }
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return signature[a] < signature[b]; });
    int next = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && signature[idx[i]] != signature[idx[i - 1]]) ++next;
      colour[idx[i]] = next;
    }
    if (next + 1 == cells) break;
    cells = next + 1;
  }
}

Colouring individualize(const Colouring& colour, Vertex v) {
  Colouring out = colour;
  const int c = colour[v];
  for (std::size_t w = 0; w < out.size(); ++w) {
    if (colour[w] > c || (colour[w] == c && static_cast<Vertex>(w) != v)) ++out[w];
  }
  return out;
}

struct Leaf {
  std::vector<Vertex> path;
  std::vector<Vertex> relabel;
  std::vector<std::uint64_t> key;
};

class LabelSearch {
 public:
  explicit LabelSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    Colouring root(n_, 0);
    refine(g_, root);
    std::vector<Vertex> path;
    descend(root, path);
    CanonicalLabeling out{best_->relabel, g_.relabeled(best_->relabel), std::move(autos_)};
    return out;
  }

 private:
  static constexpr int kNoAbort = -1;

  // Returns kNoAbort, or the depth of the ancestor whose child loop should
  // resume.
  int descend(const Colouring& colour, std::vector<Vertex>& path) {
    const int cells = cell_count(colour);
    if (cells == n_) return leaf(colour, path);

    std::vector<int> size(cells, 0);
    for (int c : colour) ++size[c];
    const int target = static_cast<int>(
        std::find_if(size.begin(), size.end(), [](int s) { return s > 1; }) - size.begin());

    const int depth = static_cast<int>(path.size());
    std::vector<Vertex> explored;
    for (Vertex w = 0; w < n_; ++w) {
      if (colour[w] != target) continue;
      if (!explored.empty() && equivalent_to_explored(path, explored, w)) continue;
      explored.push_back(w);
      path.push_back(w);
      Colouring child = individualize(colour, w);
      refine(g_, child);
      int abort_to = descend(child, path);
      path.pop_back();
      if (abort_to != kNoAbort && abort_to < depth) return abort_to;
    }
    return kNoAbort;
  }

  int leaf(const Colouring& colour, const std::vector<Vertex>& path) {
    Leaf current;
    current.path = path;
    current.relabel.assign(colour.begin(), colour.end());
    current.key.assign(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      std::uint64_t row = 0;
      for (Vertex w : g_.neighbors(v)) row |= std::uint64_t{1} << colour[w];
      current.key[colour[v]] = row;
    }

    if (!first_) {
      first_ = current;
      best_ = current;
      return kNoAbort;
    }
    if (current.key == first_->key) return record_automorphism(*first_, current);
    if (current.key > best_->key) {
      best_ = std::move(current);
      return kNoAbort;
    }
    if (current.key == best_->key) return record_automorphism(*best_, current);
    return kNoAbort;
  }

  // `a` and `b` have identical relabeled graphs, so b^-1 . a is an
  // automorphism mapping a's path onto b's. Both subtrees below their common
  // ancestor are images of each other.
  int record_automorphism(const Leaf& a, const Leaf& b) {
    std::vector<Vertex> position_to_b(n_);
    for (Vertex v = 0; v < n_; ++v) position_to_b[b.relabel[v]] = v;
    std::vector<Vertex> gamma(n_);
    for (Vertex v = 0; v < n_; ++v) gamma[v] = position_to_b[a.relabel[v]];
    autos_.push_back(std::move(gamma));

    int common = 0;
    while (common < static_cast<int>(a.path.size()) && common < static_cast<int>(b.path.size()) &&
           a.path[common] == b.path[common]) {
      ++common;
    }
    return common;
  }

  // True if some known automorphism fixing `path` pointwise links w to an
  // explored sibling.
  bool equivalent_to_explored(const std::vector<Vertex>& path, const std::vector<Vertex>& explored,
                              Vertex w) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gamma : autos_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](Vertex p) { return gamma[p] == p; });
      if (!fixes) continue;
      any = true;
      for (Vertex v = 0; v < n_; ++v) parent[find(v)] = find(gamma[v]);
    }
    if (!any) return false;
    const Vertex root = find(w);
    return std::any_of(explored.begin(), explored.end(), [&](Vertex e) { return find(e) == root; });
  }

  const Graph& g_;
  const int n_;
  std::optional<Leaf> first_;
  std::optional<Leaf> best_;
  std::vector<std::vector<Vertex>> autos_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return LabelSearch(g).run(); }

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw std::domain_error("canonical form supports order <= " +
                            std::to_string(kCanonicalMaxOrder) + ", got " +
                            std::to_string(g.order()));
  }
  return {graph6_encode(canonical_labeling(g).graph)};
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace specconn
