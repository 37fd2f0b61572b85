#include "specconn/spectral.hpp"

namespace specconn {

void validate(const CliqueJoinShape& shape) {
  if (shape.core < 0) throw std::invalid_argument("join core size must be >= 0");
  if (shape.parts.empty()) throw std::invalid_argument("clique join needs at least one part");
  for (int p : shape.parts) {
    if (p < 1) throw std::invalid_argument("clique part sizes must be >= 1");
  }
  if (shape.core == 0 && shape.parts.size() > 1) {
    throw std::invalid_argument("clique join with empty core and several parts is disconnected");
  }
  if (shape.order() > Graph::kMaxOrder) throw std::invalid_argument("clique join exceeds order 64");
}

Graph assemble(const CliqueJoinShape& shape) {
  validate(shape);
  GraphBuilder b(shape.order());
  const VertexSet core = VertexSet::range(shape.core);
  b.add_clique(core);
  int next = shape.core;
  for (int size : shape.parts) {
    VertexSet part = VertexSet::range(next + size) - VertexSet::range(next);
    b.add_clique(part);
    b.add_biclique(core, part);
    next += size;
  }
  return std::move(b).build();
}

std::string to_string(PerronRelation r) {
  switch (r) {
    case PerronRelation::u_dominates: return "u-dominates";
    case PerronRelation::v_dominates: return "v-dominates";
    case PerronRelation::twins: return "twins";
    case PerronRelation::incomparable: return "incomparable";
  }
  return "unknown";
}

PerronComparison perron_compare(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("perron_compare needs two distinct vertices");
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
    throw std::out_of_range("perron_compare vertex out of range");
  }
  if (!g.connected()) throw std::invalid_argument("perron_compare needs a connected graph");

  const VertexSet nu = g.neighbors(u) - VertexSet::singleton(v);
  const VertexSet nv = g.neighbors(v) - VertexSet::singleton(u);

  PerronComparison out;
  if (nu == nv) {
    out.relation = PerronRelation::twins;
  } else if (nv.subset_of(nu)) {
    out.relation = PerronRelation::u_dominates;
  } else if (nu.subset_of(nv)) {
    out.relation = PerronRelation::v_dominates;
  }

  const auto spec = spectral_radius(g);
  out.x_u = spec.perron(u);
  out.x_v = spec.perron(v);
  const double scale = std::max(std::abs(out.x_u), std::abs(out.x_v));
  switch (out.relation) {
    case PerronRelation::twins:
      out.consistent = std::abs(out.x_u - out.x_v) <= 1e-9 * scale;
      break;
    case PerronRelation::u_dominates:
      out.consistent = out.x_u > out.x_v;
      break;
    case PerronRelation::v_dominates:
      out.consistent = out.x_v > out.x_u;
      break;
    case PerronRelation::incomparable:
      break;
  }
  return out;
}

}  // namespace specconn
