#include "specconn/families.hpp"

#include <numeric>

namespace specconn {

std::string to_string(FamilyId id) {
  switch (id) {
    case FamilyId::delta0: return "delta0";
    case FamilyId::deltamg_g: return "deltamg-g";
    case FamilyId::km1_dmkp1: return "km1";
    case FamilyId::zero_delta: return "zero-delta";
    case FamilyId::join_vi: return "join-vi";
  }
  return "unknown";
}

FamilyId parse_family(const std::string& text) {
  for (FamilyId id : {FamilyId::delta0, FamilyId::deltamg_g, FamilyId::km1_dmkp1,
                      FamilyId::zero_delta, FamilyId::join_vi}) {
    if (text == to_string(id)) return id;
  }
  throw std::invalid_argument("unknown family '" + text +
                              "' (expected delta0, deltamg-g, km1, zero-delta or join-vi)");
}

namespace {

int big_clique(const FamilyParams& p) { return p.n - (p.r - 1) * (p.g + 1) - p.k; }

int join_vi_big(const FamilyParams& p) { return p.n - p.k - (p.delta - p.k + 1) * (p.r - 1); }

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : "; ") + s;
  return out;
}

}  // namespace

std::vector<std::string> structural_violations(const FamilyParams& p) {
  std::vector<std::string> v;
  auto need = [&](bool ok, const char* what) {
    if (!ok) v.emplace_back(what);
  };
  need(p.r >= 2, "r >= 2");
  need(p.g >= 0, "g >= 0");
  need(p.k >= 1, "k >= 1");
  need(p.delta >= 1, "delta >= 1");
  need(p.n >= p.k + p.r * (p.g + 1), "n >= k + r(g+1)");
  need(p.n <= Graph::kMaxOrder, "n <= 64");
  if (!v.empty()) return v;

  switch (p.family) {
    case FamilyId::delta0:
      need(p.delta <= p.k - 1, "delta0: delta <= k-1");
      break;
    case FamilyId::deltamg_g:
      need(p.delta >= p.g, "deltamg-g: delta >= g");
      need(p.delta - p.g <= p.k, "deltamg-g: delta-g <= k");
      break;
    case FamilyId::km1_dmkp1:
      need(p.k <= p.delta + 1, "km1: delta-k+1 >= 0");
      need(p.delta - p.k + 1 <= big_clique(p), "km1: delta-k+1 <= n-(r-1)(g+1)-k");
      break;
    case FamilyId::zero_delta:
      need(p.k == 1, "zero-delta: k = 1");
      need(p.r <= p.delta, "zero-delta: r <= delta");
      need(p.delta - p.r + 1 <= big_clique(p), "zero-delta: delta-r+1 <= n-(r-1)(g+1)-1");
      break;
    case FamilyId::join_vi:
      need(p.delta >= p.k, "join-vi: delta >= k");
      need(join_vi_big(p) >= p.delta - p.k + 1, "join-vi: n-k-(delta-k+1)(r-1) >= delta-k+1");
      break;
  }
  return v;
}

std::vector<std::string> feasibility_violations(const FamilyParams& p) {
  std::vector<std::string> v = structural_violations(p);
  if (p.r < 2 || p.g < 0 || p.k < 1 || p.delta < 1 || p.n < p.k + p.r * (p.g + 1)) return v;
  auto need = [&](bool ok, const char* what) {
    if (!ok) v.emplace_back(what);
  };
  switch (p.family) {
    case FamilyId::delta0:
      need(p.delta < p.g, "delta0: delta < g");
      break;
    case FamilyId::deltamg_g:
      // With g = 0 the K_g block is empty and N(u) alone separates u.
      if (p.g == 0 && p.r == 2) need(p.k <= p.delta, "deltamg-g: k <= delta when g = 0, r = 2");
      break;
    case FamilyId::km1_dmkp1:
      need(p.k >= 2, "km1: k >= 2");
      need(p.k <= p.delta, "km1: k <= delta");
      need(p.delta < p.g, "km1: delta < g");
      break;
    case FamilyId::zero_delta:
      need(p.delta < p.g, "zero-delta: delta < g");
      break;
    case FamilyId::join_vi:
      need(p.delta >= p.g + p.k, "join-vi: delta >= g+k");
      break;
  }
  return v;
}

bool feasible(const FamilyParams& p) { return feasibility_violations(p).empty(); }

CliqueJoinShape join_vi_shape(const FamilyParams& p) {
  if (auto v = structural_violations(p); !v.empty()) throw InfeasibleParams(join(v));
  if (p.family != FamilyId::join_vi) throw std::invalid_argument("not a join-vi parameter set");
  CliqueJoinShape shape{p.k, {join_vi_big(p)}};
  shape.parts.insert(shape.parts.end(), p.r - 1, p.delta - p.k + 1);
  return shape;
}

FamilyGraph construct(const FamilyParams& p) {
  if (auto v = structural_violations(p); !v.empty()) throw InfeasibleParams(join(v));

  if (p.family == FamilyId::join_vi) {
    const CliqueJoinShape shape = join_vi_shape(p);
    FamilyGraph out{assemble(shape), VertexSet::range(p.k), std::nullopt, {}};
    out.blocks.push_back(shape.core);
    out.blocks.insert(out.blocks.end(), shape.parts.begin(), shape.parts.end());
    return out;
  }

  // Block sizes after u, in label order: core, big clique, small parts.
  const int big = big_clique(p);
  int core = 0;
  std::vector<int> small;
  switch (p.family) {
    case FamilyId::delta0:
    case FamilyId::km1_dmkp1:
    case FamilyId::zero_delta:
      core = p.k - 1;
      small.assign(p.r - 1, p.g + 1);
      break;
    case FamilyId::deltamg_g:
      core = p.k;
      small.assign(p.r - 2, p.g + 1);
      small.push_back(p.g);
      break;
    case FamilyId::join_vi:
      break;
  }

  GraphBuilder b(p.n);
  const Vertex u = 0;
  auto block = [](int start, int size) {
    return VertexSet::range(start + size) - VertexSet::range(start);
  };
  auto lowest = [](VertexSet s, int count) {
    VertexSet out;
    for (Vertex v : s) {
      if (count-- <= 0) break;
      out.insert(v);
    }
    return out;
  };

  const VertexSet core_set = block(1, core);
  const VertexSet big_set = block(1 + core, big);
  b.add_clique(core_set);
  b.add_clique(big_set);
  b.add_biclique(core_set, big_set);
  std::vector<VertexSet> small_sets;
  int next = 1 + core + big;
  for (int size : small) {
    const VertexSet s = block(next, size);
    b.add_clique(s);
    b.add_biclique(core_set, s);
    small_sets.push_back(s);
    next += size;
  }

  VertexSet attach;
  VertexSet witness;
  switch (p.family) {
    case FamilyId::delta0:
      attach = lowest(core_set, p.delta);
      witness = core_set | VertexSet::singleton(u);
      break;
    case FamilyId::deltamg_g:
      attach = lowest(core_set, p.delta - p.g) | small_sets.back();
      witness = core_set;
      break;
    case FamilyId::km1_dmkp1:
      attach = core_set | lowest(big_set, p.delta - p.k + 1);
      witness = core_set | VertexSet::singleton(u);
      break;
    case FamilyId::zero_delta:
      attach = lowest(big_set, p.delta - p.r + 1);
      for (VertexSet s : small_sets) attach.insert(s.front());
      witness = VertexSet::singleton(u);
      break;
    case FamilyId::join_vi:
      break;
  }
  b.add_biclique(VertexSet::singleton(u), attach);

  FamilyGraph out{std::move(b).build(), witness, u, {1, core, big}};
  out.blocks.insert(out.blocks.end(), small.begin(), small.end());
  return out;
}

std::vector<int> matching_cases(int k, int delta, int g) {
  std::vector<int> cases;
  if (k > delta && delta < g) cases.push_back(1);
  if (k > delta && delta >= g) cases.push_back(2);
  if (2 <= k && k <= delta && delta < g) cases.push_back(3);
  if (k == 1 && k <= delta && delta < g) cases.push_back(4);
  if (k <= delta && g <= delta && delta < g + k) cases.push_back(5);
  if (delta >= g + k) cases.push_back(6);
  return cases;
}

int extremal_case(int k, int delta, int g) {
  const auto cases = matching_cases(k, delta, g);
  if (cases.size() != 1) {
    throw CoverageError("(k=" + std::to_string(k) + ", delta=" + std::to_string(delta) +
                        ", g=" + std::to_string(g) + ") matches " +
                        std::to_string(cases.size()) + " extremal cases");
  }
  return cases.front();
}

FamilyParams claimed_extremal(int n, int k, int delta, int g, int r) {
  if (k < 1) throw InfeasibleParams("k >= 1");
  if (n < k + r * (g + 1)) throw InfeasibleParams("n >= k + r(g+1)");
  static constexpr FamilyId by_case[] = {FamilyId::delta0,     FamilyId::deltamg_g,
                                         FamilyId::km1_dmkp1,  FamilyId::zero_delta,
                                         FamilyId::deltamg_g,  FamilyId::join_vi};
  return {by_case[extremal_case(k, delta, g) - 1], n, k, delta, g, r};
}

FamilyGraph neighbor_extremal_family(int n, int kappa_g, int delta, int g) {
  return construct(claimed_extremal(n, kappa_g, delta, g, 2));
}

}  // namespace specconn
