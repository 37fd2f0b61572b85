#include "specconn/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <stdexcept>

#include "specconn/canonical.hpp"
#include "specconn/graph6.hpp"

namespace specconn {

namespace {

std::vector<Graph> extend_by_one_vertex(const std::vector<Graph>& smaller, int n) {
  std::map<std::string, Graph> seen;
  const std::uint64_t masks = std::uint64_t{1} << (n - 1);
  for (const Graph& base : smaller) {
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      GraphBuilder b(n);
      for (auto [u, v] : base.edges()) b.add_edge(u, v);
      for (Vertex w : VertexSet(mask)) b.add_edge(n - 1, w);
      CanonicalLabeling canon = canonical_labeling(b.peek());
      std::string key = graph6_encode(canon.graph);
      seen.try_emplace(std::move(key), std::move(canon.graph));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [key, g] : seen) out.push_back(std::move(g));
  return out;
}

}  // namespace

const std::vector<Graph>& enumerate_graphs(int n) {
  if (n < 1 || n > kEnumerateMaxOrder) {
    throw std::invalid_argument("built-in enumeration covers orders 1.." +
                                std::to_string(kEnumerateMaxOrder) + "; ingest graph6 for order " +
                                std::to_string(n));
  }
  static std::mutex lock;
  static std::vector<std::vector<Graph>> cache;
  std::lock_guard guard(lock);
  if (cache.empty()) cache.push_back({Graph(1)});
  while (static_cast<int>(cache.size()) < n) {
    const int next = static_cast<int>(cache.size()) + 1;
    cache.push_back(extend_by_one_vertex(cache.back(), next));
  }
  return cache[n - 1];
}

std::vector<Graph> enumerate_connected(int n) {
  std::vector<Graph> out;
  for (const Graph& g : enumerate_graphs(n)) {
    if (g.connected()) out.push_back(g);
  }
  return out;
}

IngestResult ingest_graph6(std::istream& in) {
  IngestResult out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    std::string_view record = line;
    if (number == 1 && record.starts_with(">>graph6<<")) record.remove_prefix(10);
    if (record.empty()) continue;
    try {
      out.graphs.push_back(graph6_decode(record));
      out.lines.push_back(number);
    } catch (const Graph6Error& e) {
      out.errors.push_back({number, e.what()});
    }
  }
  return out;
}

IngestResult ingest_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph6 file '" + path + "'");
  return ingest_graph6(in);
}

}  // namespace specconn
