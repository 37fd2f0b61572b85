#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "specconn/graph.hpp"

namespace specconn {

/// Largest order produced by the built-in generator.
inline constexpr int kEnumerateMaxOrder = 8;

/// One canonically labeled representative per isomorphism class of graphs of
/// order n (connected or not), sorted by canonical graph6.
///
/// Order n is grown from order n-1 by adding a vertex with every possible
/// neighbourhood and keeping one copy per canonical form. Results are cached
/// per process. Throws std::invalid_argument above kEnumerateMaxOrder.
const std::vector<Graph>& enumerate_graphs(int n);

/// The connected subset of enumerate_graphs(n).
std::vector<Graph> enumerate_connected(int n);

struct IngestError {
  std::size_t line = 0;
  std::string message;
};

struct IngestResult {
  std::vector<Graph> graphs;
  /// 1-based source line of each entry in `graphs`.
  std::vector<std::size_t> lines;
  std::vector<IngestError> errors;
};

/// Reads one graph6 record per line. Blank lines and a leading `>>graph6<<`
/// marker are skipped; bad records are collected in `errors`.
IngestResult ingest_graph6(std::istream& in);
/// Throws std::runtime_error when the file cannot be opened.
IngestResult ingest_graph6_file(const std::string& path);

}  // namespace specconn
