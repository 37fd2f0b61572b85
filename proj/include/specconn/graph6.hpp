#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "specconn/graph.hpp"

namespace specconn {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// graph6 text for the labeled graph. Orders above 62 use the `~` size
/// header.
std::string graph6_encode(const Graph& g);

/// Strict decoder: no surrounding whitespace, no `>>graph6<<` prefix.
/// Throws Graph6Error on a malformed header, a payload of the wrong length,
/// bytes outside 63..126, or set padding bits.
Graph graph6_decode(std::string_view text);

}  // namespace specconn
