#include "specconn/graph6.hpp"

namespace specconn {

namespace {

constexpr int kOffset = 63;

int payload_bytes(int n) {
  long bits = static_cast<long>(n) * (n - 1) / 2;
  return static_cast<int>((bits + 5) / 6);
}

int sextet(char c, std::size_t pos) {
  int value = static_cast<unsigned char>(c);
  if (value < kOffset || value > kOffset + 63) {
    throw Graph6Error("byte " + std::to_string(value) + " at offset " + std::to_string(pos) +
                      " is outside the printable graph6 range");
  }
  return value - kOffset;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.empty()) throw Graph6Error("empty graph6 record");
  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0], 0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    if (text.size() < 8) throw Graph6Error("truncated 8-byte size header");
    for (pos = 2; pos < 8; ++pos) n = (n << 6) | sextet(text[pos], pos);
  } else {
    if (text.size() < 4) throw Graph6Error("truncated 4-byte size header");
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | sextet(text[pos], pos);
  }
  if (n < 1 || n > Graph::kMaxOrder) {
    throw Graph6Error("graph order " + std::to_string(n) + " outside supported range 1..64");
  }
  const int order = static_cast<int>(n);
  const std::size_t expected = pos + payload_bytes(order);
  if (text.size() != expected) {
    throw Graph6Error("payload length " + std::to_string(text.size() - pos) + " for order " +
                      std::to_string(order) + ", expected " + std::to_string(expected - pos));
  }

  GraphBuilder b(order);
  int bit = 5;
  int chunk = expected > pos ? sextet(text[pos], pos) : 0;
  for (Vertex j = 1; j < order; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (bit < 0) {
        ++pos;
        chunk = sextet(text[pos], pos);
        bit = 5;
      }
      if ((chunk >> bit) & 1) b.add_edge(i, j);
      --bit;
    }
  }
  if (bit >= 0 && (chunk & ((1 << (bit + 1)) - 1)) != 0) {
    throw Graph6Error("non-zero padding bits in final byte");
  }
  return std::move(b).build();
}

}  // namespace specconn
