#include "quipu/graph6.hpp"

#include <stdexcept>

namespace quipu {

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    // Long form: '~' then the order in three 6-bit groups, high bits first.
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(const std::string& text) {
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size())
      throw std::invalid_argument("graph6: truncated input");
    unsigned char c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6: byte out of printable range at position " +
                                  std::to_string(pos - 1));
    return c - 63;
  };
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  long n = next();
  if (n == 63) {  // long form ('~' prefix)
    long a = next(), b = next(), c = next();
    if (a == 63)
      throw std::invalid_argument("graph6: very long form (n > 258047) not supported");
    n = (a << 12) | (b << 6) | c;
  }
  if (n > Graph::kMaxVertices)
    throw std::invalid_argument("graph6: order " + std::to_string(n) +
                                " exceeds the 64-vertex limit");
  Graph g(static_cast<int>(n));
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits == 0) {
        acc = next();
        bits = 6;
      }
      if (acc & (1 << (bits - 1))) g.add_edge(i, j);
      --bits;
    }
  }
  if (pos != text.size())
    throw std::invalid_argument("graph6: trailing characters after bit section");
  return g;
}

}  // namespace quipu
