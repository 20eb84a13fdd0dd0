#include "decycle/graph_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace decycle {

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  auto sextet = [&](std::size_t pos) {
    if (pos >= text.size()) throw Graph6Error(pos, "unexpected end of input");
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw Graph6Error(pos, "byte " + std::to_string(c) + " outside 63..126");
    return c - 63;
  };

  std::size_t pos = 0;
  int n = sextet(pos);
  if (n == 63) {
    if (pos + 1 < text.size() && text[pos + 1] == '~') throw Graph6Error(pos + 1, "orders above 258047 unsupported");
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | sextet(++pos);
  }
  ++pos;
  if (n > kMaxVertices) throw Graph6Error(0, "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() != pos + body)
    throw Graph6Error(std::min(text.size(), pos + body),
                      "expected " + std::to_string(pos + body) + " bytes, got " + std::to_string(text.size()));

  GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int group = sextet(pos + k / 6);
      if ((group >> (5 - static_cast<int>(k % 6))) & 1) b.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const int group = sextet(pos + k / 6);
    if (group & ((1 << (6 - k % 6)) - 1)) throw Graph6Error(pos + k / 6, "nonzero padding bits");
  }
  return b.build();
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
  long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("edge list: bad header, expected \"n m\"");
  if (n > kMaxVertices) throw std::length_error("edge list: order " + std::to_string(n) + " exceeds 64");
  GraphBuilder b(static_cast<int>(n));
  for (long e = 0; e < m; ++e) {
    long u = -1, v = -1;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: missing edge " + std::to_string(e + 1));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge list: edge " + std::to_string(e + 1) + " has an endpoint outside 0.." +
                                  std::to_string(n - 1));
    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return b.build();
}

}  // namespace decycle
