#pragma once

// graph6 short form (n <= 62): one size byte n + 63, then the upper triangle
// in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per
// byte, most significant first, zero padded, each byte offset by 63.

#include <string>
#include <string_view>
#include <vector>

#include "shannon/errors.hpp"
#include "shannon/graph.hpp"

namespace shannon {

inline constexpr std::size_t kGraph6MaxOrder = 62;

inline std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder)
    throw LimitError("graph6 short form supports at most 62 vertices, got " +
                     std::to_string(n));
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, nbits = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw ParseError("graph6: byte out of range 63..126");
  }
  const std::size_t n = static_cast<unsigned char>(text[0]) - 63;
  if (n > kGraph6MaxOrder)
    throw ParseError("graph6: long form (n > 62) is not supported");
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() != expected)
    throw ParseError("graph6: expected " + std::to_string(expected) +
                     " bytes for n = " + std::to_string(n) + ", got " +
                     std::to_string(text.size()));

  std::vector<VertexSet> rows(n, VertexSet(n));
  std::size_t k = 0;
  auto bit = [&](std::size_t idx) {
    const int byte = static_cast<unsigned char>(text[1 + idx / 6]) - 63;
    return (byte >> (5 - idx % 6)) & 1;
  };
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if (bit(k)) {
        rows[i].set(j);
        rows[j].set(i);
      }
    }
  }
  for (; k < (expected - 1) * 6; ++k)
    if (bit(k)) throw ParseError("graph6: nonzero padding bits");
  return Graph(std::move(rows));
}

}  // namespace shannon
