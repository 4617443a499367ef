#pragma once

// Reproducible random graphs. The generator is SplitMix64:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// random_graph draws, in this order: n = min_n + next() % (max_n - min_n + 1);
// q = {0.2, 0.5, 0.8}[next() % 3]; then for u = 0..n-1, v = u+1..n-1 one draw
// each, with edge {u, v} present iff (next() >> 11) * 2^-53 < q.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "shannon/graph.hpp"

namespace shannon {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

inline constexpr std::array<double, 3> kEdgeProbabilities{0.2, 0.5, 0.8};

inline Graph random_graph(SplitMix64& rng, std::size_t max_n, std::size_t min_n = 1) {
  if (min_n > max_n) throw std::invalid_argument("random_graph: min_n > max_n");
  const std::size_t n = min_n + static_cast<std::size_t>(rng.next() % (max_n - min_n + 1));
  const double q = kEdgeProbabilities[rng.next() % kEdgeProbabilities.size()];
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.uniform() < q) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace shannon
