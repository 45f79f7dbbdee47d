#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fpr/edge_set.hpp"

namespace fpr {

// Immutable directed graph in compressed in-adjacency form.
//
// in_src holds the source vertex of every in-edge, grouped contiguously per
// destination: vertex u's in-neighbors are in_src[in_start[u] .. in_start[u+1]).
// Within each group, sources are sorted ascending, so layouts and sequential
// runs are reproducible. out_degree counts each vertex's surviving out-edges.
struct Graph {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<std::uint64_t> in_start;    // n + 1 entries, in_start[n] == m
  std::vector<VertexId> in_src;           // m entries
  std::vector<std::uint64_t> out_degree;  // n entries, sums to m

  std::uint64_t in_degree(VertexId u) const { return in_start[u + 1] - in_start[u]; }

  friend bool operator==(const Graph&, const Graph&) = default;
};

// Normalizes the edge set (drops duplicate edges and self-loops) and builds
// the in-adjacency CSR. Throws std::invalid_argument if an edge endpoint is
// outside [0, n), naming the offending edge.
inline Graph build_csr(const EdgeSet& raw) {
  const std::uint64_t n = raw.n;
  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    const Edge& e = raw.edges[i];
    if (e.src >= n || e.dst >= n) {
      throw std::invalid_argument("build_csr: edge #" + std::to_string(i) + " (" +
                                  std::to_string(e.src) + "," + std::to_string(e.dst) +
                                  ") has endpoint outside [0," + std::to_string(n) + ")");
    }
  }

  // Sort by (dst, src) so each destination's in-segment comes out contiguous
  // and ascending; dedup removes repeated edges, the filter removes loops.
  std::vector<std::pair<VertexId, VertexId>> by_dst;
  by_dst.reserve(raw.edges.size());
  for (const Edge& e : raw.edges) {
    if (e.src != e.dst) by_dst.emplace_back(e.dst, e.src);
  }
  std::sort(by_dst.begin(), by_dst.end());
  by_dst.erase(std::unique(by_dst.begin(), by_dst.end()), by_dst.end());

  Graph g;
  g.n = n;
  g.m = by_dst.size();
  g.in_start.assign(n + 1, 0);
  g.in_src.resize(g.m);
  g.out_degree.assign(n, 0);

  for (std::size_t s = 0; s < by_dst.size(); ++s) {
    g.in_start[by_dst[s].first + 1]++;
    g.in_src[s] = by_dst[s].second;
    g.out_degree[by_dst[s].second]++;
  }
  for (std::uint64_t u = 0; u < n; ++u) g.in_start[u + 1] += g.in_start[u];
  return g;
}

}  // namespace fpr
