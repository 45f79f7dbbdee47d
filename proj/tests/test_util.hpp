#pragma once

#include <cstdint>
#include <vector>

#include "fpr/edge_set.hpp"
#include "fpr/rng.hpp"

namespace fpr::testutil {

// Bernoulli-density random directed graph over [0, n), no self-loops.
inline EdgeSet random_edge_set(std::uint64_t n, double density, SplitMix64& rng) {
  EdgeSet es;
  es.n = n;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v && rng.next_unit() < density) es.edges.push_back({u, v});
    }
  }
  return es;
}

// As above but every vertex keeps at least one out-edge (no dangling mass).
inline EdgeSet random_dangling_free(std::uint64_t n, double density, SplitMix64& rng) {
  EdgeSet es = random_edge_set(n, density, rng);
  std::vector<bool> has_out(n, false);
  for (const Edge& e : es.edges) has_out[e.src] = true;
  for (VertexId u = 0; u < n; ++u) {
    if (!has_out[u] && n > 1) es.edges.push_back({u, (u + 1) % n});
  }
  return es;
}

// Directed cycle plus random chords: strongly connected by construction.
inline EdgeSet random_strongly_connected(std::uint64_t n, double density, SplitMix64& rng) {
  EdgeSet es;
  es.n = n;
  for (VertexId u = 0; u < n; ++u) es.edges.push_back({u, (u + 1) % n});
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v && rng.next_unit() < density) es.edges.push_back({u, v});
    }
  }
  return es;
}

// Sparse random graph with a target average out-degree, for larger n where
// the dense Bernoulli sweep would be quadratic.
inline EdgeSet random_sparse(std::uint64_t n, std::uint64_t avg_degree, SplitMix64& rng,
                             bool dangling_free = false) {
  EdgeSet es;
  es.n = n;
  const std::uint64_t m = n * avg_degree;
  for (std::uint64_t i = 0; i < m; ++i) {
    const VertexId u = rng.next() % n;
    const VertexId v = rng.next() % n;
    if (u != v) es.edges.push_back({u, v});
  }
  if (dangling_free && n > 1) {
    std::vector<bool> has_out(n, false);
    for (const Edge& e : es.edges) has_out[e.src] = true;
    for (VertexId u = 0; u < n; ++u) {
      if (!has_out[u]) es.edges.push_back({u, (u + 1) % n});
    }
  }
  return es;
}

}  // namespace fpr::testutil
