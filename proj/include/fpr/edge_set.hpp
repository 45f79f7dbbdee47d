#pragma once

#include <cstdint>
#include <vector>

namespace fpr {

using VertexId = std::uint64_t;
using SlotId = std::uint64_t;

struct Edge {
  VertexId src = 0;
  VertexId dst = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Raw directed edge list over the dense vertex range [0, n). May still
// contain duplicates and self-loops; build_csr() drops both.
struct EdgeSet {
  std::uint64_t n = 0;
  std::vector<Edge> edges;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
};

}  // namespace fpr
