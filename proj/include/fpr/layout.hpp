#pragma once

#include <cstdint>
#include <vector>

#include "fpr/graph.hpp"

namespace fpr {

// Edge-centric storage: one contribution slot per in-edge, addressed two ways.
//
// contribution_list mirrors in_src slot-for-slot (grouped per destination),
// holding the value each in-edge carries. offset_list is grouped per source
// vertex in out-edge traversal order: entry k in u's segment
// [out_start[u], out_start[u+1]) is the contribution_list slot that u's k-th
// out-edge writes. offset_list is a permutation of [0, m); every slot has
// exactly one writer, the edge's source.
struct EdgeCentricLayout {
  std::vector<double> contribution_list;  // m values
  std::vector<SlotId> offset_list;        // m slot indices
  std::vector<std::uint64_t> out_start;   // n + 1 offsets
};

// Builds the offset permutation from the in-adjacency CSR. Walking the
// destinations in ascending order places each source's segment entries in
// ascending destination order. contribution_list starts zeroed.
inline EdgeCentricLayout build_layout(const Graph& g) {
  EdgeCentricLayout layout;
  layout.contribution_list.assign(g.m, 0.0);
  layout.offset_list.resize(g.m);
  layout.out_start.assign(g.n + 1, 0);

  for (std::uint64_t u = 0; u < g.n; ++u) {
    layout.out_start[u + 1] = layout.out_start[u] + g.out_degree[u];
  }

  std::vector<std::uint64_t> cursor(layout.out_start.begin(), layout.out_start.end() - 1);
  for (std::uint64_t w = 0; w < g.n; ++w) {
    for (SlotId s = g.in_start[w]; s < g.in_start[w + 1]; ++s) {
      const VertexId u = g.in_src[s];
      layout.offset_list[cursor[u]++] = s;
    }
  }
  return layout;
}

}  // namespace fpr
