#include <gtest/gtest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "fpr/graph.hpp"
#include "fpr/layout.hpp"
#include "fpr/rng.hpp"
#include "test_util.hpp"

using namespace fpr;

namespace {

void expect_graph_invariants(const Graph& g) {
  ASSERT_EQ(g.in_start.size(), g.n + 1);
  ASSERT_EQ(g.in_src.size(), g.m);
  ASSERT_EQ(g.out_degree.size(), g.n);
  EXPECT_EQ(g.in_start.front(), 0u);
  EXPECT_EQ(g.in_start.back(), g.m);
  for (std::uint64_t u = 0; u < g.n; ++u) {
    EXPECT_LE(g.in_start[u], g.in_start[u + 1]);
  }
  std::vector<std::uint64_t> counted(g.n, 0);
  for (VertexId v : g.in_src) {
    ASSERT_LT(v, g.n);
    counted[v]++;
  }
  for (std::uint64_t u = 0; u < g.n; ++u) {
    EXPECT_EQ(counted[u], g.out_degree[u]);
  }
  EXPECT_EQ(std::accumulate(g.out_degree.begin(), g.out_degree.end(), std::uint64_t{0}), g.m);
}

}  // namespace

TEST(BuildCsr, ThreeSourcesOneSink) {
  EdgeSet es{4, {{0, 3}, {1, 3}, {2, 3}}};
  Graph g = build_csr(es);
  EXPECT_EQ(g.n, 4u);
  EXPECT_EQ(g.m, 3u);
  EXPECT_EQ(g.in_start, (std::vector<std::uint64_t>{0, 0, 0, 0, 3}));
  EXPECT_EQ(g.in_src, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(g.out_degree, (std::vector<std::uint64_t>{1, 1, 1, 0}));
}

TEST(BuildCsr, DropsDuplicatesAndSelfLoops) {
  EdgeSet es{2, {{0, 1}, {0, 1}, {1, 1}}};
  Graph g = build_csr(es);
  EXPECT_EQ(g.m, 1u);
  EXPECT_EQ(g.in_src, (std::vector<VertexId>{0}));
  EXPECT_EQ(g.out_degree, (std::vector<std::uint64_t>{1, 0}));
}

TEST(BuildCsr, EmptyGraph) {
  EdgeSet es{1, {}};
  Graph g = build_csr(es);
  EXPECT_EQ(g.in_start, (std::vector<std::uint64_t>{0, 0}));
  EXPECT_EQ(g.m, 0u);
  EXPECT_EQ(g.out_degree, (std::vector<std::uint64_t>{0}));
}

TEST(BuildCsr, RejectsOutOfRangeVertex) {
  EdgeSet es{2, {{0, 1}, {0, 2}}};
  try {
    build_csr(es);
    FAIL() << "expected std::invalid_argument";
  } catch (const std::invalid_argument& e) {
    // Diagnostic names the offending edge.
    EXPECT_NE(std::string(e.what()).find("(0,2)"), std::string::npos) << e.what();
  }
}

TEST(BuildCsr, InSegmentsSortedAscending) {
  EdgeSet es{5, {{4, 0}, {2, 0}, {3, 0}, {1, 0}}};
  Graph g = build_csr(es);
  EXPECT_EQ(g.in_src, (std::vector<VertexId>{1, 2, 3, 4}));
}

TEST(BuildCsr, IdempotentOnNormalizedInput) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    EdgeSet raw = testutil::random_edge_set(1 + rng.next() % 30, 0.3, rng);
    Graph g1 = build_csr(raw);
    // Rebuild from the normalized edge list: (src, dst) pairs recovered
    // from the CSR itself.
    EdgeSet normalized;
    normalized.n = g1.n;
    for (VertexId w = 0; w < g1.n; ++w) {
      for (SlotId s = g1.in_start[w]; s < g1.in_start[w + 1]; ++s) {
        normalized.edges.push_back({g1.in_src[s], w});
      }
    }
    Graph g2 = build_csr(normalized);
    EXPECT_EQ(g1, g2);
  }
}

TEST(BuildLayout, FigureFragmentSlots) {
  // Vertex 3's inlinks {0,1,2} land in contribution slots {3,4,5}; those
  // slot indices surface inside the out-segments of vertices 0, 1, 2.
  EdgeSet es{4, {{3, 0}, {3, 1}, {3, 2}, {0, 3}, {1, 3}, {2, 3}}};
  Graph g = build_csr(es);
  ASSERT_EQ(g.m, 6u);
  EXPECT_EQ(g.in_start, (std::vector<std::uint64_t>{0, 1, 2, 3, 6}));
  EXPECT_EQ(g.in_src, (std::vector<VertexId>{3, 3, 3, 0, 1, 2}));

  EdgeCentricLayout layout = build_layout(g);
  for (VertexId u : {0, 1, 2}) {
    ASSERT_EQ(layout.out_start[u + 1] - layout.out_start[u], 1u);
    const SlotId slot = layout.offset_list[layout.out_start[u]];
    EXPECT_EQ(slot, 3 + u);       // u's single out-edge writes slot 3+u
    EXPECT_EQ(g.in_src[slot], u); // and that slot's recorded writer is u
  }
  // Vertex 3's out-segment covers the three remaining slots 0,1,2.
  EXPECT_EQ((std::vector<SlotId>{layout.offset_list.begin() + 3, layout.offset_list.end()}),
            (std::vector<SlotId>{0, 1, 2}));
}

TEST(BuildLayout, TwoCycle) {
  EdgeSet es{2, {{0, 1}, {1, 0}}};
  Graph g = build_csr(es);
  EXPECT_EQ(g.in_src, (std::vector<VertexId>{1, 0}));
  EdgeCentricLayout layout = build_layout(g);
  EXPECT_EQ(layout.offset_list, (std::vector<SlotId>{1, 0}));
  EXPECT_EQ(layout.contribution_list, (std::vector<double>{0.0, 0.0}));
}

TEST(BuildLayout, EmptyGraph) {
  Graph g = build_csr({3, {}});
  EdgeCentricLayout layout = build_layout(g);
  EXPECT_TRUE(layout.contribution_list.empty());
  EXPECT_TRUE(layout.offset_list.empty());
  EXPECT_EQ(layout.out_start, (std::vector<std::uint64_t>{0, 0, 0, 0}));
}

// Permutation + single-writer ownership over random graphs.
TEST(BuildLayout, PermutationAndOwnership) {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint64_t n = 1 + rng.next() % 1000;
    Graph g = build_csr(testutil::random_sparse(n, 4, rng));
    EdgeCentricLayout layout = build_layout(g);

    std::vector<int> visits(g.m, 0);
    for (VertexId u = 0; u < g.n; ++u) {
      for (std::uint64_t k = layout.out_start[u]; k < layout.out_start[u + 1]; ++k) {
        const SlotId s = layout.offset_list[k];
        ASSERT_LT(s, g.m);
        visits[s]++;
        ASSERT_EQ(g.in_src[s], u);  // slot's single writer is the edge source
      }
    }
    for (std::uint64_t s = 0; s < g.m; ++s) ASSERT_EQ(visits[s], 1);
  }
}

TEST(BuildLayout, SegmentsAscendByDestination) {
  SplitMix64 rng(23);
  Graph g = build_csr(testutil::random_edge_set(64, 0.2, rng));
  EdgeCentricLayout layout = build_layout(g);
  // Slot indices grow with destination id, so within one source's segment
  // ascending destination order means ascending slot order.
  for (VertexId u = 0; u < g.n; ++u) {
    for (std::uint64_t k = layout.out_start[u] + 1; k < layout.out_start[u + 1]; ++k) {
      EXPECT_LT(layout.offset_list[k - 1], layout.offset_list[k]);
    }
  }
}

TEST(GraphInvariants, RandomCorpus) {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    EdgeSet es = testutil::random_edge_set(1 + rng.next() % 50, 0.25, rng);
    Graph g = build_csr(es);
    expect_graph_invariants(g);
  }
}
