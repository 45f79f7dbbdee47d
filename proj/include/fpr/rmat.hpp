#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "fpr/edge_set.hpp"
#include "fpr/rng.hpp"

namespace fpr {

// (a,b,c,d) defaults are the Graph500 reference settings.
struct RmatParams {
  std::uint32_t scale = 10;        // n = 2^scale
  std::uint64_t edge_factor = 20;  // edge draws = edge_factor * n
  double a = 0.57;
  double b = 0.19;
  double c = 0.19;
  double d = 0.05;
  std::uint64_t seed = 0;
};

inline void validate(const RmatParams& p) {
  if (p.scale == 0 || p.scale > 32) {
    throw std::invalid_argument("rmat: scale must be in [1,32], got " + std::to_string(p.scale));
  }
  if (p.edge_factor == 0) {
    throw std::invalid_argument("rmat: edge_factor must be positive");
  }
  if (p.a < 0 || p.b < 0 || p.c < 0 || p.d < 0 ||
      std::abs(p.a + p.b + p.c + p.d - 1.0) > 1e-9) {
    throw std::invalid_argument("rmat: quadrant probabilities must be non-negative and sum to 1");
  }
}

// Recursive-bisection R-MAT generator: each edge picks one quadrant per bit
// level with probabilities (a,b,c,d), scale levels deep. No per-level noise
// smoothing, so goldens for a fixed seed stay stable. Duplicates and
// self-loops are kept here; build_csr() removes them. Each edge draw runs on
// its own SplitMix64 split, so output is byte-identical for a fixed seed.
inline EdgeSet generate_rmat(const RmatParams& p) {
  validate(p);
  const std::uint64_t n = std::uint64_t{1} << p.scale;
  const std::uint64_t draws = p.edge_factor * n;

  const double ab = p.a + p.b;
  const double abc = p.a + p.b + p.c;

  EdgeSet es;
  es.n = n;
  es.edges.reserve(draws);

  SplitMix64 root(p.seed);
  for (std::uint64_t i = 0; i < draws; ++i) {
    SplitMix64 g = root.split();
    VertexId src = 0;
    VertexId dst = 0;
    for (std::uint32_t level = 0; level < p.scale; ++level) {
      const double r = g.next_unit();
      src <<= 1;
      dst <<= 1;
      if (r < p.a) {
        // top-left quadrant: both bits stay 0
      } else if (r < ab) {
        dst |= 1;
      } else if (r < abc) {
        src |= 1;
      } else {
        src |= 1;
        dst |= 1;
      }
    }
    es.edges.push_back({src, dst});
  }
  return es;
}

}  // namespace fpr
