#pragma once

#include <atomic>
#include <barrier>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "fpr/graph.hpp"
#include "fpr/layout.hpp"

namespace fpr {

struct PageRankConfig {
  double damping = 0.85;
  double threshold = 1e-15;
  std::uint64_t max_iterations = 10000;
  unsigned thread_count = 1;  // parallel engines only
};

struct RankVector {
  std::vector<double> values;
  double final_error = 1.0;  // before any iteration ran
};

struct ConvergenceTrace {
  std::vector<double> errors;  // max per-vertex delta, one entry per iteration
  std::uint64_t iterations = 0;
  bool converged = false;
};

struct PageRankResult {
  RankVector ranks;
  ConvergenceTrace trace;
};

inline void validate(const PageRankConfig& cfg) {
  if (!(cfg.damping > 0.0 && cfg.damping < 1.0)) {
    throw std::invalid_argument("pagerank: damping must be in (0,1)");
  }
  if (!(cfg.threshold > 0.0)) {
    throw std::invalid_argument("pagerank: threshold must be positive");
  }
  if (cfg.max_iterations == 0) {
    throw std::invalid_argument("pagerank: max_iterations must be positive");
  }
  if (cfg.thread_count == 0) {
    throw std::invalid_argument("pagerank: thread_count must be positive");
  }
}

inline RankVector init_ranks(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("pagerank: graph has no vertices");
  RankVector ranks;
  ranks.values.assign(n, 1.0 / static_cast<double>(n));
  ranks.final_error = 1.0;
  return ranks;
}

// Writes ranks[u] / out_degree[u] into every slot owned by u. Dangling
// vertices have empty out-segments, so no division happens for them.
inline void scatter_contributions(const Graph& g, EdgeCentricLayout& layout,
                                  const std::vector<double>& ranks) {
  for (VertexId u = 0; u < g.n; ++u) {
    if (g.out_degree[u] == 0) continue;
    const double contribution = ranks[u] / static_cast<double>(g.out_degree[u]);
    for (std::uint64_t k = layout.out_start[u]; k < layout.out_start[u + 1]; ++k) {
      layout.contribution_list[layout.offset_list[k]] = contribution;
    }
  }
}

// One Jacobi gather: new_values[u] = (1-d)/n + d * sum of u's slots.
// Returns the max per-vertex delta against old_values.
inline double gather_ranks_jacobi(const Graph& g, const EdgeCentricLayout& layout,
                                  double damping, const std::vector<double>& old_values,
                                  std::vector<double>& new_values) {
  const double base = (1.0 - damping) / static_cast<double>(g.n);
  double error = 0.0;
  for (VertexId u = 0; u < g.n; ++u) {
    double sum = 0.0;
    for (SlotId s = g.in_start[u]; s < g.in_start[u + 1]; ++s) {
      sum += layout.contribution_list[s];
    }
    const double value = base + damping * sum;
    new_values[u] = value;
    error = std::max(error, std::abs(value - old_values[u]));
  }
  return error;
}

namespace detail {

inline void require_layout(const Graph& g, const EdgeCentricLayout& layout) {
  if (layout.offset_list.size() != g.m || layout.out_start.size() != g.n + 1 ||
      layout.contribution_list.size() != g.m) {
    throw std::invalid_argument("pagerank: layout does not match graph");
  }
}

inline void finish(PageRankResult& result, double threshold) {
  auto& trace = result.trace;
  trace.iterations = trace.errors.size();
  trace.converged = !trace.errors.empty() && trace.errors.back() <= threshold;
  if (!trace.errors.empty()) result.ranks.final_error = trace.errors.back();
}

// Contiguous static block [begin, end) for thread t of T over n vertices.
struct VertexBlock {
  std::uint64_t begin;
  std::uint64_t end;
};

inline VertexBlock block_for(std::uint64_t n, unsigned threads, unsigned t) {
  const std::uint64_t chunk = (n + threads - 1) / threads;
  const std::uint64_t begin = std::min<std::uint64_t>(static_cast<std::uint64_t>(t) * chunk, n);
  const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, n);
  return {begin, end};
}

}  // namespace detail

// Two-phase edge-centric PageRank (Jacobi discipline): scatter every
// contribution, then gather every rank from the previous iteration's values.
inline PageRankResult pagerank_ec_seq(const Graph& g, EdgeCentricLayout& layout,
                                      const PageRankConfig& cfg) {
  validate(cfg);
  detail::require_layout(g, layout);
  PageRankResult result{init_ranks(g.n), {}};
  std::vector<double>& values = result.ranks.values;
  std::vector<double> next(g.n);

  for (std::uint64_t iter = 0; iter < cfg.max_iterations; ++iter) {
    scatter_contributions(g, layout, values);
    const double error = gather_ranks_jacobi(g, layout, cfg.damping, values, next);
    values.swap(next);
    result.trace.errors.push_back(error);
    if (error <= cfg.threshold) break;
  }
  detail::finish(result, cfg.threshold);
  return result;
}

inline PageRankResult pagerank_ec_seq(const Graph& g, const PageRankConfig& cfg) {
  EdgeCentricLayout layout = build_layout(g);
  return pagerank_ec_seq(g, layout, cfg);
}

// Loop-fused PageRank (Gauss-Seidel discipline): one pass per iteration in
// ascending vertex order; each vertex gathers from the live contribution
// slots (already-updated for lower-indexed sources, previous-iteration
// otherwise) and immediately scatters its own new contribution.
inline PageRankResult pagerank_fused_seq(const Graph& g, EdgeCentricLayout& layout,
                                         const PageRankConfig& cfg) {
  validate(cfg);
  detail::require_layout(g, layout);
  PageRankResult result{init_ranks(g.n), {}};
  std::vector<double>& values = result.ranks.values;
  const double base = (1.0 - cfg.damping) / static_cast<double>(g.n);

  scatter_contributions(g, layout, values);

  for (std::uint64_t iter = 0; iter < cfg.max_iterations; ++iter) {
    double error = 0.0;
    for (VertexId u = 0; u < g.n; ++u) {
      double sum = 0.0;
      for (SlotId s = g.in_start[u]; s < g.in_start[u + 1]; ++s) {
        sum += layout.contribution_list[s];
      }
      const double value = base + cfg.damping * sum;
      const double delta = std::abs(value - values[u]);
      values[u] = value;
      if (g.out_degree[u] > 0) {
        const double contribution = value / static_cast<double>(g.out_degree[u]);
        for (std::uint64_t k = layout.out_start[u]; k < layout.out_start[u + 1]; ++k) {
          layout.contribution_list[layout.offset_list[k]] = contribution;
        }
      }
      error = std::max(error, delta);
    }
    result.trace.errors.push_back(error);
    if (error <= cfg.threshold) break;
  }
  detail::finish(result, cfg.threshold);
  return result;
}

// Parallel edge-centric PageRank. Vertices are statically partitioned into
// contiguous blocks, one per thread; the scatter and gather phases are
// separated by barriers and every vertex (and every slot) has a single
// writer, so the result is exactly equal to the sequential engine.
inline PageRankResult pagerank_ec_par(const Graph& g, EdgeCentricLayout& layout,
                                      const PageRankConfig& cfg) {
  validate(cfg);
  detail::require_layout(g, layout);
  PageRankResult result{init_ranks(g.n), {}};
  std::vector<double>& values = result.ranks.values;
  std::vector<double> next(g.n);
  const unsigned threads = cfg.thread_count;
  const double base = (1.0 - cfg.damping) / static_cast<double>(g.n);

  std::vector<double> thread_error(threads, 0.0);
  bool stop = false;
  bool in_gather = false;  // completion fires after both phases; act on gather end only

  auto on_barrier = [&]() noexcept {
    in_gather = !in_gather;
    if (in_gather) return;  // scatter phase just ended
    double error = 0.0;
    for (double e : thread_error) error = std::max(error, e);
    values.swap(next);
    result.trace.errors.push_back(error);
    if (error <= cfg.threshold || result.trace.errors.size() >= cfg.max_iterations) stop = true;
  };
  std::barrier sync(threads, on_barrier);

  auto worker = [&](unsigned t) {
    const auto [begin, end] = detail::block_for(g.n, threads, t);
    while (true) {
      for (VertexId u = begin; u < end; ++u) {
        if (g.out_degree[u] == 0) continue;
        const double contribution = values[u] / static_cast<double>(g.out_degree[u]);
        for (std::uint64_t k = layout.out_start[u]; k < layout.out_start[u + 1]; ++k) {
          layout.contribution_list[layout.offset_list[k]] = contribution;
        }
      }
      sync.arrive_and_wait();  // all contributions for this iteration written

      double error = 0.0;
      for (VertexId u = begin; u < end; ++u) {
        double sum = 0.0;
        for (SlotId s = g.in_start[u]; s < g.in_start[u + 1]; ++s) {
          sum += layout.contribution_list[s];
        }
        const double value = base + cfg.damping * sum;
        next[u] = value;
        error = std::max(error, std::abs(value - values[u]));
      }
      thread_error[t] = error;
      sync.arrive_and_wait();  // errors combined, buffers swapped
      if (stop) break;
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  for (std::thread& th : pool) th.join();

  detail::finish(result, cfg.threshold);
  return result;
}

// Parallel loop-fused PageRank. Blocks run the fused pass concurrently with
// one barrier per iteration; a gather may observe, per slot, either the
// previous-iteration or the current-iteration contribution. Slot accesses
// that can race are relaxed atomics, so a read never returns a torn value.
inline PageRankResult pagerank_fused_par(const Graph& g, EdgeCentricLayout& layout,
                                         const PageRankConfig& cfg) {
  validate(cfg);
  detail::require_layout(g, layout);
  PageRankResult result{init_ranks(g.n), {}};
  std::vector<double>& values = result.ranks.values;
  const unsigned threads = cfg.thread_count;
  const double base = (1.0 - cfg.damping) / static_cast<double>(g.n);

  static_assert(std::atomic_ref<double>::is_always_lock_free);

  std::vector<double> thread_error(threads, 0.0);
  bool stop = false;
  bool setup_done = false;

  auto on_barrier = [&]() noexcept {
    if (!setup_done) {  // first barrier only publishes the initial scatter
      setup_done = true;
      return;
    }
    double error = 0.0;
    for (double e : thread_error) error = std::max(error, e);
    result.trace.errors.push_back(error);
    if (error <= cfg.threshold || result.trace.errors.size() >= cfg.max_iterations) stop = true;
  };
  std::barrier sync(threads, on_barrier);

  auto worker = [&](unsigned t) {
    const auto [begin, end] = detail::block_for(g.n, threads, t);

    for (VertexId u = begin; u < end; ++u) {
      if (g.out_degree[u] == 0) continue;
      const double contribution = values[u] / static_cast<double>(g.out_degree[u]);
      for (std::uint64_t k = layout.out_start[u]; k < layout.out_start[u + 1]; ++k) {
        layout.contribution_list[layout.offset_list[k]] = contribution;
      }
    }
    sync.arrive_and_wait();

    while (true) {
      double error = 0.0;
      for (VertexId u = begin; u < end; ++u) {
        double sum = 0.0;
        for (SlotId s = g.in_start[u]; s < g.in_start[u + 1]; ++s) {
          sum += std::atomic_ref<double>(layout.contribution_list[s])
                     .load(std::memory_order_relaxed);
        }
        const double value = base + cfg.damping * sum;
        const double delta = std::abs(value - values[u]);
        values[u] = value;  // single writer: u's owning thread
        if (g.out_degree[u] > 0) {
          const double contribution = value / static_cast<double>(g.out_degree[u]);
          for (std::uint64_t k = layout.out_start[u]; k < layout.out_start[u + 1]; ++k) {
            std::atomic_ref<double>(layout.contribution_list[layout.offset_list[k]])
                .store(contribution, std::memory_order_relaxed);
          }
        }
        error = std::max(error, delta);
      }
      thread_error[t] = error;
      sync.arrive_and_wait();
      if (stop) break;
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  for (std::thread& th : pool) th.join();

  detail::finish(result, cfg.threshold);
  return result;
}

// Reference ground truth: Jacobi power iteration over an explicit dense
// column-normalized adjacency array. Shares no code with the edge-centric
// path; guarded to test scale.
inline RankVector pagerank_dense_oracle(const Graph& g, const PageRankConfig& cfg) {
  validate(cfg);
  if (g.n == 0) throw std::invalid_argument("pagerank: graph has no vertices");
  if (g.n > 4096) {
    throw std::invalid_argument("dense oracle: n > 4096 (test-scale guard)");
  }
  const std::uint64_t n = g.n;
  std::vector<double> matrix(n * n, 0.0);  // matrix[u*n+v] = 1/out_degree(v) iff v->u
  for (VertexId u = 0; u < n; ++u) {
    for (SlotId s = g.in_start[u]; s < g.in_start[u + 1]; ++s) {
      const VertexId v = g.in_src[s];
      matrix[u * n + v] = 1.0 / static_cast<double>(g.out_degree[v]);
    }
  }

  const double base = (1.0 - cfg.damping) / static_cast<double>(n);
  RankVector ranks = init_ranks(n);
  std::vector<double> next(n);
  for (std::uint64_t iter = 0; iter < cfg.max_iterations; ++iter) {
    double error = 0.0;
    for (VertexId u = 0; u < n; ++u) {
      double sum = 0.0;
      const double* row = matrix.data() + u * n;
      for (VertexId v = 0; v < n; ++v) sum += row[v] * ranks.values[v];
      next[u] = base + cfg.damping * sum;
      error = std::max(error, std::abs(next[u] - ranks.values[u]));
    }
    ranks.values.swap(next);
    ranks.final_error = error;
    if (error <= cfg.threshold) break;
  }
  return ranks;
}

}  // namespace fpr
