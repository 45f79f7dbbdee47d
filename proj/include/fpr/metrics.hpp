#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fpr/pagerank.hpp"

namespace fpr {

enum class EngineKind { EcSeq, FusedSeq, EcPar, FusedPar };

inline constexpr EngineKind kAllEngines[] = {EngineKind::EcSeq, EngineKind::FusedSeq,
                                             EngineKind::EcPar, EngineKind::FusedPar};

inline std::string_view to_string(EngineKind kind) {
  switch (kind) {
    case EngineKind::EcSeq: return "ec_seq";
    case EngineKind::FusedSeq: return "fused_seq";
    case EngineKind::EcPar: return "ec_par";
    case EngineKind::FusedPar: return "fused_par";
  }
  return "unknown";
}

inline EngineKind parse_engine(std::string_view name) {
  for (EngineKind kind : kAllEngines) {
    if (name == to_string(kind)) return kind;
  }
  throw std::invalid_argument("unknown engine tag '" + std::string(name) +
                              "' (expected ec_seq|fused_seq|ec_par|fused_par)");
}

inline bool is_parallel(EngineKind kind) {
  return kind == EngineKind::EcPar || kind == EngineKind::FusedPar;
}

// One measured engine run, as emitted by the benchmark harness.
struct RunReport {
  EngineKind engine = EngineKind::EcSeq;
  std::uint64_t iterations = 0;
  double wall_time_s = 0.0;
  double l1_vs_reference = 0.0;  // Manhattan distance to the Seq-EC result
  double threshold = 0.0;
  unsigned thread_count = 1;
  std::string graph_label;
  bool converged = false;
};

// Manhattan distance between two rank vectors.
inline double l1_norm(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("l1_norm: length mismatch (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return sum;
}

inline double l1_norm(const RankVector& a, const RankVector& b) {
  return l1_norm(a.values, b.values);
}

inline double linf_norm(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("linf_norm: length mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// baseline.wall_time / candidate.wall_time; both runs must describe the same
// graph and threshold.
inline double speedup(const RunReport& baseline, const RunReport& candidate) {
  if (baseline.graph_label != candidate.graph_label) {
    throw std::invalid_argument("speedup: graph labels differ ('" + baseline.graph_label +
                                "' vs '" + candidate.graph_label + "')");
  }
  if (baseline.threshold != candidate.threshold) {
    throw std::invalid_argument("speedup: thresholds differ");
  }
  return baseline.wall_time_s / candidate.wall_time_s;
}

}  // namespace fpr
