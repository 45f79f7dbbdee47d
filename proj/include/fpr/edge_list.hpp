#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fpr/edge_set.hpp"

namespace fpr {

struct ParseError : std::runtime_error {
  ParseError(std::uint64_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_number(line) {}
  std::uint64_t line_number;
};

namespace detail {

inline bool parse_u64_token(std::string_view token, std::uint64_t& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace detail

// Parses SNAP-style edge-list text: '#'/'%' comment lines and blank lines are
// skipped; every other line holds "src dst" as non-negative integers. Sparse
// ids are compacted to dense [0, n) in first-appearance order. Throws
// ParseError (with the 1-based line number) on malformed lines or tokens
// that overflow 64 bits.
inline EdgeSet parse_edge_list(std::istream& in) {
  EdgeSet es;
  std::unordered_map<std::uint64_t, VertexId> remap;
  auto dense_id = [&](std::uint64_t raw) {
    auto [it, inserted] = remap.try_emplace(raw, remap.size());
    return it->second;
  };

  std::string line;
  std::uint64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#' || line[0] == '%') continue;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    std::string_view rest(line);
    std::uint64_t ids[2];
    for (int t = 0; t < 2; ++t) {
      const auto begin = rest.find_first_not_of(" \t\r");
      if (begin == std::string_view::npos) {
        throw ParseError(line_number, "expected two integer tokens");
      }
      rest.remove_prefix(begin);
      auto end = rest.find_first_of(" \t\r");
      if (end == std::string_view::npos) end = rest.size();
      if (!detail::parse_u64_token(rest.substr(0, end), ids[t])) {
        throw ParseError(line_number,
                         "bad token '" + std::string(rest.substr(0, end)) + "'");
      }
      rest.remove_prefix(end);
    }
    if (rest.find_first_not_of(" \t\r") != std::string_view::npos) {
      throw ParseError(line_number, "trailing characters after edge");
    }
    const VertexId src = dense_id(ids[0]);
    const VertexId dst = dense_id(ids[1]);
    es.edges.push_back({src, dst});
  }
  es.n = remap.size();
  return es;
}

// Renders an edge set as SNAP-style text; header lines are emitted as '#'
// comments. Inverse of parse_edge_list for densely-labeled inputs.
inline void write_edge_list(std::ostream& out, const EdgeSet& es,
                            const std::vector<std::string>& header_lines = {}) {
  for (const std::string& h : header_lines) out << "# " << h << "\n";
  for (const Edge& e : es.edges) out << e.src << " " << e.dst << "\n";
}

}  // namespace fpr
