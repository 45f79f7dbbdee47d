#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpr/graph.hpp"

namespace fpr {

struct CacheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

constexpr std::array<char, 4> kCacheMagic = {'F', 'P', 'R', 'G'};
constexpr std::uint32_t kCacheVersion = 1;

inline void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 4);
}

inline void put_u64(std::ostream& out, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 8);
}

inline std::uint32_t get_u32(std::istream& in) {
  char b[4];
  if (!in.read(b, 4)) throw CacheError("graph cache: truncated file");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t(static_cast<unsigned char>(b[i])) << (8 * i);
  return v;
}

inline std::uint64_t get_u64(std::istream& in) {
  char b[8];
  if (!in.read(b, 8)) throw CacheError("graph cache: truncated file");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t(static_cast<unsigned char>(b[i])) << (8 * i);
  return v;
}

inline void put_array(std::ostream& out, const std::vector<std::uint64_t>& a) {
  for (std::uint64_t v : a) put_u64(out, v);
}

inline void get_array(std::istream& in, std::vector<std::uint64_t>& a, std::uint64_t count) {
  a.resize(count);
  for (std::uint64_t i = 0; i < count; ++i) a[i] = get_u64(in);
}

}  // namespace detail

// Binary cache: magic "FPRG", u32 format version, then n, m and the three
// CSR arrays as little-endian 64-bit words. Round-trips bit-exact.
inline void save_cache(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CacheError("graph cache: cannot open '" + path + "' for writing");
  out.write(detail::kCacheMagic.data(), detail::kCacheMagic.size());
  detail::put_u32(out, detail::kCacheVersion);
  detail::put_u64(out, g.n);
  detail::put_u64(out, g.m);
  detail::put_array(out, g.in_start);
  detail::put_array(out, g.in_src);
  detail::put_array(out, g.out_degree);
  if (!out) throw CacheError("graph cache: write to '" + path + "' failed");
}

inline Graph load_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("graph cache: cannot open '" + path + "'");

  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size())) throw CacheError("graph cache: truncated file");
  if (magic != detail::kCacheMagic) throw CacheError("graph cache: bad magic bytes");
  const std::uint32_t version = detail::get_u32(in);
  if (version != detail::kCacheVersion) {
    throw CacheError("graph cache: unsupported format version " + std::to_string(version));
  }

  Graph g;
  g.n = detail::get_u64(in);
  g.m = detail::get_u64(in);
  detail::get_array(in, g.in_start, g.n + 1);
  detail::get_array(in, g.in_src, g.m);
  detail::get_array(in, g.out_degree, g.n);
  return g;
}

}  // namespace fpr
