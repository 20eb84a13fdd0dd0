#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "decycle/graph.hpp"

namespace decycle {

/// One solved instance. On disk: key, value, comma-separated certificate and
/// "nodes,seconds", tab-separated, one entry per line.
struct CacheEntry {
  std::string key;
  int value = 0;
  std::vector<Vertex> certificate;
  std::uint64_t nodes = 0;
  double wall_seconds = 0.0;

  friend bool operator==(const CacheEntry&, const CacheEntry&) = default;
};

std::string format_cache_line(const CacheEntry& e);
/// Rejects lines whose fields do not parse or whose certificate size differs
/// from the value; `error` receives the reason.
std::optional<CacheEntry> parse_cache_line(const std::string& line, std::string* error = nullptr);

struct CacheLoadReport {
  int loaded = 0;
  int skipped = 0;
  int spot_checked = 0;
  std::vector<std::string> warnings;
};

/// Thread-safe key/value store of solved instances.
class Cache {
 public:
  std::optional<CacheEntry> find(const std::string& key) const;
  void put(const CacheEntry& e);
  std::size_t size() const;
  std::vector<CacheEntry> entries() const;

  /// Merges entries from a stream. Every entry's certificate is checked
  /// against the graph its key rebuilds; the first `spot_checks` entries are
  /// also re-solved. Bad lines are skipped and reported, never fatal.
  CacheLoadReport load(std::istream& in, int spot_checks = 3);
  /// A missing file is an empty cache; an unreadable one throws std::runtime_error.
  CacheLoadReport load(const std::string& path, int spot_checks = 3);

  void store(std::ostream& out) const;
  void store(const std::string& path) const;

 private:
  mutable std::mutex mu_;
  std::map<std::string, CacheEntry> entries_;
};

}  // namespace decycle
