#include "decycle/cache.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "decycle/fvs.hpp"
#include "decycle/instance.hpp"

namespace decycle {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

template <typename T>
bool parse_number(const std::string& s, T& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

}  // namespace

std::string format_cache_line(const CacheEntry& e) {
  std::string line = e.key + '\t' + std::to_string(e.value) + '\t';
  for (std::size_t i = 0; i < e.certificate.size(); ++i) {
    if (i) line += ',';
    line += std::to_string(e.certificate[i]);
  }
  char stats[64];
  std::snprintf(stats, sizeof stats, "%llu,%.6f", static_cast<unsigned long long>(e.nodes), e.wall_seconds);
  return line + '\t' + stats;
}

std::optional<CacheEntry> parse_cache_line(const std::string& line, std::string* error) {
  auto fail = [&](const std::string& why) -> std::optional<CacheEntry> {
    if (error) *error = why;
    return std::nullopt;
  };
  const auto fields = split(line, '\t');
  if (fields.size() != 4) return fail("expected 4 tab-separated fields, got " + std::to_string(fields.size()));
  CacheEntry e;
  e.key = fields[0];
  if (e.key.empty()) return fail("empty key");
  if (!parse_number(fields[1], e.value) || e.value < 0) return fail("bad value \"" + fields[1] + "\"");
  if (!fields[2].empty()) {
    for (const auto& v : split(fields[2], ',')) {
      Vertex x = 0;
      if (!parse_number(v, x) || x < 0 || x >= kMaxVertices) return fail("bad certificate vertex \"" + v + "\"");
      e.certificate.push_back(x);
    }
  }
  if (static_cast<int>(e.certificate.size()) != e.value)
    return fail("certificate has " + std::to_string(e.certificate.size()) + " vertices but value is " +
                std::to_string(e.value));
  const auto stats = split(fields[3], ',');
  if (stats.size() != 2 || !parse_number(stats[0], e.nodes)) return fail("bad solver stats \"" + fields[3] + "\"");
  try {
    e.wall_seconds = std::stod(stats[1]);
  } catch (const std::exception&) {
    return fail("bad wall time \"" + stats[1] + "\"");
  }
  return e;
}

std::optional<CacheEntry> Cache::find(const std::string& key) const {
  std::lock_guard lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void Cache::put(const CacheEntry& e) {
  std::lock_guard lock(mu_);
  entries_[e.key] = e;
}

std::size_t Cache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

std::vector<CacheEntry> Cache::entries() const {
  std::lock_guard lock(mu_);
  std::vector<CacheEntry> out;
  for (const auto& [k, e] : entries_) out.push_back(e);
  return out;
}

CacheLoadReport Cache::load(std::istream& in, int spot_checks) {
  CacheLoadReport report;
  std::string line;
  int line_no = 0;
  auto skip = [&](const std::string& why) {
    ++report.skipped;
    report.warnings.push_back("cache line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string why;
    auto e = parse_cache_line(line, &why);
    if (!e) {
      skip(why);
      continue;
    }
    try {
      const Graph g = graph_from_key(e->key);
      DecyclingCertificate c;
      c.set = VertexSet(g.order(), e->certificate);
      c.value = e->value;
      if (!certificate_is_valid(g, c)) {
        skip("certificate does not leave a forest");
        continue;
      }
      if (report.spot_checked < spot_checks) {
        ++report.spot_checked;
        const int solved = decycling_number(g).value;
        if (solved != e->value) {
          skip("cached value " + std::to_string(e->value) + " but solver gives " + std::to_string(solved));
          continue;
        }
      }
    } catch (const std::exception& ex) {
      skip(ex.what());
      continue;
    }
    put(*e);
    ++report.loaded;
  }
  return report;
}

CacheLoadReport Cache::load(const std::string& path, int spot_checks) {
  if (!std::filesystem::exists(path)) return {};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read cache file " + path);
  return load(in, spot_checks);
}

void Cache::store(std::ostream& out) const {
  for (const auto& e : entries()) out << format_cache_line(e) << '\n';
}

void Cache::store(const std::string& path) const {
  const auto tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + path);
    store(out);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace decycle
