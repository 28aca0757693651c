#pragma once

// Expansion cache: concurrent lookups, exclusive insertion, optional
// append-only file backing.
//
// File format (text, one record per line after the header):
//
//   symlab-expansion-cache v1
//   <family>\t<n>\t<lambda>\t<param>...\t<terms>\t#<fnv1a-64 hex>
//
// where <terms> is "nu:c;nu:c;..." and the checksum covers everything
// before the final tab. Records that fail to parse or checksum are skipped
// with a warning and never served.

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "symlab/sympoly.hpp"

namespace symlab {

struct CacheKey {
  std::string family;
  Partition lambda;
  std::vector<std::string> params;

  std::string to_string() const;
};

class ExpansionCache {
 public:
  static constexpr const char* kHeader = "symlab-expansion-cache v1";

  ExpansionCache() = default;
  ExpansionCache(const ExpansionCache&) = delete;
  ExpansionCache& operator=(const ExpansionCache&) = delete;

  std::optional<SymPoly> find(const CacheKey& key) const;
  void insert(const CacheKey& key, const SymPoly& value);

  // Loads existing records from `path` (creating the file if missing) and
  // appends every later insertion to it. Warnings go to `warn`.
  void attach_file(const std::filesystem::path& path, std::ostream& warn);
  void detach_file();
  void clear();

  std::size_t size() const;
  std::size_t skipped_records() const { return skipped_; }

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, SymPoly> entries_;
  std::optional<std::filesystem::path> path_;
  std::size_t skipped_ = 0;
};

// Process-wide cache consulted by macdonald_expand and jack_expand.
ExpansionCache& default_cache();

}  // namespace symlab
