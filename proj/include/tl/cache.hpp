#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "tl/morphism.hpp"

namespace tl {

// Process-wide cache for constructed path idempotents. Always caches in
// memory; when a directory is configured, entries are mirrored to disk
// as one JSON morphism per path ("p_<widths>.json") with atomic
// write-then-rename, so concurrent processes can share them.
class IdempotentCache {
 public:
  static IdempotentCache& instance();

  // Empty path disables the disk layer.
  void set_directory(const std::filesystem::path& dir);
  std::filesystem::path directory() const;

  std::optional<Morphism<GenericRing>> load(const std::string& key);
  void store(const std::string& key, const Morphism<GenericRing>& value);

  void clear_memory();
  // Removes cached files on disk; returns the number removed.
  int clear_disk();
  int disk_file_count() const;

 private:
  IdempotentCache() = default;

  mutable std::mutex mu_;
  std::filesystem::path dir_;
  std::map<std::string, Morphism<GenericRing>> memory_;
};

// Default cache directory: $TL_CACHE_DIR if set, else
// $XDG_CACHE_HOME/tl-ideal-lab or ~/.cache/tl-ideal-lab.
std::filesystem::path default_cache_dir();

}  // namespace tl
