#include "tl/cache.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>

#include "tl/json_io.hpp"

namespace tl {

namespace fs = std::filesystem;

IdempotentCache& IdempotentCache::instance() {
  static IdempotentCache cache;
  return cache;
}

void IdempotentCache::set_directory(const fs::path& dir) {
  std::lock_guard<std::mutex> lock(mu_);
  dir_ = dir;
  if (!dir_.empty()) fs::create_directories(dir_);
}

fs::path IdempotentCache::directory() const {
  std::lock_guard<std::mutex> lock(mu_);
  return dir_;
}

std::optional<Morphism<GenericRing>> IdempotentCache::load(const std::string& key) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memory_.find(key);
    if (it != memory_.end()) return it->second;
  }
  fs::path dir = directory();
  if (dir.empty()) return std::nullopt;
  fs::path file = dir / ("p_" + key + ".json");
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    Morphism<GenericRing> m = generic_morphism_from_json(j);
    std::lock_guard<std::mutex> lock(mu_);
    memory_.emplace(key, m);
    return m;
  } catch (const std::exception&) {
    return std::nullopt;  // corrupt cache entry; recompute
  }
}

void IdempotentCache::store(const std::string& key, const Morphism<GenericRing>& value) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    memory_.insert_or_assign(key, value);
  }
  fs::path dir = directory();
  if (dir.empty()) return;
  fs::path file = dir / ("p_" + key + ".json");
  fs::path tmp = dir / ("p_" + key + ".json.tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << morphism_to_json(value).dump();
  }
  std::error_code ec;
  fs::rename(tmp, file, ec);
  if (ec) fs::remove(tmp, ec);
}

void IdempotentCache::clear_memory() {
  std::lock_guard<std::mutex> lock(mu_);
  memory_.clear();
}

int IdempotentCache::clear_disk() {
  fs::path dir = directory();
  if (dir.empty() || !fs::exists(dir)) return 0;
  int removed = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (name.rfind("p_", 0) == 0 && name.find(".json") != std::string::npos) {
      std::error_code ec;
      if (fs::remove(entry.path(), ec)) ++removed;
    }
  }
  return removed;
}

int IdempotentCache::disk_file_count() const {
  fs::path dir = directory();
  if (dir.empty() || !fs::exists(dir)) return 0;
  int count = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (name.rfind("p_", 0) == 0 && name.size() > 7 &&
        name.compare(name.size() - 5, 5, ".json") == 0)
      ++count;
  }
  return count;
}

fs::path default_cache_dir() {
  if (const char* env = std::getenv("TL_CACHE_DIR"); env && *env) return fs::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return fs::path(xdg) / "tl-ideal-lab";
  if (const char* home = std::getenv("HOME"); home && *home)
    return fs::path(home) / ".cache" / "tl-ideal-lab";
  return fs::temp_directory_path() / "tl-ideal-lab";
}

}  // namespace tl
