#include "sbolab/cache.hpp"

#include <fstream>

#include "sbolab/conventions.hpp"

namespace sbolab {

ResultCache::ResultCache(const std::string& dir) {
  if (dir.empty()) return;
  enabled_ = true;
  path_ = dir + "/sbolab_cache.json";
  entries_ = nlohmann::ordered_json::object();
  std::ifstream in(path_);
  if (!in.good()) return;
  try {
    nlohmann::ordered_json file = nlohmann::ordered_json::parse(in);
    if (file.value("schema", 0) == 1 &&
        file.value("convention", "") == conventions::tag &&
        file.contains("entries"))
      entries_ = file["entries"];
  } catch (const nlohmann::json::exception&) {
    // Unreadable cache simply starts fresh.
  }
}

std::optional<CachedDimension> ResultCache::lookup(
    const std::string& key) const {
  if (!enabled_) return std::nullopt;
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  CachedDimension out;
  out.dimension = it->value("dim", 0);
  out.skipped = it->value("skipped", false);
  out.basis_hash = it->value("basis_hash", "");
  return out;
}

void ResultCache::store(const std::string& key, const CachedDimension& value) {
  if (!enabled_) return;
  std::lock_guard<std::mutex> lock(mutex_);
  nlohmann::ordered_json e;
  e["dim"] = value.dimension;
  e["skipped"] = value.skipped;
  if (!value.basis_hash.empty()) e["basis_hash"] = value.basis_hash;
  entries_[key] = std::move(e);
  dirty_ = true;
}

void ResultCache::save() {
  if (!enabled_ || !dirty_) return;
  std::lock_guard<std::mutex> lock(mutex_);
  nlohmann::ordered_json file;
  file["schema"] = 1;
  file["convention"] = conventions::tag;
  file["entries"] = entries_;
  std::ofstream out(path_);
  out << file.dump(2) << "\n";
  dirty_ = false;
}

}  // namespace sbolab
