#pragma once

#include <mutex>
#include <optional>
#include <string>

#include "json.hpp"

namespace sbolab {

struct CachedDimension {
  int dimension = 0;
  bool skipped = false;
  std::string basis_hash;
};

/// Dimension results keyed by the parameter tuple, persisted as JSON.
/// The file embeds the convention tag; a mismatch discards old entries.
/// Writes are serialized through a single mutex-guarded writer.
class ResultCache {
 public:
  explicit ResultCache(const std::string& dir);  // empty dir disables

  bool enabled() const { return enabled_; }
  std::optional<CachedDimension> lookup(const std::string& key) const;
  void store(const std::string& key, const CachedDimension& value);
  void save();

  const std::string& path() const { return path_; }

 private:
  bool enabled_ = false;
  bool dirty_ = false;
  std::string path_;
  nlohmann::ordered_json entries_;
  mutable std::mutex mutex_;
};

}  // namespace sbolab
