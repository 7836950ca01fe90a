#pragma once

#include <optional>
#include <string>

#include "theta2/expr.hpp"

namespace theta2 {

/// Bumped whenever the expansion conventions change; part of the cache key.
extern const char* kExpansionFormatVersion;

/// Canonical text serialization: a fixed header followed by per-component
/// records {A B C coeff} sorted by (A+C, A, B); bit-stable across runs.
std::string serialize_expansion(const std::string& name, const FormExpansion& f);

/// Inverse of serialize_expansion; returns the stored name through name_out.
FormExpansion parse_expansion(const std::string& text, std::string* name_out);

/// JSON rendering of an expansion (same records, structured).
std::string expansion_json(const std::string& name, const FormExpansion& f);

/// On-disk expansion cache keyed by (name, order, format version). The
/// directory comes from the constructor argument, or the THETA2_CACHE
/// environment variable when empty; caching is disabled if neither is set.
class ExpansionCache {
 public:
  explicit ExpansionCache(std::string dir = "");
  bool enabled() const { return !dir_.empty(); }
  const std::string& dir() const { return dir_; }

  std::optional<FormExpansion> load(const std::string& name, int order) const;
  void store(const std::string& name, int order, const FormExpansion& f) const;

  /// eval() through the cache: loads if present, else evaluates and stores.
  FormExpansion eval_cached(const std::string& name, int order) const;

 private:
  std::string dir_;
  std::string path_for(const std::string& name, int order) const;
};

}  // namespace theta2
