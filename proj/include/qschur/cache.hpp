#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

namespace qschur {

// Version tag baked into every cache line; lines from other versions are
// ignored, never migrated.
inline constexpr const char* kEngineVersion = "qschur-1";

/// Append-only line-oriented coefficient cache. Keys are canonical index
/// text; values are exact integer/fraction strings. A deterministic 1%
/// sample of cache hits is re-computed and compared.
class CoeffCache {
 public:
  // Empty directory disables the cache entirely.
  explicit CoeffCache(std::string dir);

  bool enabled() const { return !dir_.empty(); }

  // Returns the cached or computed value; audited hits that disagree with
  // recomputation raise ConsistencyError.
  std::string get_or_compute(const std::string& kind, const std::string& key,
                             const std::function<std::string()>& compute);

  long hits() const { return hits_; }
  long audits() const { return audits_; }

 private:
  std::string file_path() const;
  void load();
  void append(const std::string& kind, const std::string& key,
              const std::string& value);

  std::string dir_;
  bool loaded_ = false;
  std::map<std::string, std::string> entries_;  // "kind|key" -> value
  long hits_ = 0;
  long audits_ = 0;
};

}  // namespace qschur
