#include "qschur/cache.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "qschur/rational.hpp"

namespace qschur {

CoeffCache::CoeffCache(std::string dir) : dir_(std::move(dir)) {}

std::string CoeffCache::file_path() const { return dir_ + "/coeffs.jsonl"; }

void CoeffCache::load() {
  loaded_ = true;
  std::ifstream in(file_path());
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) continue;  // tolerate torn trailing writes
    if (j.value("engine", "") != kEngineVersion) continue;
    entries_[j.value("kind", "") + "|" + j.value("key", "")] =
        j.value("value", "");
  }
}

void CoeffCache::append(const std::string& kind, const std::string& key,
                        const std::string& value) {
  std::filesystem::create_directories(dir_);
  std::ofstream out(file_path(), std::ios::app);
  nlohmann::json j = {
      {"kind", kind}, {"key", key}, {"value", value}, {"engine", kEngineVersion}};
  out << j.dump() << "\n";
}

std::string CoeffCache::get_or_compute(
    const std::string& kind, const std::string& key,
    const std::function<std::string()>& compute) {
  if (!enabled()) return compute();
  if (!loaded_) load();
  std::string full = kind + "|" + key;
  auto it = entries_.find(full);
  if (it == entries_.end()) {
    std::string value = compute();
    entries_[full] = value;
    append(kind, key, value);
    return value;
  }
  ++hits_;
  // Deterministic 1% audit: recompute and insist on agreement.
  if (std::hash<std::string>{}(full) % 100 == 0) {
    ++audits_;
    std::string fresh = compute();
    if (fresh != it->second)
      throw ConsistencyError("cache mismatch for " + full + ": cached " +
                             it->second + ", recomputed " + fresh);
  }
  return it->second;
}

}  // namespace qschur
