#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "solvkit/formulas.hpp"
#include "solvkit/solvabilizer.hpp"
#include "solvkit/tables.hpp"

namespace solvkit {

/// Version of the JSON report schemas (see docs/json-schema.md).
inline constexpr int kReportSchemaVersion = 1;

std::string library_version();

nlohmann::json to_json(const SolvReport& report);
nlohmann::json to_json(const TableReport& report);
nlohmann::json to_json(const DistinctnessReport& report);

/// One line of the append-only results cache.
struct CacheRecord {
  std::string spec;  // canonical group spec
  std::size_t order = 0;
  std::uint64_t total = 0;
  std::string method;
  std::string version;
  std::string timestamp;  // UTC, ISO 8601
  double millis = 0.0;

  nlohmann::json to_json() const;
  static CacheRecord from_json(const nlohmann::json& j);
};

std::string utc_timestamp();

/// Line-delimited JSON file of CacheRecords. Appends only; never rewrites.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

  const std::filesystem::path& path() const noexcept { return path_; }

  void append(const CacheRecord& record) const;
  /// All records; a missing file is an empty cache. Malformed lines raise
  /// ParseError with the 1-based line number as position.
  std::vector<CacheRecord> load() const;
  /// Most recent record for spec + version (+ method when given).
  std::optional<CacheRecord> lookup(const std::string& spec, const std::string& version,
                                    const std::optional<std::string>& method = std::nullopt) const;

 private:
  std::filesystem::path path_;
};

}  // namespace solvkit
