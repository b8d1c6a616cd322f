#include "solvkit/report.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include "solvkit/error.hpp"

#ifndef SOLVKIT_VERSION
#define SOLVKIT_VERSION "0.0.0"
#endif

namespace solvkit {

using nlohmann::json;

std::string library_version() { return SOLVKIT_VERSION; }

json to_json(const SolvReport& report) {
  json classes = json::array();
  for (const auto& c : report.classes) {
    json entry = {
        {"representative", c.representative},
        {"element_order", c.element_order},
        {"class_size", c.class_size},
        {"sol_size", c.sol_size},
        {"cyclic_normalizer_order", c.cyclic_normalizer_order},
        {"normalizer_order", c.normalizer_order},
        {"orbit", c.orbit},
        {"dedup", c.kept() ? json("kept") : json({{"merged_into", *c.merged_into}})},
    };
    classes.push_back(std::move(entry));
  }
  return {
      {"schema", kReportSchemaVersion},
      {"spec", report.spec},
      {"order", report.order},
      {"method", to_string(report.method)},
      {"classes", std::move(classes)},
      {"total", report.total},
      {"upper_bound", report.upper_bound},
      {"millis", report.millis},
  };
}

namespace {

json cell_json(const TableCell& c) {
  return {{"label", c.label},
          {"expected", c.expected ? json(*c.expected) : json(nullptr)},
          {"observed", c.observed ? json(*c.observed) : json(nullptr)},
          {"pass", c.pass()}};
}

}  // namespace

json to_json(const TableReport& report) {
  json classes = json::array();
  for (const auto& c : report.classes) {
    json cells = json::array();
    for (const auto& cell : c.containments) cells.push_back(cell_json(cell));
    classes.push_back({{"representative", c.representative},
                       {"element_order", c.element_order},
                       {"column", c.column.empty() ? json(nullptr) : json(c.column)},
                       {"containments", std::move(cells)},
                       {"sol", cell_json(c.sol)},
                       {"pass", c.pass()}});
  }
  return {
      {"schema", kReportSchemaVersion},
      {"group", report.group},
      {"q", report.q},
      {"family", report.family ? json(to_string(*report.family)) : json(nullptr)},
      {"table", report.table_number},
      {"applicable", report.applicable},
      {"notice", report.notice},
      {"containments_checked", report.containments_checked},
      {"rows", report.rows},
      {"classes", std::move(classes)},
      {"cells_checked", report.cells_checked()},
      {"cells_failed", report.cells_failed()},
      {"pass", report.all_pass()},
  };
}

json to_json(const DistinctnessReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries)
    entries.push_back({{"group", e.family.name()},
                       {"family", e.family.tag_string()},
                       {"parameter", e.family.parameter},
                       {"group_order", e.group_order},
                       {"solv", e.solv}});
  json collisions = json::array();
  for (const auto& [i, j] : report.collisions)
    collisions.push_back({report.entries[i].family.name(), report.entries[j].family.name()});
  return {{"schema", kReportSchemaVersion},
          {"order_bound", report.order_bound},
          {"entries", std::move(entries)},
          {"collisions", std::move(collisions)}};
}

json CacheRecord::to_json() const {
  return {{"spec", spec},       {"order", order},         {"total", total},  {"method", method},
          {"version", version}, {"timestamp", timestamp}, {"millis", millis}};
}

CacheRecord CacheRecord::from_json(const json& j) {
  CacheRecord r;
  r.spec = j.at("spec").get<std::string>();
  r.order = j.at("order").get<std::size_t>();
  r.total = j.at("total").get<std::uint64_t>();
  r.method = j.at("method").get<std::string>();
  r.version = j.at("version").get<std::string>();
  r.timestamp = j.value("timestamp", "");
  r.millis = j.value("millis", 0.0);
  return r;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void ResultCache::append(const CacheRecord& record) const {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error("cannot open cache file " + path_.string());
  out << record.to_json().dump() << '\n';
  if (!out) throw Error("cannot write cache file " + path_.string());
}

std::vector<CacheRecord> ResultCache::load() const {
  std::vector<CacheRecord> out;
  std::ifstream in(path_);
  if (!in) return out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(CacheRecord::from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw ParseError("malformed cache record: " + std::string(e.what()), line_no);
    }
  }
  return out;
}

std::optional<CacheRecord> ResultCache::lookup(const std::string& spec, const std::string& version,
                                               const std::optional<std::string>& method) const {
  std::optional<CacheRecord> found;
  for (auto& r : load())
    if (r.spec == spec && r.version == version && (!method || r.method == *method))
      found = std::move(r);
  return found;
}

}  // namespace solvkit
