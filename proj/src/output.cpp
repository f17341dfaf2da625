#include "lics/output.hpp"

#include <json.hpp>

#include <cstdio>

namespace lics {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_csv(const ScanResult& r, std::ostream& os) {
  for (std::size_t i = 0; i < r.columns.size(); ++i) {
    if (i) os << ',';
    os << r.columns[i];
  }
  os << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << format_double(row[i]);
    }
    os << '\n';
  }
  os << "# scenario_hash " << r.scenario_hash << '\n';
  os << "# version " << r.version << '\n';
  for (const auto& [key, value] : r.summary)
    os << "# " << key << ' ' << format_double(value) << '\n';
}

void write_json(const ScanResult& r, std::ostream& os) {
  nlohmann::ordered_json doc;
  doc["meta"]["scenario_hash"] = r.scenario_hash;
  doc["meta"]["version"] = r.version;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.summary) summary[key] = value;
  doc["meta"]["summary"] = summary;
  doc["columns"] = r.columns;
  doc["rows"] = r.rows;
  os << doc.dump(2) << '\n';
}

}  // namespace lics
