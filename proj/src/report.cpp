#include "injres/report.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>

namespace injres {

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.passed; });
}

void Report::value(std::string key, std::string v, std::string provenance) {
  values.push_back({std::move(key), std::move(v), std::move(provenance)});
}

void Report::check(std::string name, bool passed, std::string provenance) {
  checks.push_back({std::move(name), passed, std::move(provenance)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const ReportValue& v : other.values) values.push_back({prefix + v.key, v.value, v.provenance});
  for (ReportTable t : other.tables) {
    t.title = prefix + t.title;
    tables.push_back(std::move(t));
  }
  for (const ReportCheck& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.provenance});
}

std::string to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = r.command;
  j["config"] = {{"field", r.config.field.name()},
                 {"seed", r.config.seed},
                 {"truncation", r.config.truncation},
                 {"samples", r.config.samples}};
  j["values"] = nlohmann::ordered_json::array();
  for (const ReportValue& v : r.values) j["values"].push_back({{"key", v.key}, {"value", v.value}, {"provenance", v.provenance}});
  j["tables"] = nlohmann::ordered_json::array();
  for (const ReportTable& t : r.tables) j["tables"].push_back({{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}});
  j["checks"] = nlohmann::ordered_json::array();
  for (const ReportCheck& c : r.checks)
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"provenance", c.provenance}});
  j["ok"] = r.ok();
  return j.dump(2) + "\n";
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "# injres " << r.command << "  field=" << r.config.field.name() << " seed=" << r.config.seed
      << " trunc=" << r.config.truncation << " samples=" << r.config.samples << "\n";
  for (const ReportValue& v : r.values) out << v.key << "=" << v.value << "  [" << v.provenance << "]\n";
  for (const ReportTable& t : r.tables) {
    out << "\n" << t.title << "\n";
    std::vector<size_t> width(t.columns.size(), 0);
    for (size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
    for (const auto& row : t.rows)
      for (size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (size_t c = 0; c < cells.size(); ++c) {
        std::string cell = cells[c];
        if (c + 1 < cells.size()) cell.resize(std::max(cell.size(), width[c]), ' ');
        s += (c ? "  " : "") + cell;
      }
      out << s << "\n";
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
  }
  if (!r.checks.empty()) out << "\n";
  for (const ReportCheck& c : r.checks) out << (c.passed ? "[pass] " : "[FAIL] ") << c.name << "  (" << c.provenance << ")\n";
  out << (r.ok() ? "ok\n" : "FAILED\n");
  return out.str();
}

std::string render(const Report& r) { return r.config.format == Format::Json ? to_json(r) : to_text(r); }

}  // namespace injres
