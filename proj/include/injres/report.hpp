#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "injres/field.hpp"

namespace injres {

inline constexpr int kReportSchemaVersion = 1;

enum class Format { Json, Text };

struct RunConfig {
  Field field = Field::rationals();
  std::uint32_t seed = 2024;
  int truncation = 4;
  int samples = 100;
  Format format = Format::Text;
};

// Provenance tags: "formula" (closed form), "computed" (exact at the stated truncation), "structural".
struct ReportValue {
  std::string key;
  std::string value;
  std::string provenance;
};

struct ReportCheck {
  std::string name;
  bool passed = false;
  std::string provenance;
};

struct ReportTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string command;
  RunConfig config;
  std::vector<ReportValue> values;
  std::vector<ReportTable> tables;
  std::vector<ReportCheck> checks;

  bool ok() const;
  void value(std::string key, std::string v, std::string provenance = "computed");
  void check(std::string name, bool passed, std::string provenance = "computed");
  // Appends the values, tables and checks of another report under a prefix.
  void merge(const Report& other, const std::string& prefix);
};

std::string to_json(const Report& r);
std::string to_text(const Report& r);
std::string render(const Report& r);

}  // namespace injres
