#pragma once

#include <string>
#include <vector>

#include "injres/report.hpp"

namespace injres {

// One report per CLI subcommand; the CLI only parses flags and prints.
Report cmd_reduce(const std::string& fraction, const RunConfig& config);
Report cmd_resolution_check(const RunConfig& config);
// Comma-separated generators of I0; "" or "0" is the zero ideal.
Report cmd_lc(const std::string& ideal, const RunConfig& config);
Report cmd_ext_power(int n, const RunConfig& config);
Report cmd_ext_self(int i, const RunConfig& config);
Report cmd_yoneda_table(const RunConfig& config);
Report cmd_dhm(bool ext, int max_i, bool dual, const RunConfig& config);

struct Criterion {
  int id = 0;
  std::string title;
};
const std::vector<Criterion>& acceptance_criteria();
// Throws UnsupportedIndex outside 1..13.
Report run_criterion(int id, const RunConfig& config);
Report cmd_verify_all(const RunConfig& config);

}  // namespace injres
