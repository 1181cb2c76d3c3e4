#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "injres/commands.hpp"
#include "injres/errors.hpp"

namespace {

// Exit codes: 0 every check passed, 1 some check failed, 2 usage or input error.
constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;

injres::Field parse_field(const std::string& text) {
  if (text == "Q" || text == "q") return injres::Field::rationals();
  std::size_t used = 0;
  unsigned long p = 0;
  try {
    p = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || p > 0xffffffffUL) throw injres::ParseError("--field expects Q or a prime, got '" + text + "'");
  return injres::Field::prime_field(static_cast<std::uint32_t>(p));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Injective resolution verifier for k[X,Y,Z,W]/(XW-YZ)"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string field_text = "Q", format_text = "text";
  injres::RunConfig config;
  app.add_option("--field", field_text, "Q or a prime p > 3")->capture_default_str();
  app.add_option("--seed", config.seed, "RNG seed")->capture_default_str();
  app.add_option("--trunc", config.truncation, "truncation bound")->capture_default_str()->check(CLI::Range(1, 64));
  app.add_option("--samples", config.samples, "samples per randomized suite")->capture_default_str()->check(CLI::Range(1, 100000));
  app.add_option("--format", format_text, "json or text")->capture_default_str()->check(CLI::IsMember({"json", "text"}));

  std::string fraction, ideal;
  int power = 0, self_degree = 0, max_i = 7;
  bool table = false, ext = false, dual = false;

  auto* reduce = app.add_subcommand("reduce", "canonical form of a generalized fraction in H^2");
  reduce->add_option("fraction", fraction, "e.g. \"[1 / Z^1, W-3*Z^1]\"")->required();
  auto* resolution = app.add_subcommand("resolution-check", "complex, socle and witness suites");
  auto* lc = app.add_subcommand("lc", "local cohomology of A/p");
  lc->add_option("--ideal", ideal, "comma-separated generators of I0, or 0")->required();
  auto* ext_power = app.add_subcommand("ext-power", "Ext^i(A/m^n, A/p)");
  ext_power->add_option("--n", power)->required()->check(CLI::Range(1, 64));
  auto* ext_self = app.add_subcommand("ext-self", "Ext^i(A/p, A/p)");
  ext_self->add_option("--i", self_degree)->required()->check(CLI::Range(0, 64));
  auto* yoneda = app.add_subcommand("yoneda", "Yoneda products of Ext(A/p, A/p)");
  yoneda->add_flag("--table", table, "print the product table");
  auto* dhm = app.add_subcommand("dhm", "the fifteen-dimensional module M");
  dhm->add_flag("--ext", ext, "Ext^i(M, A/p) table");
  dhm->add_option("--max-i", max_i, "largest degree for --ext")->capture_default_str()->check(CLI::Range(0, 64));
  dhm->add_flag("--dual", dual, "the basis of M' with condition status");
  auto* verify = app.add_subcommand("verify-all", "every acceptance criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    config.field = parse_field(field_text);
    config.format = format_text == "json" ? injres::Format::Json : injres::Format::Text;
    injres::Report report;
    if (*reduce) {
      report = injres::cmd_reduce(fraction, config);
    } else if (*resolution) {
      report = injres::cmd_resolution_check(config);
    } else if (*lc) {
      report = injres::cmd_lc(ideal, config);
    } else if (*ext_power) {
      report = injres::cmd_ext_power(power, config);
    } else if (*ext_self) {
      report = injres::cmd_ext_self(self_degree, config);
    } else if (*yoneda) {
      report = injres::cmd_yoneda_table(config);
    } else if (*dhm) {
      if (!ext && !dual) ext = dual = true;
      report = injres::cmd_dhm(ext, max_i, dual, config);
    } else if (*verify) {
      if (config.truncation < 4) throw injres::TruncationTooSmall("verify-all needs --trunc >= 4");
      report = injres::cmd_verify_all(config);
    }
    std::cout << injres::render(report) << std::flush;
    return report.ok() ? 0 : kExitFailedCheck;
  } catch (const injres::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
