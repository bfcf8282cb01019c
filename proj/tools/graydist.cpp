#include <fstream>
#include <iostream>
#include <regex>
#include <string>

#include "CLI11.hpp"
#include "graydist/classifier.hpp"
#include "graydist/gray.hpp"
#include "graydist/scenario.hpp"
#include "json.hpp"

namespace {

using namespace graydist;

int run_check(const std::string& path, int max_set_size, const std::string& report_path) {
  Scenario s;
  try {
    s = load_scenario(path);
  } catch (const ScenarioParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ScenarioResolutionError& e) {
    std::cerr << "resolution error: " << e.what() << "\n";
    return 2;
  }
  if (max_set_size >= 1) s.max_set_size = static_cast<std::uint32_t>(max_set_size);
  if (!report_path.empty()) s.report = report_path;
  CheckReport rep;
  try {
    rep = run_scenario(s);
  } catch (const std::exception& e) {
    std::cerr << "resolution error: " << e.what() << "\n";
    return 2;
  }
  const std::string text = rep.to_json().dump(2) + "\n";
  if (!s.report.empty()) {
    std::ofstream out(s.report);
    if (!out) {
      std::cerr << "cannot write report " << s.report << "\n";
      return 2;
    }
    out << text;
  }
  std::cout << rep.summary();
  return rep.pass() ? 0 : 1;
}

int run_emit(const std::string& name, const std::string& format) {
  Presentation p;
  static const std::regex power(R"(mnd_power\((\d+)\))");
  std::smatch m;
  if (name == "walking_monad") {
    p = walking_monad();
  } else if (std::regex_match(name, m, power)) {
    const int n = std::stoi(m[1]);
    if (n > 4) {
      std::cerr << "unsupported n " << n << " (at most 4)\n";
      return 2;
    }
    p = mnd_power(terminal_presentation(), n);
  } else {
    std::cerr << "unknown presentation \"" << name << "\"\n";
    return 2;
  }
  if (format == "json")
    std::cout << presentation_to_json(p).dump(2) << "\n";
  else
    std::cout << presentation_pretty(p);
  return 0;
}

int run_hat_table(int max, const std::string& format) {
  nlohmann::json rows = nlohmann::json::array();
  if (format == "pretty") std::cout << "m\\n";
  if (format == "pretty")
    for (int n = 0; n <= max; ++n) std::cout << "\t" << n;
  if (format == "pretty") std::cout << "\n";
  for (int m = 0; m <= max; ++m) {
    nlohmann::json row = nlohmann::json::array();
    if (format == "pretty") std::cout << m;
    for (int n = 0; n <= max; ++n) {
      const auto count = hat_terminal_hom(m, n).size();
      row.push_back(count);
      if (format == "pretty") std::cout << "\t" << count;
    }
    if (format == "pretty") std::cout << "\n";
    rows.push_back(row);
  }
  if (format == "json") std::cout << nlohmann::json{{"counts", rows}, {"max", max}}.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  configure_threads_from_env();
  CLI::App app{"graydist: exhaustive checks for monads, distributive laws and Gray presentations"};
  app.require_subcommand(1);

  std::string scenario, report;
  int max_set_size = 0;
  auto* check = app.add_subcommand("check", "Run the suites of a JSON scenario");
  check->add_option("--scenario", scenario, "Scenario file")->required();
  check->add_option("--max-set-size", max_set_size, "Override max_set_size")->check(CLI::PositiveNumber);
  check->add_option("--report", report, "Report path (overrides the scenario)");

  std::string presentation, format = "pretty";
  auto* emit = app.add_subcommand("emit", "Print a presentation");
  emit->add_option("--presentation", presentation, "walking_monad or mnd_power(n)")->required();
  emit->add_option("--format", format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));

  int hat_max = 4;
  std::string hat_format = "pretty";
  auto* hat = app.add_subcommand("hat-table", "Print 2-cell counts of hat(1) between lengths m and n");
  hat->add_option("--max", hat_max, "Largest length")->check(CLI::Range(0, 6));
  hat->add_option("--format", hat_format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (*check) return run_check(scenario, max_set_size, report);
    if (*emit) return run_emit(presentation, format);
    if (*hat) return run_hat_table(hat_max, hat_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
