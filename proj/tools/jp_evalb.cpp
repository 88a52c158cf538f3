#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jpevalb/pipeline.hpp"

namespace {

struct LegacySwitch {
  bool on = false;
  std::optional<std::string> prm;
};

// --evalb takes an optional value, which CLI11 cannot tell apart from a
// positional. The token after it is the parameter file only when three
// plain arguments are present. Removes the switch from args.
LegacySwitch take_evalb(std::vector<std::string>& args) {
  LegacySwitch out;
  std::size_t plain = 0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    if (a == "--exceptions") {
      ++i;
    } else if (a.empty() || a[0] != '-') {
      ++plain;
    }
  }
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    if (a.rfind("--evalb=", 0) == 0) {
      out.on = true;
      out.prm = a.substr(8);
    } else if (a == "--evalb") {
      out.on = true;
      if (plain == 3 && i + 1 < args.size() && args[i + 1][0] != '-') {
        out.prm = args[++i];
      }
    } else {
      rest.push_back(a);
    }
  }
  args = std::move(rest);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  // Single-dash spellings are accepted too.
  std::vector<std::string> args(argv + 1, argv + argc);
  for (auto& a : args) {
    if (a == "-evalb") a = "--evalb";
    if (a == "-exceptions") a = "--exceptions";
  }
  const LegacySwitch legacy = take_evalb(args);

  CLI::App app{"Alignment-based PARSEVAL evaluation of constituency parses.\n"
               "  --evalb [param.prm]  replicate evalb (COLLINS.prm settings by default)",
               "jp-evalb"};
  jpevalb::RunConfig config;
  std::string gold;
  std::string system;
  std::string exceptions;
  app.add_option("gold_file", gold, "Gold trees")->required();
  app.add_option("system_parsed_file", system, "System trees")->required();
  auto* exc = app.add_option("--exceptions", exceptions,
                             "Tab-separated word equivalences for alignment");

  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  config.gold_path = gold;
  config.system_path = system;
  config.legacy = legacy.on;
  config.prm_path = legacy.prm;
  if (exc->count() > 0) config.exception_list_path = exceptions;
  return jpevalb::run(config, std::cout, std::cerr);
}
