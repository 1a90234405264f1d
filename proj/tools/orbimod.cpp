#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "orbimod/cli.hpp"

namespace {

bool read_all(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of orbifold Riemann surfaces and rank-2 Higgs V-bundle moduli"};
  app.require_subcommand(1, 1);

  std::string input = "-";
  std::string format = "json";
  const char* commands[][2] = {
      {"surface", "Euler characteristic, canonical bundle, presentation and roots of a surface"},
      {"bundle", "Dimensions, reducibility, weights and stable-pair verdicts of a rank-2 bundle"},
      {"strata", "Critical submanifolds, minimum and Poincare polynomial"},
      {"poincare", "Poincare polynomial with optional supplied pieces"},
      {"spectral", "Hitchin base, spectral curve and generic fibre"},
      {"reps", "Rotation numbers, representation varieties and real components"},
      {"check", "Run the randomized invariant suites"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--input", input, "JSON input file, or - for stdin");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const bool input_given = app.get_subcommands().front()->count("--input") > 0;
  std::string document;
  if (command != "check" || input_given) {
    if (!read_all(input, document)) {
      const nlohmann::ordered_json err{{"error", {{"type", "io_error"}, {"message", "cannot read " + input}}}};
      std::cerr << err.dump() << "\n";
      return 2;
    }
  }

  const auto result = orbimod::run_command(command, document, format);
  std::cout << result.output;
  std::cerr << result.error;
  return result.exit_code;
}
