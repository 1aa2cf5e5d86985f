// spheretri: enumerate sphere triangulations, count their rainbow edge
// colourings, and check the results against reference tables and oracles.
//
// Exit codes: 0 success, 1 failed check or internal invariant, 2 usage or
// parse error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "spheretri/generator.hpp"
#include "spheretri/text_format.hpp"
#include "spheretri/tricolor.hpp"
#include "spheretri/verify.hpp"

namespace fs = std::filesystem;
using namespace spheretri;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct EnumerateArgs {
  int max_n = 0;
  std::string out;
  std::string format = "rot";
};

struct ColorArgs {
  std::string in;
  bool count = false;
  bool list = false;
  bool summaries = false;
};

struct VerifyArgs {
  bool paper = false;
  bool oracle = false;
};

int run_enumerate(const EnumerateArgs& args) {
  if (args.max_n < 4 || args.max_n > kMaxEnumerationOrder) {
    std::cerr << "error: --max-n must be between 4 and " << kMaxEnumerationOrder
              << "; the insertion method is only valid for n < 12\n";
    return kExitUsage;
  }
  const auto result = enumerate(args.max_n);

  for (const auto& [n, reps] : result.by_n) {
    for (const auto& rep : reps) {
      const auto& t = rep.triangulation;
      int sum = 0;
      for (int d : degree_multiset(t)) sum += d;
      if (sum != 6 * (n - 2) || static_cast<int>(faces(t).size()) != 2 * n - 4) {
        std::cerr << "error: invariant failure on " << rep.code.hex() << "\n";
        return kExitFailure;
      }
    }
  }

  if (!args.out.empty()) {
    std::error_code ec;
    fs::create_directories(args.out, ec);
    if (ec) {
      std::cerr << "error: cannot create " << args.out << ": " << ec.message() << "\n";
      return kExitUsage;
    }
    for (const auto& [n, reps] : result.by_n) {
      const auto path = fs::path(args.out) / ("triangulations_n" + std::to_string(n) + "." + args.format);
      std::ofstream file(path);
      if (!file) {
        std::cerr << "error: cannot write " << path.string() << "\n";
        return kExitFailure;
      }
      std::size_t index = 0;
      for (const auto& rep : reps) {
        ++index;
        if (args.format == "rot") {
          file << to_rotation_text(rep.triangulation) << "\n";
        } else {
          file << "// code " << rep.code.hex() << "\n";
          file << to_dot(rep.triangulation, "T" + std::to_string(n) + "_" + std::to_string(index));
        }
      }
    }
  }

  std::cout << "n mu(n)\n";
  for (const auto& [n, reps] : result.by_n) std::cout << n << " " << reps.size() << "\n";
  return 0;
}

int run_color(const ColorArgs& args) {
  std::ifstream in(args.in);
  if (!in) {
    std::cerr << "error: cannot read " << args.in << "\n";
    return kExitUsage;
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::optional<PlaneTriangulation> t;
    try {
      t = parse_rotation_text(line);
    } catch (const Error& e) {
      std::cerr << "error: line " << line_no << ": " << e.what() << "\n";
      return kExitUsage;
    }
    const auto colorings = enumerate_colorings(*t);
    std::cout << "line " << line_no << ": n=" << t->order() << " colorings=" << colorings.size() << "\n";
    if (!args.list && !args.summaries) continue;
    std::size_t k = 0;
    for (const auto& c : colorings) {
      ++k;
      if (!validate(*t, c)) {
        std::cerr << "error: line " << line_no << ": emitted colouring " << k << " is not rainbow\n";
        return kExitFailure;
      }
      if (args.list) std::cout << "  coloring " << k << ": " << coloring_text(*t, c) << "\n";
      if (args.summaries) std::cout << "  summary " << k << ": " << summary_text(class_summary(*t, c)) << "\n";
    }
  }
  return 0;
}

int run_verify(const VerifyArgs& args) {
  const auto result = enumerate(8);
  auto checks = reference_checks(result);
  if (args.oracle) {
    auto more = oracle_checks(result);
    checks.insert(checks.end(), more.begin(), more.end());
  }
  print_checks(std::cout, checks);
  std::cout << "\n";
  print_report(std::cout, report_rows(result, 8));

  std::size_t failed = 0;
  for (const auto& c : checks) failed += !c.pass;
  std::cout << "\n" << checks.size() << " checks, " << failed << " failed\n";
  return failed ? kExitFailure : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate sphere triangulations and their rainbow edge colourings"};
  app.require_subcommand(1);

  EnumerateArgs enum_args;
  auto* enum_cmd = app.add_subcommand("enumerate", "List all triangulations up to --max-n vertices");
  enum_cmd->add_option("--max-n", enum_args.max_n, "Largest vertex count (4..11)")->required();
  enum_cmd->add_option("--out", enum_args.out, "Directory for one file per vertex count");
  enum_cmd->add_option("--format", enum_args.format, "Output format")
      ->check(CLI::IsMember({"rot", "dot"}));

  ColorArgs color_args;
  auto* color_cmd = app.add_subcommand("color", "Count or list rainbow colourings of each input line");
  color_cmd->add_option("--in", color_args.in, "Rotation-format input file")->required();
  auto* count_flag = color_cmd->add_flag("--count", color_args.count, "Print the count per triangulation (default)");
  auto* list_flag = color_cmd->add_flag("--list", color_args.list, "Print every colouring");
  count_flag->excludes(list_flag);
  color_cmd->add_flag("--summaries", color_args.summaries, "Print colour-class summaries");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check reference counts, tables and oracles");
  verify_cmd->add_flag("--paper", verify_args.paper, "Reference counts and tables (default)");
  verify_cmd->add_flag("--oracle", verify_args.oracle, "Also run the brute-force oracle sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enum_cmd) return run_enumerate(enum_args);
    if (*color_cmd) return run_color(color_args);
    if (*verify_cmd) return run_verify(verify_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
