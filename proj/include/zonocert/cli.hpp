#pragma once

#include "zonocert/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace zonocert::cli {

inline constexpr const char* kVerbs[] = {"edges",   "lattice", "zonotope", "facets", "venkov",
                                         "dv-cell", "certify", "export",   "corpus"};

/// Process exit codes.
enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2 };

struct Command {
  std::string verb;
  std::string input_path = "-";  // "-" reads standard input
  std::string output_path = "-"; // "-" writes standard output
  Rational multiplier = 4;       // dv-cell
  std::string format = "svg";    // export: svg | obj
  unsigned radius = 0;           // export patch radius
  int digits = 12;               // export precision
};

/// Executes one parsed command. Domain failures write a JSON error payload
/// to the output and return kDomain; usage, schema and I/O failures write to
/// `err` and return kUsage.
int run(const Command& command, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (args[0] is the program name) and runs them.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace zonocert::cli
