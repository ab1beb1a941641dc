#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crl_atlas {

enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_usage = 2, exit_inconclusive = 3 };

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

}  // namespace crl_atlas
