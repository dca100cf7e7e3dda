#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace genset::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFails = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
};

/// Parses argv, runs one subcommand and writes its records to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genset::cli
