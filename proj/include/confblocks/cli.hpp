#ifndef CONFBLOCKS_CLI_HPP
#define CONFBLOCKS_CLI_HPP

#include <exception>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace confblocks::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kInternal = 3,
};

/// One row of the reference table of critical-level examples.
struct ReferenceRow {
  int r;
  int level;
  std::vector<std::string> weights;
  int rank_classical;
  int rank_block;
  int rank_partner;
  int degree;  // -1 when n > 4
};

const std::vector<ReferenceRow>& reference_table();

/// Prints the failure to `err` and maps it to an exit code.
int exit_code_for(std::exception_ptr failure, std::ostream& err);

/// Runs one command. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Worker count from CONFBLOCKS_THREADS, else hardware concurrency (at least 1).
unsigned worker_count();

}  // namespace confblocks::cli

#endif  // CONFBLOCKS_CLI_HPP
