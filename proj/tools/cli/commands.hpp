#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fuzzyfp::cli {

enum class OutputFormat { json, csv, both };

OutputFormat parse_format(const std::string& name);

struct CommandOptions {
  std::filesystem::path config;
  std::optional<std::uint64_t> seed;
  std::filesystem::path out = "out";
  OutputFormat format = OutputFormat::both;
  bool include_diagonal = false;
  std::optional<double> t_max;
};

/// Output directory or file could not be written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitConfig = 2;

/// Each command prints a short summary to `log`, writes its artifacts under
/// options.out and returns the exit code: 0 all checks passed, 1 some
/// property failed, 2 configuration or I/O failure. Errors go to `err`.
int cmd_axioms(const CommandOptions& options, std::ostream& log, std::ostream& err);
int cmd_hypotheses(const CommandOptions& options, std::ostream& log, std::ostream& err);
int cmd_solve(const CommandOptions& options, std::ostream& log, std::ostream& err);
int cmd_suite(const CommandOptions& options, std::ostream& log, std::ostream& err);

}  // namespace fuzzyfp::cli
