#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "avecond/settings.hpp"

namespace avecond::cli {

enum class Command { Condnum, Certify, Regularity, Solve, Lcp, Selftest };
enum class Format { Json, Text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInapplicable = 2;
inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  Command command = Command::Selftest;
  // one | two | inf | scaled:<file> | scaled:<p>:<file>
  std::string norm = "inf";
  // auto | exact | a BoundMethod name
  std::string method = "auto";
  std::vector<std::filesystem::path> inputs;
  Format format = Format::Json;
  std::uint64_t seed = 0;
  std::size_t enum_threshold = 14;
  std::optional<double> gamma;
  std::optional<std::filesystem::path> r_path;
  // name=value overrides applied on top of Settings{}.
  std::vector<std::pair<std::string, double>> tolerances;
  unsigned threads = 1;
  bool timing = false;
};

// Applies --tol overrides; throws avecond::Error(InvalidArgument) on an
// unknown name.
Settings make_settings(const RunConfig& cfg);

// Executes one command, writing the report to `out` and diagnostics to `err`.
// Returns kExitOk, kExitInapplicable (NotApplicable / NotRegular and other
// mathematical inapplicability) or kExitError.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without the program name) and runs them.
int run_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace avecond::cli
