#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabcv/pyramid.hpp"

namespace stabcv {

enum class Command { Mutate, Fpoly, Stabilize, Pyramid, Verify };
enum class OutputFormat { Text, Json };

/// Everything a command needs; all computation is deterministic.
struct CommandConfig {
  Command command = Command::Fpoly;
  std::optional<std::string> preset;
  std::optional<std::string> quiver_path;
  std::optional<std::size_t> steps;
  std::optional<std::vector<std::size_t>> sequence;
  std::optional<std::string> two_cycles;  // "cancel" or "keep"; quiver files only
  std::int64_t degree = 8;
  std::optional<std::size_t> period;
  std::size_t window = 3;
  bool normalize_parity = false;
  std::optional<std::pair<std::size_t, std::size_t>> subsample;
  std::optional<ShapeKind> shape;
  std::optional<int> k;
  bool simple = false;
  bool dump_shape = false;
  bool all_steps = false;  // fpoly: print every step
  std::optional<std::string> limit;  // "S", "T" or "T4"
  OutputFormat format = OutputFormat::Text;
  std::optional<std::string> out;
  std::size_t max_k = 8;
};

struct CommandResult {
  int exit_code = 0;
  std::string output;
  std::string error;
};

/// Runs one command. Exit code 2 for invalid input, 1 for a failed verification or a
/// broken invariant, 0 otherwise. Writes nothing itself.
CommandResult dispatch(const CommandConfig& config);

/// Parses "o:s" into (offset, stride).
std::pair<std::size_t, std::size_t> parse_subsample(const std::string& text);
/// Parses "0,1,2" into vertex indices.
std::vector<std::size_t> parse_sequence(const std::string& text);

/// Command-line entry point: parses flags, dispatches, writes output to `out` (or the
/// --out file) and diagnostics to `err`. Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stabcv
