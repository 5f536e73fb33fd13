#pragma once

#include "hbtensor/transform.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace hbtensor::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kPreconditionError = 3,
  kInternalError = 4,
};

enum class Verb { info, dual, uniformize, tensor, verify, paths, export_ };

struct Command {
  Verb verb = Verb::info;
  std::string input;
  std::optional<Approach> approach;
  std::string format;  // empty selects the verb's default
  std::optional<std::string> out;
  std::optional<std::string> trace_out;
  std::optional<std::string> from_tensor;
  std::optional<std::string> trace_in;
  std::optional<std::string> from_vertex;
  std::optional<std::string> to_vertex;
  bool full = false;
  bool bound_only = false;
  std::uint64_t seed = 1;
  std::size_t iterations = 10'000;
};

/// Parses argv and runs the command. Output goes to `out`, diagnostics to
/// `err`; the return value is the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int execute(const Command& cmd, std::ostream& out, std::ostream& err);

/// HBTENSOR_MAX_DENSE when set and valid, the library default otherwise.
std::uint64_t dense_limit_from_env();

}  // namespace hbtensor::cli
