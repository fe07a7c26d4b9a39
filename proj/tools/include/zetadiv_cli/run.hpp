#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "zetadiv_cli/report.hpp"

namespace zetadiv::cli {

enum class Command { Count, Lpoly, Gsum, VerifyDk, CheckDiv, ScanGsum, Counterexample };

std::optional<Command> parse_command(const std::string& name);
std::string to_string(Command c);

struct RunConfig {
    Command command = Command::Count;
    std::optional<std::string> curve;
    std::optional<std::string> lc;
    std::optional<std::string> ld;
    std::optional<unsigned> k;
    std::optional<unsigned> m;
    std::optional<unsigned> horizon;
    unsigned threads = 1;
    Format format = Format::Json;
    unsigned max_m = 34;
};

/// Bad flags or flag combinations; the message names the flag.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws UsageError when a required flag is missing or out of range.
void validate(const RunConfig& config);

/// ZETADIV_THREADS if set and positive, else the logical processor count.
unsigned default_threads();

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

/// Runs one command, writing the report to `out` and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a config and runs it.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zetadiv::cli
