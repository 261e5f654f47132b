#ifndef SCLAB_CLI_HPP
#define SCLAB_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sclab/automata.hpp"
#include "sclab/complexity.hpp"
#include "sclab/tableau.hpp"

namespace sclab::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failed = 1;
inline constexpr int usage = 2;
inline constexpr int size = 3;
} // namespace exit_code

enum class Command { count, enumerate, witness, verify, sequences, saturate, minimize };
enum class Format { table, csv, json };

class UsageError : public Error {
public:
    using Error::Error;
};

struct CliConfig {
    Command command = Command::count;
    Format format = Format::table;

    // count / enumerate
    unsigned n = 0, p = 0;
    bool poly = false;
    bool origin = false;
    bool list = false;
    bool cross_check = false;
    std::size_t guard = default_enumeration_guard;

    // witness
    unsigned m = 0;
    std::string out_dir = ".";
    bool to_stdout = false;

    // verify
    std::vector<unsigned> ms, ns, ps;
    std::vector<BooleanOp> ops;
    std::uint64_t budget = default_state_budget;
    bool timing = false;

    // sequences
    std::string sequence;
    unsigned terms = 0;

    // saturate / minimize; "-" reads stdin
    std::string input = "-";
    bool states_only = false;

    /// Report destination for verify; empty means the output stream.
    std::string output;
};

/// Parses "3", "3..5" or "3,4,6" into a sorted list of distinct sizes.
/// Throws UsageError.
std::vector<unsigned> parse_range(const std::string& text);

/// Parses a comma-separated list of operation names; "nondegenerate"
/// expands to the ten non-degenerate operations. Throws UsageError.
std::vector<BooleanOp> parse_ops(const std::string& text);

/// Builds a configuration from the arguments (program name excluded).
/// `env_budget` is the value of SC_LAB_BUDGET, used when --budget is absent.
/// Throws UsageError; returns nullopt after printing help.
std::optional<CliConfig> parse(const std::vector<std::string>& args, std::ostream& out,
                               const std::optional<std::string>& env_budget = std::nullopt);

/// Executes a validated configuration. Library errors propagate.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse + run with errors mapped to exit codes and reported on `err`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::optional<std::string>& env_budget = std::nullopt);

} // namespace sclab::cli

#endif
