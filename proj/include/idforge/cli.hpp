#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idforge/verifier.hpp"

namespace idforge {

struct CliConfig {
    enum class Command { list, verify, eval };

    Command command = Command::list;
    bool all = false;
    std::vector<std::string> identities;
    std::vector<std::string> params;       // raw bindings: n=2, n=0..4, nvec=(2,1)
    std::vector<std::string> assignments;  // raw bindings: x=1/2 (eval only)
    std::string mode = "symbolic";
    int trials = 20;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::optional<int> max_n;
    std::string format = "text";  // json|tsv|text
    std::string output;           // empty = stdout
    std::string side = "lhs";     // eval only
    std::string mutate;           // test hook; shift_upper|drop_last_term
    bool fail_fast = false;
    bool no_timing = false;
    long long term_budget = 1'000'000;  // overridden by IDFORGE_TERM_BUDGET
};

// Parses command-line words (without the program name). Throws UsageError
// on malformed input, unknown identity tokens, or malformed bindings.
CliConfig parse_args(const std::vector<std::string>& args);

// Executes a parsed configuration; returns the process exit code 0 or 1.
// Usage-level problems discovered late (schema clashes, unwritable output,
// partial assignments) surface as exceptions mapped to 2 by cli_main.
int run_cli(const CliConfig& config);

// Full wrapper with the exhaustive exit-code contract: 0 = verified,
// 1 = at least one refuted/unverified cell, 2 = usage or internal error.
int cli_main(int argc, const char* const* argv);

// Exposed for tests: "p" or "p/q" with arbitrary-precision parts.
Rational parse_rational(const std::string& text);

}  // namespace idforge
