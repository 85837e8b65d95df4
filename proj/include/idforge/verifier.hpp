#pragma once

#include <cstdint>
#include <optional>

#include "idforge/catalog.hpp"

namespace idforge {

enum class Mode { symbolic, numeric };

enum class Status {
    pass,
    fail,
    known_discrepant_confirmed,
    mutation_inconclusive,
    aborted,  // term budget exceeded; never a verdict
};

enum class Mutation { shift_upper, drop_last_term };

std::string to_string(Mode mode);
std::string to_string(Status status);
std::string to_string(Mutation mutation);
Mode mode_from_string(const std::string& s);          // throws UsageError
Mutation mutation_from_string(const std::string& s);  // throws UsageError

// Verdict plus diagnostics for one (identity, params, mode) cell.
struct VerificationResult {
    std::string identity;
    std::string params;  // render_params output
    Mode mode = Mode::symbolic;
    Status status = Status::pass;
    // Expanded monomial counts in symbolic mode; streamed summand counts in
    // numeric mode.
    std::size_t lhs_monomials = 0;
    std::size_t rhs_monomials = 0;
    // Numeric refutation: an assignment on which the sides disagree.
    std::optional<std::map<std::string, Rational>> witness;
    // Symbolic modes keep the nonzero difference polynomial (canonical text).
    std::string difference;
    double elapsed_ms = 0.0;
    std::uint64_t seed = 0;
};

struct VerifyOptions {
    long long term_budget = 1'000'000;
    std::optional<Mutation> mutation;  // applied to the left side only
    int trials = 20;                   // numeric mode
    std::uint64_t seed = 0;            // numeric mode master seed
};

// Builds both sides and compares canonical forms; pass iff the difference
// is the zero polynomial. Known-discrepant entries compare against their
// frozen expected-difference fixture instead.
VerificationResult verify_symbolic(const Identity& id, const StructuralParams& params,
                                   const VerifyOptions& options = {});

// Schwartz-Zippel screening: draws `trials` assignments of random rationals
// (numerators -9..9, denominators 1..9, q nonzero) from a deterministic
// per-cell generator and requires exact equality on every draw.
VerificationResult verify_numeric(const Identity& id, const StructuralParams& params,
                                  const VerifyOptions& options = {});

// Applies the mutation to the left side and expects the identity to break;
// a mutant that still verifies reports mutation_inconclusive.
VerificationResult negative_control(const Identity& id, const StructuralParams& params,
                                    Mutation mutation, const VerifyOptions& options = {});

struct GridCell {
    const Identity* identity = nullptr;
    StructuralParams params;
};

// Identity selection plus parameter ranges; empty ranges select the
// built-in default grid of each identity (optionally capped by max_n).
struct GridSpec {
    std::vector<std::string> identities;  // empty selector => empty grid
    std::map<std::string, std::vector<int>> scalar_values;
    std::map<std::string, std::vector<VecIndex>> vector_values;
    std::optional<int> max_n;
    Mode mode = Mode::symbolic;
    int trials = 20;
    std::uint64_t seed = 0;
    int jobs = 1;
    long long term_budget = 1'000'000;
    std::optional<Mutation> mutation;
    bool fail_fast = false;
};

// The acceptance-scale parameter grid of one identity, optionally capped.
std::vector<StructuralParams> default_grid(const Identity& id, std::optional<int> max_n);

// Expands a GridSpec into validated cells, sorted by identity name then
// parameter tuple; throws SchemaError on any invalid binding.
std::vector<GridCell> expand_grid(const GridSpec& spec);

struct SuiteReport {
    std::vector<VerificationResult> results;
    bool aggregate_pass = true;  // no fail / inconclusive / aborted cells
};

// Runs every cell (optionally in parallel); the output order and content
// are independent of the parallelism width.
SuiteReport run_suite(const GridSpec& spec);

}  // namespace idforge
