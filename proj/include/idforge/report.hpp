#pragma once

#include <string>
#include <vector>

#include "idforge/verifier.hpp"

namespace idforge {

struct ReportOptions {
    bool include_timing = true;
    std::uint64_t seed = 0;
};

// {tool_version, seed, cells:[{identity, params, mode, status,
// lhs_monomials, rhs_monomials, witness, elapsed_ms}]} with keys in that
// order; elapsed_ms is omitted when timing is excluded, making reports with
// identical inputs byte-identical.
std::string report_json(const std::vector<VerificationResult>& results,
                        const ReportOptions& options);

// Columns: identity, params, mode, status, lhs_monomials, rhs_monomials,
// elapsed_ms (the last dropped when timing is excluded).
std::string report_tsv(const std::vector<VerificationResult>& results,
                       const ReportOptions& options);

// Human-readable lines plus a summary row.
std::string report_text(const std::vector<VerificationResult>& results,
                        const ReportOptions& options);

}  // namespace idforge
