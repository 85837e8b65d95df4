#include "idforge/report.hpp"

#include <sstream>

#include <json.hpp>

#include "idforge/version.hpp"

namespace idforge {

std::string report_json(const std::vector<VerificationResult>& results,
                        const ReportOptions& options) {
    nlohmann::ordered_json root;
    root["tool_version"] = kToolVersion;
    root["seed"] = options.seed;
    auto cells = nlohmann::ordered_json::array();
    for (const VerificationResult& r : results) {
        nlohmann::ordered_json cell;
        cell["identity"] = r.identity;
        cell["params"] = r.params;
        cell["mode"] = to_string(r.mode);
        cell["status"] = to_string(r.status);
        cell["lhs_monomials"] = r.lhs_monomials;
        cell["rhs_monomials"] = r.rhs_monomials;
        if (r.witness) {
            nlohmann::ordered_json w;
            for (const auto& [var, value] : *r.witness) w[var] = value.str();
            cell["witness"] = w;
        } else {
            cell["witness"] = nullptr;
        }
        if (options.include_timing) cell["elapsed_ms"] = r.elapsed_ms;
        cells.push_back(std::move(cell));
    }
    root["cells"] = std::move(cells);
    return root.dump(2) + "\n";
}

std::string report_tsv(const std::vector<VerificationResult>& results,
                       const ReportOptions& options) {
    std::ostringstream out;
    out << "identity\tparams\tmode\tstatus\tlhs_monomials\trhs_monomials";
    if (options.include_timing) out << "\telapsed_ms";
    out << "\n";
    for (const VerificationResult& r : results) {
        out << r.identity << "\t" << r.params << "\t" << to_string(r.mode) << "\t"
            << to_string(r.status) << "\t" << r.lhs_monomials << "\t" << r.rhs_monomials;
        if (options.include_timing) out << "\t" << r.elapsed_ms;
        out << "\n";
    }
    return out.str();
}

std::string report_text(const std::vector<VerificationResult>& results,
                        const ReportOptions& options) {
    std::ostringstream out;
    std::size_t ok = 0;
    for (const VerificationResult& r : results) {
        out << "[" << to_string(r.status) << "] " << r.identity;
        if (!r.params.empty()) out << " " << r.params;
        out << " " << to_string(r.mode) << " lhs=" << r.lhs_monomials
            << " rhs=" << r.rhs_monomials;
        if (options.include_timing) out << " (" << r.elapsed_ms << " ms)";
        out << "\n";
        if (!r.difference.empty()) out << "    difference: " << r.difference << "\n";
        if (r.witness) {
            out << "    witness:";
            for (const auto& [var, value] : *r.witness) out << " " << var << "=" << value.str();
            out << "\n";
        }
        if (r.status == Status::pass || r.status == Status::known_discrepant_confirmed) ++ok;
    }
    out << ok << "/" << results.size() << " cells verified\n";
    return out.str();
}

}  // namespace idforge
