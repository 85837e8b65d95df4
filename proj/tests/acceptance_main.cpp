// Acceptance suite: runs every acceptance criterion at its stated (exact)
// tolerance and prints one PASS/FAIL line per criterion. Expects the path
// of the idforge CLI binary as argv[1] for the report-determinism check.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "idforge/cli.hpp"
#include "idforge/enumeration.hpp"
#include "idforge/errors.hpp"
#include "idforge/report.hpp"
#include "idforge/verifier.hpp"

using namespace idforge;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& fn) {
    std::string detail;
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

Polynomial var(const std::string& name) { return Polynomial::variable(name); }

StructuralParams scalars(std::initializer_list<std::pair<const char*, int>> kv) {
    StructuralParams p;
    for (const auto& [k, v] : kv) p.scalars[k] = v;
    return p;
}

StructuralParams nvec_params(std::initializer_list<int> v) {
    StructuralParams p;
    p.vectors["nvec"] = VecIndex(v);
    return p;
}

GridSpec full_grid(Mode mode) {
    GridSpec spec;
    for (const Identity& id : catalog()) spec.identities.push_back(id.name);
    spec.mode = mode;
    spec.trials = 20;
    spec.seed = 0;
    return spec;
}

bool ok_status(Status s) {
    return s == Status::pass || s == Status::known_discrepant_confirmed;
}

std::vector<VecIndex> nvec_sweep(int max_dim, int max_total) {
    std::vector<VecIndex> out;
    for (int m = 1; m <= max_dim; ++m)
        for (int t = 0; t <= max_total; ++t) {
            CompositionCursor cursor(t, m);
            while (const std::vector<int>* c = cursor.next()) out.push_back(VecIndex(*c));
        }
    return out;
}

// Shared across criteria 1 and 5 for the coherence cross-check.
std::map<std::string, Status> g_symbolic_statuses;

bool run_full_symbolic(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const SuiteReport report = run_suite(full_grid(Mode::symbolic));
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::size_t bad = 0, confirmed = 0;
    for (const VerificationResult& r : report.results) {
        g_symbolic_statuses[r.identity + "|" + r.params] = r.status;
        if (!ok_status(r.status)) ++bad;
        if (r.status == Status::known_discrepant_confirmed) ++confirmed;
    }
    std::ostringstream ss;
    ss << report.results.size() << " cells in " << seconds << " s";
    detail = ss.str();
    // The only non-pass cell allowed is the frozen gould_variation fixture.
    return bad == 0 && confirmed == 1 && seconds < 300.0 && report.aggregate_pass;
}

bool derived_fixtures(std::string&) {
    const Polynomial xyz = var("x") + var("y") + var("z");
    bool ok = build_side(find_identity("jensen"), scalars({{"n", 1}}), Side::lhs) == xyz &&
              build_side(find_identity("jensen"), scalars({{"n", 1}}), Side::rhs) == xyz;

    const Polynomial simons2 = Polynomial(1) + var("x").scaled(Rational(6)) +
                               var("x").pow(2).scaled(Rational(6));
    ok = ok && build_side(find_identity("simons"), scalars({{"n", 2}}), Side::lhs) == simons2 &&
         build_side(find_identity("simons"), scalars({{"n", 2}}), Side::rhs) == simons2;

    StructuralParams lemma = nvec_params({1, 1});
    lemma.scalars["s"] = 2;
    ok = ok && build_side(find_identity("compositions_lemma"), lemma, Side::lhs) ==
                   Polynomial(6) &&
         build_side(find_identity("compositions_lemma"), lemma, Side::rhs) == Polynomial(6);

    ok = ok && build_side(find_identity("abel"), scalars({{"n", 1}}), Side::lhs) ==
                   var("x") + var("y");
    return ok;
}

bool gould_variation_desk_check(std::string& detail) {
    const Identity& id = find_identity("gould_variation");
    const StructuralParams p = scalars({{"n", 1}});
    const Polynomial diff = build_side(id, p, Side::lhs) - build_side(id, p, Side::rhs);
    const VerificationResult r = verify_symbolic(id, p);
    detail = "difference " + diff.str();
    return diff == var("x") + var("y") && r.status == Status::known_discrepant_confirmed &&
           r.difference == "x + y";
}

bool negative_controls(std::string& detail) {
    struct Control {
        const char* identity;
        StructuralParams params;
    };
    const std::vector<Control> controls = {
        {"chu_vandermonde", scalars({{"n", 2}})},
        {"abel", scalars({{"n", 2}})},
        {"rothe", scalars({{"n", 2}})},
        {"jensen", scalars({{"n", 2}})},
        {"gould_jensen", scalars({{"n", 2}})},
        {"stirling_sum", scalars({{"n", 2}, {"r", 2}})},
        {"chu_multisum", scalars({{"n", 2}, {"s", 2}})},
        {"jensen_alt", scalars({{"n", 2}})},
        {"shift_identity", scalars({{"n", 2}})},
        {"gkp", scalars({{"m", 2}})},
        {"chu_multisum_alt", scalars({{"n", 2}, {"s", 2}})},
        {"ks2", scalars({{"n", 2}, {"s", 1}})},
        {"gkp_full", scalars({{"m", 3}, {"n", 1}})},
        {"sun", scalars({{"m", 2}, {"n", 2}, {"a", 1}})},
        {"munarini", scalars({{"n", 2}})},
        {"simons", scalars({{"n", 2}})},
        {"cv_multi", nvec_params({1, 1})},
        {"stirling_multi",
         [] {
             StructuralParams p = nvec_params({1, 1});
             p.vectors["rvec"] = VecIndex{1, 1};
             return p;
         }()},
        {"scalar_upper_composition",
         [] {
             StructuralParams p = nvec_params({1, 1});
             p.vectors["avec"] = VecIndex{0, 2};
             return p;
         }()},
        {"compositions_lemma",
         [] {
             StructuralParams p = nvec_params({1, 1});
             p.scalars["s"] = 2;
             return p;
         }()},
        {"mohanty_handa", nvec_params({1, 1})},
        {"chu89",
         [] {
             StructuralParams p = nvec_params({1, 1});
             p.scalars["s"] = 2;
             return p;
         }()},
        {"chu89_alt",
         [] {
             StructuralParams p = nvec_params({1, 1});
             p.scalars["s"] = 2;
             return p;
         }()},
        {"newmulti",
         [] {
             StructuralParams p = nvec_params({1, 1});
             p.scalars["s"] = 1;
             return p;
         }()},
        {"multi_munarini",
         [] {
             StructuralParams p = nvec_params({1, 1});
             p.scalars["alpha"] = 2;
             p.scalars["beta"] = 1;
             return p;
         }()},
        {"multi_simons", nvec_params({1, 1})},
        {"hou_zeng_q", scalars({{"m", 2}, {"n", 2}, {"a", 1}})},
        {"munarini_q", scalars({{"n", 2}, {"alpha", 1}, {"beta", 2}})},
    };

    std::size_t unflagged = 0;
    for (const Identity& id : catalog())
        if (!id.flagged()) ++unflagged;
    if (controls.size() != unflagged) {
        detail = "control table does not cover every non-flagged identity";
        return false;
    }

    int fails = 0, inconclusive = 0;
    for (const Control& c : controls)
        for (Mutation m : {Mutation::shift_upper, Mutation::drop_last_term}) {
            const Status s = negative_control(find_identity(c.identity), c.params, m).status;
            if (s == Status::fail) ++fails;
            if (s == Status::mutation_inconclusive) ++inconclusive;
        }
    std::ostringstream ss;
    ss << fails << " mutations refuted, " << inconclusive << " inconclusive";
    detail = ss.str();
    return fails == static_cast<int>(2 * controls.size()) && inconclusive == 0;
}

bool numeric_coherence(std::string& detail) {
    const SuiteReport report = run_suite(full_grid(Mode::numeric));
    std::size_t bad = 0, incoherent = 0;
    for (const VerificationResult& r : report.results) {
        if (!ok_status(r.status)) ++bad;
        auto it = g_symbolic_statuses.find(r.identity + "|" + r.params);
        if (it != g_symbolic_statuses.end() && it->second == Status::pass &&
            r.status != Status::pass)
            ++incoherent;  // a numeric disagreement on a symbolically-passing cell
    }
    std::ostringstream ss;
    ss << report.results.size() << " cells x 20 trials, " << incoherent << " incoherent";
    detail = ss.str();
    return bad == 0 && incoherent == 0 && !g_symbolic_statuses.empty();
}

bool specialization_ladder(std::string&) {
    auto rename_z = [](const Polynomial& p) {
        return p.subst({{"z1", var("z")}});
    };

    for (int n = 0; n <= 4; ++n)
        for (Side side : {Side::lhs, Side::rhs})
            if (rename_z(build_side(find_identity("mohanty_handa"), nvec_params({n}), side)) !=
                build_side(find_identity("jensen"), scalars({{"n", n}}), side))
                return false;

    for (int n = 0; n <= 4; ++n)
        for (int s = 1; s <= 3; ++s) {
            StructuralParams vp = nvec_params({n});
            vp.scalars["s"] = s;
            for (Side side : {Side::lhs, Side::rhs})
                if (rename_z(build_side(find_identity("chu89"), vp, side)) !=
                    build_side(find_identity("chu_multisum"), scalars({{"n", n}, {"s", s}}),
                               side))
                    return false;
        }

    for (int n = 0; n <= 4; ++n)
        for (int s = 0; s <= 3; ++s) {
            StructuralParams vp = nvec_params({n});
            vp.scalars["s"] = s;
            for (Side side : {Side::lhs, Side::rhs})
                if (rename_z(build_side(find_identity("newmulti"), vp, side)) !=
                    build_side(find_identity("ks2"), scalars({{"n", n}, {"s", s}}), side))
                    return false;
        }

    for (const VecIndex& nvec : nvec_sweep(3, 4)) {
        StructuralParams mp;
        mp.vectors["nvec"] = nvec;
        mp.scalars["alpha"] = nvec.sum();
        mp.scalars["beta"] = nvec.sum();
        StructuralParams sp;
        sp.vectors["nvec"] = nvec;
        for (Side side : {Side::lhs, Side::rhs})
            if (build_side(find_identity("multi_munarini"), mp, side) !=
                build_side(find_identity("multi_simons"), sp, side))
                return false;
    }

    for (int n = 0; n <= 3; ++n)
        for (int alpha = 0; alpha <= 3; ++alpha)
            for (int beta = 0; beta <= 3; ++beta) {
                const auto qp = scalars({{"n", n}, {"alpha", alpha}, {"beta", beta}});
                const std::map<std::string, Polynomial> q1{{"q", Polynomial(1)}};
                const std::map<std::string, Polynomial> ab{{"alpha", Polynomial(alpha)},
                                                           {"beta", Polynomial(beta)}};
                for (Side side : {Side::lhs, Side::rhs})
                    if (build_side(find_identity("munarini_q"), qp, side).subst(q1) !=
                        build_side(find_identity("munarini"), scalars({{"n", n}}), side)
                            .subst(ab))
                        return false;
            }
    return true;
}

std::string g_cli_path;

int run_command(const std::string& command) {
    const int status = std::system(command.c_str());
    if (status < 0) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool report_determinism(std::string& detail) {
    if (g_cli_path.empty()) {
        detail = "CLI binary path missing (pass it as argv[1])";
        return false;
    }
    const auto dir = std::filesystem::temp_directory_path();
    struct Run {
        const char* tag;
        std::string extra;
    };
    const std::vector<Run> runs = {
        {"a", "--jobs 1"}, {"b", "--jobs 1"}, {"c", "--jobs 3"}};

    for (const char* mode : {"symbolic", "numeric"}) {
        std::vector<std::string> bodies;
        for (const Run& run : runs) {
            const auto path =
                dir / (std::string("idforge_accept_") + mode + "_" + run.tag + ".json");
            std::ostringstream cmd;
            cmd << "\"" << g_cli_path << "\" verify --all --mode " << mode
                << " --trials 5 --seed 7 --no-timing --format json " << run.extra
                << " --output \"" << path.string() << "\"";
            const int rc = run_command(cmd.str());
            if (rc != 0) {
                detail = std::string("verify --all exited with ") + std::to_string(rc);
                return false;
            }
            bodies.push_back(slurp(path));
            std::filesystem::remove(path);
        }
        if (bodies[0].empty() || bodies[0] != bodies[1] || bodies[0] != bodies[2]) {
            detail = std::string(mode) + " reports differ across runs/jobs";
            return false;
        }
    }
    return true;
}

bool kernel_micro_oracles(std::string&) {
    for (long long alpha = -4; alpha <= 6; ++alpha)
        for (long long k = 0; k <= 5; ++k) {
            const Polynomial g = gauss_binom(alpha, k);
            const Rational at_one = g.is_zero() ? Rational(0) : g.eval({{"q", Rational(1)}});
            if (at_one != binom_int(alpha, k)) return false;
        }

    for (int n = 0; n <= 8; ++n)
        for (int s = 1; s <= 5; ++s) {
            long long count = 0;
            CompositionCursor cursor(n, s);
            while (cursor.next()) ++count;
            if (Rational(count) != binom_int(n + s - 1, s - 1)) return false;
        }

    for (long long a = -5; a <= 5; ++a)
        for (long long k = 0; k <= 6; ++k) {
            const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
            if (binom_int(-a, k) != sign * binom_int(a + k - 1, k)) return false;
        }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];

    criterion(1, "full symbolic grid at desk scale", run_full_symbolic);
    criterion(2, "derived expansion fixtures", derived_fixtures);
    criterion(3, "gould_variation desk check freezes the discrepancy",
              gould_variation_desk_check);
    criterion(4, "negative controls refute every non-flagged identity", negative_controls);
    criterion(5, "numeric/symbolic coherence over the full grid", numeric_coherence);
    criterion(6, "specialization ladder", specialization_ladder);
    criterion(7, "byte-identical reports across runs and --jobs", report_determinism);
    criterion(8, "kernel micro-oracles", kernel_micro_oracles);

    if (g_failures == 0)
        std::cout << "acceptance: all criteria pass" << std::endl;
    else
        std::cout << "acceptance: " << g_failures << " criterion(s) failing" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
