#include "idforge/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "idforge/enumeration.hpp"
#include "idforge/errors.hpp"

namespace idforge {

std::string to_string(Mode mode) { return mode == Mode::symbolic ? "symbolic" : "numeric"; }

std::string to_string(Status status) {
    switch (status) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::known_discrepant_confirmed: return "known_discrepant_confirmed";
        case Status::mutation_inconclusive: return "mutation_inconclusive";
        case Status::aborted: return "aborted";
    }
    return "?";
}

std::string to_string(Mutation mutation) {
    return mutation == Mutation::shift_upper ? "shift_upper" : "drop_last_term";
}

Mode mode_from_string(const std::string& s) {
    if (s == "symbolic") return Mode::symbolic;
    if (s == "numeric") return Mode::numeric;
    throw UsageError("unknown mode '" + s + "' (expected symbolic or numeric)");
}

Mutation mutation_from_string(const std::string& s) {
    if (s == "shift_upper") return Mutation::shift_upper;
    if (s == "drop_last_term") return Mutation::drop_last_term;
    throw UsageError("unknown mutation '" + s + "' (expected shift_upper or drop_last_term)");
}

namespace {

BuildOptions lhs_options(const VerifyOptions& options) {
    BuildOptions b;
    b.term_budget = options.term_budget;
    if (options.mutation == Mutation::shift_upper) b.upper_shift = 1;
    if (options.mutation == Mutation::drop_last_term) b.drop_last_term = true;
    return b;
}

BuildOptions rhs_options(const VerifyOptions& options) {
    BuildOptions b;
    b.term_budget = options.term_budget;
    return b;
}

const Polynomial* fixture_for(const Identity& id, const std::string& rendered) {
    auto it = id.expected_difference.find(rendered);
    return it == id.expected_difference.end() ? nullptr : &it->second;
}

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Seed derived from (master seed, identity, params) so results are
// independent of cell execution order and parallelism width.
std::uint64_t cell_seed(std::uint64_t master, const std::string& identity,
                        const std::string& rendered) {
    return fnv1a(identity + "|" + rendered + "|" + std::to_string(master));
}

class Stopwatch {
public:
    double elapsed_ms() const {
        const auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

VerificationResult verify_symbolic(const Identity& id, const StructuralParams& params,
                                   const VerifyOptions& options) {
    Stopwatch timer;
    VerificationResult r;
    r.identity = id.name;
    r.params = render_params(id, params);
    r.mode = Mode::symbolic;
    r.seed = options.seed;
    try {
        const Polynomial lhs = build_side(id, params, Side::lhs, lhs_options(options));
        const Polynomial rhs = build_side(id, params, Side::rhs, rhs_options(options));
        r.lhs_monomials = lhs.term_count();
        r.rhs_monomials = rhs.term_count();
        const Polynomial diff = lhs - rhs;

        if (options.mutation) {
            r.status = diff.is_zero() ? Status::mutation_inconclusive : Status::fail;
            if (!diff.is_zero()) r.difference = diff.str();
        } else if (id.flagged()) {
            if (const Polynomial* fixture = fixture_for(id, r.params)) {
                r.status = (diff == *fixture) ? Status::known_discrepant_confirmed
                                              : Status::fail;
                r.difference = diff.str();
            } else if (diff.is_zero()) {
                r.status = Status::pass;
            } else {
                r.status = Status::known_discrepant_confirmed;
                r.difference = diff.str();
            }
        } else if (diff.is_zero()) {
            r.status = Status::pass;
        } else {
            r.status = Status::fail;
            r.difference = diff.str();
        }
    } catch (const TermBudgetExceeded&) {
        r.status = Status::aborted;
    }
    r.elapsed_ms = timer.elapsed_ms();
    return r;
}

namespace {

std::vector<std::map<std::string, Rational>> draw_assignments(
    const std::vector<std::string>& vars, int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num_dist(-9, 9);
    std::uniform_int_distribution<int> den_dist(1, 9);
    std::vector<std::map<std::string, Rational>> out(trials);
    for (int t = 0; t < trials; ++t) {
        for (const std::string& v : vars) {
            int num = num_dist(rng);
            while (v == "q" && num == 0) num = num_dist(rng);  // q drawn nonzero
            out[t].emplace(v, Rational(BigInt(num), BigInt(den_dist(rng))));
        }
    }
    return out;
}

}  // namespace

VerificationResult verify_numeric(const Identity& id, const StructuralParams& params,
                                  const VerifyOptions& options) {
    if (options.trials < 1) throw ContractViolation("verify_numeric: trials must be >= 1");
    Stopwatch timer;
    VerificationResult r;
    r.identity = id.name;
    r.params = render_params(id, params);
    r.mode = Mode::numeric;
    r.seed = options.seed;

    std::vector<std::string> vars = id.symbolic_vars(params);
    std::sort(vars.begin(), vars.end());
    const auto assignments =
        draw_assignments(vars, options.trials, cell_seed(options.seed, id.name, r.params));

    try {
        std::vector<Rational> lhs_vals(options.trials), rhs_vals(options.trials);
        std::size_t lhs_terms = 0, rhs_terms = 0;
        // Each summand is built once and evaluated on every draw; the sides
        // are never expanded, making this an independent route from the
        // symbolic comparison.
        for_each_term(id, params, Side::lhs, lhs_options(options), [&](const Polynomial& t) {
            ++lhs_terms;
            for (int i = 0; i < options.trials; ++i) lhs_vals[i] += t.eval(assignments[i]);
        });
        for_each_term(id, params, Side::rhs, rhs_options(options), [&](const Polynomial& t) {
            ++rhs_terms;
            for (int i = 0; i < options.trials; ++i) rhs_vals[i] += t.eval(assignments[i]);
        });
        r.lhs_monomials = lhs_terms;
        r.rhs_monomials = rhs_terms;

        int first_mismatch = -1;
        for (int i = 0; i < options.trials && first_mismatch < 0; ++i)
            if (lhs_vals[i] != rhs_vals[i]) first_mismatch = i;

        const Polynomial* fixture =
            (id.flagged() && !options.mutation) ? fixture_for(id, r.params) : nullptr;
        if (fixture) {
            // The discrepancy must match the frozen difference on every draw.
            bool confirmed = true;
            for (int i = 0; i < options.trials && confirmed; ++i) {
                if (lhs_vals[i] - rhs_vals[i] != fixture->eval(assignments[i])) {
                    confirmed = false;
                    r.witness = assignments[i];
                }
            }
            r.status = confirmed ? Status::known_discrepant_confirmed : Status::fail;
        } else if (first_mismatch < 0) {
            r.status = options.mutation ? Status::mutation_inconclusive : Status::pass;
        } else if (id.flagged() && !options.mutation) {
            r.status = Status::known_discrepant_confirmed;
            r.witness = assignments[first_mismatch];
        } else {
            r.status = Status::fail;
            r.witness = assignments[first_mismatch];
        }
    } catch (const TermBudgetExceeded&) {
        r.status = Status::aborted;
    }
    r.elapsed_ms = timer.elapsed_ms();
    return r;
}

VerificationResult negative_control(const Identity& id, const StructuralParams& params,
                                    Mutation mutation, const VerifyOptions& options) {
    id.validate(params);
    if (mutation == Mutation::drop_last_term &&
        domain_size(id.domain(params, Side::lhs)) < 2)
        throw SchemaError(id.name + ": parameters too degenerate for drop_last_term");
    VerifyOptions mutated = options;
    mutated.mutation = mutation;
    return verify_symbolic(id, params, mutated);
}

namespace {

StructuralParams scalar_binding(std::initializer_list<std::pair<const char*, int>> kv) {
    StructuralParams p;
    for (const auto& [k, v] : kv) p.scalars[k] = v;
    return p;
}

// All nvec with dimension 1..max_dim and component sum <= max_total, in
// (dimension, total, colex) order.
std::vector<VecIndex> default_nvecs(int max_dim, int max_total) {
    std::vector<VecIndex> out;
    for (int m = 1; m <= max_dim; ++m)
        for (int total = 0; total <= max_total; ++total) {
            CompositionCursor cursor(total, m);
            while (const std::vector<int>* c = cursor.next()) out.push_back(VecIndex(*c));
        }
    return out;
}

}  // namespace

std::vector<StructuralParams> default_grid(const Identity& id, std::optional<int> max_n) {
    const int cap = max_n.value_or(INT_MAX);
    auto capped = [cap](int dflt) { return std::min(dflt, cap); };
    const int scap = std::min(3, std::max(1, cap));       // parts per composition
    const int mcap = std::min(3, std::max(1, cap));       // vector dimension
    const int tcap = capped(4);                           // |nvec| budget

    std::vector<StructuralParams> cells;
    auto scalar_sweep = [&](const char* name, int hi) {
        for (int v = 0; v <= hi; ++v) cells.push_back(scalar_binding({{name, v}}));
    };

    if (id.name == "chu_vandermonde" || id.name == "abel" || id.name == "rothe" ||
        id.name == "jensen" || id.name == "gould_jensen" || id.name == "jensen_alt" ||
        id.name == "shift_identity") {
        scalar_sweep("n", capped(5));
    } else if (id.name == "gould_variation") {
        cells.push_back(scalar_binding({{"n", 1}}));  // the frozen desk-check cell
    } else if (id.name == "simons") {
        scalar_sweep("n", capped(6));
    } else if (id.name == "munarini") {
        scalar_sweep("n", capped(4));
    } else if (id.name == "gkp") {
        scalar_sweep("m", capped(4));
    } else if (id.name == "stirling_sum") {
        for (int n = 0; n <= capped(8); ++n)
            for (int r = 0; r <= n; ++r) cells.push_back(scalar_binding({{"n", n}, {"r", r}}));
    } else if (id.name == "chu_multisum" || id.name == "chu_multisum_alt") {
        for (int s = 1; s <= std::min(4, std::max(1, cap)); ++s)
            for (int n = 0; n <= capped(4); ++n)
                cells.push_back(scalar_binding({{"n", n}, {"s", s}}));
    } else if (id.name == "ks2") {
        for (int n = 0; n <= capped(4); ++n)
            for (int s = 0; s <= capped(3); ++s)
                cells.push_back(scalar_binding({{"n", n}, {"s", s}}));
    } else if (id.name == "gkp_full") {
        for (int m = 0; m <= capped(4); ++m)
            for (int n = 0; n <= m; ++n) cells.push_back(scalar_binding({{"m", m}, {"n", n}}));
    } else if (id.name == "sun" || id.name == "hou_zeng_q") {
        for (int m = 0; m <= capped(3); ++m)
            for (int n = 0; n <= capped(3); ++n)
                for (int a = 0; a <= capped(3); ++a)
                    cells.push_back(scalar_binding({{"m", m}, {"n", n}, {"a", a}}));
    } else if (id.name == "munarini_q") {
        for (int n = 0; n <= capped(3); ++n)
            for (int alpha = 0; alpha <= capped(3); ++alpha)
                for (int beta = 0; beta <= capped(3); ++beta)
                    cells.push_back(
                        scalar_binding({{"n", n}, {"alpha", alpha}, {"beta", beta}}));
    } else if (id.name == "cv_multi" || id.name == "mohanty_handa" ||
               id.name == "multi_simons") {
        for (const VecIndex& nvec : default_nvecs(mcap, tcap)) {
            StructuralParams p;
            p.vectors["nvec"] = nvec;
            cells.push_back(std::move(p));
        }
    } else if (id.name == "stirling_multi") {
        for (const VecIndex& nvec : default_nvecs(mcap, tcap)) {
            VecRangeCursor cursor(nvec);
            while (const VecIndex* r = cursor.next()) {
                StructuralParams p;
                p.vectors["nvec"] = nvec;
                p.vectors["rvec"] = *r;
                cells.push_back(std::move(p));
            }
        }
    } else if (id.name == "scalar_upper_composition") {
        for (const VecIndex& nvec : default_nvecs(mcap, tcap))
            for (int s = 1; s <= scap; ++s) {
                CompositionCursor avecs(nvec.sum(), s);
                while (const std::vector<int>* a = avecs.next()) {
                    StructuralParams p;
                    p.vectors["nvec"] = nvec;
                    p.vectors["avec"] = VecIndex(*a);
                    cells.push_back(std::move(p));
                }
            }
    } else if (id.name == "compositions_lemma" || id.name == "chu89" ||
               id.name == "chu89_alt" || id.name == "newmulti") {
        for (const VecIndex& nvec : default_nvecs(mcap, tcap))
            for (int s = 1; s <= scap; ++s) {
                StructuralParams p;
                p.vectors["nvec"] = nvec;
                p.scalars["s"] = s;
                cells.push_back(std::move(p));
            }
    } else if (id.name == "multi_munarini") {
        for (const VecIndex& nvec : default_nvecs(mcap, tcap)) {
            for (int alpha = 0; alpha <= capped(3); ++alpha)
                for (int beta = 0; beta <= capped(3); ++beta) {
                    StructuralParams p;
                    p.vectors["nvec"] = nvec;
                    p.scalars["alpha"] = alpha;
                    p.scalars["beta"] = beta;
                    cells.push_back(std::move(p));
                }
            // The alpha = beta = |n| specialization cell.
            if (nvec.sum() > capped(3)) {
                StructuralParams p;
                p.vectors["nvec"] = nvec;
                p.scalars["alpha"] = nvec.sum();
                p.scalars["beta"] = nvec.sum();
                cells.push_back(std::move(p));
            }
        }
    } else {
        throw SchemaError("no default grid for identity '" + id.name + "'");
    }
    return cells;
}

namespace {

// Numeric sort key in schema order: scalars one slot, vectors dim + comps.
std::vector<int> param_sort_key(const Identity& id, const StructuralParams& p) {
    std::vector<int> key;
    for (const auto& spec : id.schema) {
        if (spec.is_vector) {
            const VecIndex& v = p.vec(spec.name);
            key.push_back(v.dim());
            key.insert(key.end(), v.c.begin(), v.c.end());
        } else {
            key.push_back(p.scalar(spec.name));
        }
    }
    return key;
}

}  // namespace

std::vector<GridCell> expand_grid(const GridSpec& spec) {
    std::vector<GridCell> cells;
    const bool explicit_params = !spec.scalar_values.empty() || !spec.vector_values.empty();

    for (const std::string& name : spec.identities) {
        const Identity& id = find_identity(name);
        if (!explicit_params) {
            for (StructuralParams& p : default_grid(id, spec.max_n))
                cells.push_back(GridCell{&id, std::move(p)});
            continue;
        }
        // Cartesian product over the schema in declaration order.
        std::vector<StructuralParams> partial{StructuralParams{}};
        for (const auto& ps : id.schema) {
            std::vector<StructuralParams> next;
            if (ps.is_vector) {
                auto it = spec.vector_values.find(ps.name);
                if (it == spec.vector_values.end())
                    throw SchemaError(id.name + ": vector parameter '" + ps.name +
                                      "' must be bound, e.g. --param " + ps.name + "=(1,2)");
                for (const StructuralParams& base : partial)
                    for (const VecIndex& v : it->second) {
                        StructuralParams p = base;
                        p.vectors[ps.name] = v;
                        next.push_back(std::move(p));
                    }
            } else {
                auto it = spec.scalar_values.find(ps.name);
                if (it == spec.scalar_values.end())
                    throw SchemaError(id.name + ": parameter '" + ps.name +
                                      "' must be bound, e.g. --param " + ps.name + "=0..3");
                for (const StructuralParams& base : partial)
                    for (int v : it->second) {
                        StructuralParams p = base;
                        p.scalars[ps.name] = v;
                        next.push_back(std::move(p));
                    }
            }
            partial = std::move(next);
        }
        for (StructuralParams& p : partial) cells.push_back(GridCell{&id, std::move(p)});
        // Reject bindings that name parameters outside the schema.
        for (const auto& [key, _] : spec.scalar_values)
            if (std::none_of(id.schema.begin(), id.schema.end(),
                             [&](const ParamSpec& s) { return s.name == key && !s.is_vector; }))
                throw SchemaError(id.name + ": unknown parameter '" + key + "'");
        for (const auto& [key, _] : spec.vector_values)
            if (std::none_of(id.schema.begin(), id.schema.end(),
                             [&](const ParamSpec& s) { return s.name == key && s.is_vector; }))
                throw SchemaError(id.name + ": unknown vector parameter '" + key + "'");
    }

    for (const GridCell& cell : cells) cell.identity->validate(cell.params);

    std::sort(cells.begin(), cells.end(), [](const GridCell& a, const GridCell& b) {
        if (a.identity->name != b.identity->name) return a.identity->name < b.identity->name;
        return param_sort_key(*a.identity, a.params) < param_sort_key(*b.identity, b.params);
    });
    return cells;
}

namespace {

VerificationResult run_cell(const GridCell& cell, const GridSpec& spec) {
    VerifyOptions options;
    options.term_budget = spec.term_budget;
    options.trials = spec.trials;
    options.seed = spec.seed;
    options.mutation = spec.mutation;
    return spec.mode == Mode::symbolic ? verify_symbolic(*cell.identity, cell.params, options)
                                       : verify_numeric(*cell.identity, cell.params, options);
}

bool status_ok(Status s) {
    return s == Status::pass || s == Status::known_discrepant_confirmed;
}

}  // namespace

SuiteReport run_suite(const GridSpec& spec) {
    const std::vector<GridCell> cells = expand_grid(spec);
    SuiteReport report;

    if (spec.jobs <= 1) {
        for (const GridCell& cell : cells) {
            report.results.push_back(run_cell(cell, spec));
            if (!status_ok(report.results.back().status)) {
                report.aggregate_pass = false;
                if (spec.fail_fast) break;
            }
        }
        return report;
    }

    std::vector<VerificationResult> results(cells.size());
    std::vector<char> done(cells.size(), 0);
    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> stop{false};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= cells.size() || stop.load()) return;
            results[i] = run_cell(cells[i], spec);
            done[i] = 1;
            if (spec.fail_fast && !status_ok(results[i].status)) stop.store(true);
        }
    };
    std::vector<std::thread> pool;
    const int width = std::min<long long>(spec.jobs, static_cast<long long>(cells.size()));
    pool.reserve(width);
    for (int i = 0; i < width; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!done[i]) continue;
        report.results.push_back(std::move(results[i]));
        if (!status_ok(report.results.back().status)) report.aggregate_pass = false;
    }
    return report;
}

}  // namespace idforge
