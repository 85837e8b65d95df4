#include "idforge/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "idforge/errors.hpp"
#include "idforge/report.hpp"

namespace idforge {

namespace {

long long parse_integer(const std::string& text, const std::string& token) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw UsageError("malformed integer in '" + token + "'");
    }
    if (used != text.size()) throw UsageError("malformed integer in '" + token + "'");
    return value;
}

struct ParamBinding {
    enum class Kind { scalar, scalar_range, vector };
    std::string name;
    Kind kind = Kind::scalar;
    long long lo = 0, hi = 0;
    VecIndex vec;
};

ParamBinding parse_param_binding(const std::string& token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0)
        throw UsageError("malformed parameter binding '" + token + "' (expected name=value)");
    ParamBinding b;
    b.name = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (value.empty()) throw UsageError("empty value in '" + token + "'");

    if (value.front() == '(') {
        if (value.back() != ')')
            throw UsageError("malformed vector in '" + token + "' (expected (a,b,...))");
        b.kind = ParamBinding::Kind::vector;
        std::string body = value.substr(1, value.size() - 2);
        if (body.empty()) throw UsageError("empty vector in '" + token + "'");
        std::stringstream ss(body);
        std::string part;
        while (std::getline(ss, part, ','))
            b.vec.c.push_back(static_cast<int>(parse_integer(part, token)));
        return b;
    }
    const auto dots = value.find("..");
    if (dots != std::string::npos) {
        b.kind = ParamBinding::Kind::scalar_range;
        b.lo = parse_integer(value.substr(0, dots), token);
        b.hi = parse_integer(value.substr(dots + 2), token);
        if (b.lo > b.hi) throw UsageError("empty range in '" + token + "'");
        return b;
    }
    b.kind = ParamBinding::Kind::scalar;
    b.lo = b.hi = parse_integer(value, token);
    return b;
}

long long env_term_budget() {
    if (const char* env = std::getenv("IDFORGE_TERM_BUDGET")) {
        const long long v = parse_integer(env, std::string("IDFORGE_TERM_BUDGET=") + env);
        if (v < 1) throw UsageError("IDFORGE_TERM_BUDGET must be positive");
        return v;
    }
    return 1'000'000;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(parse_integer(text, text)));
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    const BigInt d(parse_integer(den, text));
    if (d == 0) throw UsageError("zero denominator in '" + text + "'");
    return Rational(BigInt(parse_integer(num, text)), d);
}

CliConfig parse_args(const std::vector<std::string>& args) {
    CliConfig config;
    config.term_budget = env_term_budget();

    CLI::App app{"Exact verification of classical binomial, multinomial, and q-binomial "
                 "identities"};
    app.name("idforge");
    app.require_subcommand(1);

    CLI::App* list = app.add_subcommand("list", "Print the identity catalog");

    CLI::App* verify = app.add_subcommand("verify", "Verify identities over parameter grids");
    verify->add_option("--identity", config.identities, "Identity token (repeatable)");
    verify->add_flag("--all", config.all, "Select the whole catalog");
    verify->add_option("--param", config.params,
                       "Parameter binding: n=2, n=0..4 or nvec=(2,1) (repeatable)");
    verify->add_option("--mode", config.mode, "symbolic (default) or numeric")
        ->check(CLI::IsMember({"symbolic", "numeric"}));
    verify->add_option("--trials", config.trials, "Random draws per cell in numeric mode")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", config.seed, "Master seed for numeric mode");
    verify->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--max-n", config.max_n, "Cap the built-in default grids");
    verify->add_option("--format", config.format, "json, tsv or text (default)")
        ->check(CLI::IsMember({"json", "tsv", "text"}));
    verify->add_option("--output", config.output, "Write the report to a file");
    verify->add_flag("--fail-fast", config.fail_fast, "Stop at the first failing cell");
    verify->add_flag("--no-timing", config.no_timing,
                     "Exclude timing from reports (byte-stable output)");
    verify->add_option("--mutate", config.mutate)
        ->check(CLI::IsMember({"shift_upper", "drop_last_term"}))
        ->group("");  // test hook, hidden from --help

    CLI::App* eval = app.add_subcommand("eval", "Expand or evaluate one side of an identity");
    eval->add_option("--identity", config.identities, "Identity token")->required();
    eval->add_option("--side", config.side, "lhs or rhs")
        ->required()
        ->check(CLI::IsMember({"lhs", "rhs"}));
    eval->add_option("--param", config.params, "Structural parameter binding (repeatable)");
    eval->add_option("--assign", config.assignments,
                     "Variable assignment x=1/2 (repeatable; all-or-none)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (list->parsed()) config.command = CliConfig::Command::list;
    if (verify->parsed()) config.command = CliConfig::Command::verify;
    if (eval->parsed()) config.command = CliConfig::Command::eval;

    // Validate tokens early so bad input is a crisp one-line diagnostic.
    for (const std::string& name : config.identities) {
        try {
            find_identity(name);
        } catch (const SchemaError& e) {
            throw UsageError(e.what());
        }
    }
    for (const std::string& p : config.params) parse_param_binding(p);
    if (config.command == CliConfig::Command::verify && config.all && !config.identities.empty())
        throw UsageError("--all and --identity are mutually exclusive");
    return config;
}

namespace {

int cmd_list() {
    for (const Identity& id : catalog()) {
        std::cout << id.name << " | " << id.schema_doc << " | " << id.citation;
        if (id.flagged()) std::cout << " | known_discrepant";
        std::cout << "\n";
    }
    return 0;
}

GridSpec grid_from_config(const CliConfig& config) {
    GridSpec spec;
    if (config.all)
        for (const Identity& id : catalog()) spec.identities.push_back(id.name);
    else
        spec.identities = config.identities;
    for (const std::string& raw : config.params) {
        const ParamBinding b = parse_param_binding(raw);
        switch (b.kind) {
            case ParamBinding::Kind::scalar:
                spec.scalar_values[b.name].push_back(static_cast<int>(b.lo));
                break;
            case ParamBinding::Kind::scalar_range:
                for (long long v = b.lo; v <= b.hi; ++v)
                    spec.scalar_values[b.name].push_back(static_cast<int>(v));
                break;
            case ParamBinding::Kind::vector:
                spec.vector_values[b.name].push_back(b.vec);
                break;
        }
    }
    spec.max_n = config.max_n;
    spec.mode = mode_from_string(config.mode);
    spec.trials = config.trials;
    spec.seed = config.seed;
    spec.jobs = config.jobs;
    spec.term_budget = config.term_budget;
    spec.fail_fast = config.fail_fast;
    if (!config.mutate.empty()) spec.mutation = mutation_from_string(config.mutate);
    return spec;
}

void write_report(const std::string& body, const std::string& path) {
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open output path '" + path + "'");
    out << body;
    if (!out) throw UsageError("failed writing output path '" + path + "'");
}

int cmd_verify(const CliConfig& config) {
    const GridSpec spec = grid_from_config(config);
    const SuiteReport report = run_suite(spec);
    ReportOptions options;
    options.include_timing = !config.no_timing;
    options.seed = config.seed;
    std::string body;
    if (config.format == "json")
        body = report_json(report.results, options);
    else if (config.format == "tsv")
        body = report_tsv(report.results, options);
    else
        body = report_text(report.results, options);
    write_report(body, config.output);
    return report.aggregate_pass ? 0 : 1;
}

StructuralParams single_params_from_config(const Identity& id, const CliConfig& config) {
    StructuralParams params;
    for (const std::string& raw : config.params) {
        const ParamBinding b = parse_param_binding(raw);
        switch (b.kind) {
            case ParamBinding::Kind::scalar:
                params.scalars[b.name] = static_cast<int>(b.lo);
                break;
            case ParamBinding::Kind::vector:
                params.vectors[b.name] = b.vec;
                break;
            case ParamBinding::Kind::scalar_range:
                throw UsageError("eval requires single values, got range '" + raw + "'");
        }
    }
    id.validate(params);
    return params;
}

int cmd_eval(const CliConfig& config) {
    if (config.identities.size() != 1)
        throw UsageError("eval requires exactly one --identity");
    const Identity& id = find_identity(config.identities.front());
    const StructuralParams params = single_params_from_config(id, config);
    const Side side = config.side == "lhs" ? Side::lhs : Side::rhs;
    BuildOptions build;
    build.term_budget = config.term_budget;
    const Polynomial value = build_side(id, params, side, build);

    if (config.assignments.empty()) {
        std::cout << value.str() << "\n";
        return 0;
    }
    std::map<std::string, Rational> assignment;
    std::vector<std::string> vars = id.symbolic_vars(params);
    std::sort(vars.begin(), vars.end());
    for (const std::string& raw : config.assignments) {
        const auto eq = raw.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("malformed assignment '" + raw + "' (expected var=p/q)");
        const std::string var = raw.substr(0, eq);
        if (!std::binary_search(vars.begin(), vars.end(), var))
            throw UsageError("assignment names unknown variable '" + var + "'");
        assignment[var] = parse_rational(raw.substr(eq + 1));
    }
    if (assignment.size() != vars.size())
        throw UsageError("partial assignment: eval needs either no assignments or all of them");
    std::cout << value.eval(assignment).str() << "\n";
    return 0;
}

}  // namespace

int run_cli(const CliConfig& config) {
    switch (config.command) {
        case CliConfig::Command::list: return cmd_list();
        case CliConfig::Command::verify: return cmd_verify(config);
        case CliConfig::Command::eval: return cmd_eval(config);
    }
    return 2;
}

int cli_main(int argc, const char* const* argv) {
    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        return run_cli(parse_args(args));
    } catch (const std::exception& e) {
        std::cerr << "idforge: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace idforge
