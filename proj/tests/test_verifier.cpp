#include <doctest.h>

#include "idforge/errors.hpp"
#include "idforge/report.hpp"
#include "idforge/verifier.hpp"

using namespace idforge;

namespace {

StructuralParams with_n(int n) {
    StructuralParams p;
    p.scalars["n"] = n;
    return p;
}

GridSpec jensen_grid(int lo, int hi) {
    GridSpec spec;
    spec.identities = {"jensen"};
    for (int n = lo; n <= hi; ++n) spec.scalar_values["n"].push_back(n);
    return spec;
}

}  // namespace

TEST_CASE("symbolic verification passes on true identities") {
    const auto r = verify_symbolic(find_identity("jensen"), with_n(3));
    CHECK(r.status == Status::pass);
    CHECK(r.mode == Mode::symbolic);
    CHECK(r.lhs_monomials == r.rhs_monomials);
    CHECK(r.lhs_monomials > 0);
    CHECK_FALSE(r.witness.has_value());
    CHECK(r.difference.empty());
    CHECK(r.params == "n=3");

    StructuralParams vp;
    vp.vectors["nvec"] = VecIndex{1, 1};
    CHECK(verify_symbolic(find_identity("cv_multi"), vp).status == Status::pass);
}

TEST_CASE("the known-discrepant entry confirms its frozen difference") {
    const auto r = verify_symbolic(find_identity("gould_variation"), with_n(1));
    CHECK(r.status == Status::known_discrepant_confirmed);
    CHECK(r.difference == "x + y");

    // Numeric mode sees the same discrepancy through the fixture.
    const auto rn = verify_numeric(find_identity("gould_variation"), with_n(1));
    CHECK(rn.status == Status::known_discrepant_confirmed);
}

TEST_CASE("numeric verification agrees with symbolic verification") {
    VerifyOptions options;
    options.seed = 0;
    options.trials = 20;
    const auto r = verify_numeric(find_identity("simons"), with_n(4), options);
    CHECK(r.status == Status::pass);
    CHECK(r.seed == 0);
    CHECK_FALSE(r.witness.has_value());

    const auto rs = verify_symbolic(find_identity("simons"), with_n(4));
    CHECK(rs.status == Status::pass);

    // n = 0: both sides are the constant 1 under any seed.
    for (std::uint64_t seed : {1ull, 7ull, 99ull}) {
        VerifyOptions o;
        o.seed = seed;
        CHECK(verify_numeric(find_identity("jensen"), with_n(0), o).status == Status::pass);
    }
}

TEST_CASE("numeric verification refutes mutants with a witness") {
    VerifyOptions options;
    options.mutation = Mutation::drop_last_term;
    const auto r = verify_numeric(find_identity("jensen"), with_n(2), options);
    CHECK(r.status == Status::fail);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->count("x") == 1);
    CHECK(r.witness->count("y") == 1);
    CHECK(r.witness->count("z") == 1);
}

TEST_CASE("negative controls break true identities") {
    CHECK(negative_control(find_identity("jensen"), with_n(2), Mutation::drop_last_term).status ==
          Status::fail);
    CHECK(negative_control(find_identity("simons"), with_n(1), Mutation::shift_upper).status ==
          Status::fail);
    CHECK_THROWS_AS(
        negative_control(find_identity("jensen"), with_n(0), Mutation::drop_last_term),
        SchemaError);
    // A degenerate shift can be inconclusive rather than an error.
    CHECK(negative_control(find_identity("jensen"), with_n(0), Mutation::shift_upper).status ==
          Status::mutation_inconclusive);
}

TEST_CASE("suite runs evaluate sorted grids") {
    const SuiteReport report = run_suite(jensen_grid(0, 3));
    REQUIRE(report.results.size() == 4);
    CHECK(report.aggregate_pass);
    for (int n = 0; n <= 3; ++n) {
        CHECK(report.results[n].params == "n=" + std::to_string(n));
        CHECK(report.results[n].status == Status::pass);
    }
}

TEST_CASE("suite handles the stirling boundary row") {
    GridSpec spec;
    spec.identities = {"stirling_sum"};
    spec.scalar_values["n"] = {4};
    spec.scalar_values["r"] = {0, 1, 2, 3, 4};
    const SuiteReport report = run_suite(spec);
    REQUIRE(report.results.size() == 5);
    CHECK(report.aggregate_pass);
    // r < n: both sides are the zero polynomial (0 monomials); r = n: n!.
    for (int i = 0; i < 4; ++i) CHECK(report.results[i].lhs_monomials == 0);
    CHECK(report.results[4].lhs_monomials == 1);
}

TEST_CASE("an empty selector yields an empty passing suite") {
    GridSpec spec;
    const SuiteReport report = run_suite(spec);
    CHECK(report.results.empty());
    CHECK(report.aggregate_pass);
}

TEST_CASE("grid expansion validates bindings against the schema") {
    GridSpec spec;
    spec.identities = {"jensen"};
    spec.scalar_values["m"] = {1};
    CHECK_THROWS_AS(expand_grid(spec), SchemaError);

    GridSpec missing;
    missing.identities = {"chu_multisum"};
    missing.scalar_values["n"] = {2};
    CHECK_THROWS_AS(expand_grid(missing), SchemaError);  // s unbound

    GridSpec bad_value;
    bad_value.identities = {"jensen"};
    bad_value.scalar_values["n"] = {-2};
    CHECK_THROWS_AS(expand_grid(bad_value), SchemaError);

    GridSpec vec_spec;
    vec_spec.identities = {"cv_multi"};
    vec_spec.vector_values["nvec"] = {VecIndex{1, 1}, VecIndex{2}};
    CHECK(expand_grid(vec_spec).size() == 2);
}

TEST_CASE("default grids cover every identity and respect caps") {
    for (const Identity& id : catalog()) {
        const auto cells = default_grid(id, std::nullopt);
        CHECK_FALSE(cells.empty());
        for (const auto& params : cells) id.validate(params);
        const auto capped = default_grid(id, 2);
        CHECK_FALSE(capped.empty());
        CHECK(capped.size() <= cells.size());
    }
    // The flagged entry only runs its frozen desk-check cell by default.
    const auto gv = default_grid(find_identity("gould_variation"), std::nullopt);
    REQUIRE(gv.size() == 1);
    CHECK(gv[0].scalar("n") == 1);
}

TEST_CASE("suite reports are deterministic and independent of parallelism") {
    GridSpec spec;
    spec.identities = {"jensen", "simons", "munarini_q", "mohanty_handa"};
    spec.max_n = 2;
    spec.mode = Mode::numeric;
    spec.trials = 8;
    spec.seed = 1234;

    ReportOptions ro;
    ro.include_timing = false;
    ro.seed = spec.seed;

    const std::string first = report_json(run_suite(spec).results, ro);
    const std::string second = report_json(run_suite(spec).results, ro);
    CHECK(first == second);

    GridSpec parallel = spec;
    parallel.jobs = 4;
    const std::string wide = report_json(run_suite(parallel).results, ro);
    CHECK(first == wide);
}

TEST_CASE("soundness coupling: symbolic passes imply numeric passes") {
    GridSpec spec;
    spec.identities = {"rothe", "gkp", "sun", "hou_zeng_q"};
    spec.max_n = 2;
    for (const GridCell& cell : expand_grid(spec)) {
        const auto symbolic = verify_symbolic(*cell.identity, cell.params);
        REQUIRE(symbolic.status == Status::pass);
        for (std::uint64_t seed : {0ull, 3ull}) {
            VerifyOptions o;
            o.seed = seed;
            o.trials = 10;
            CHECK(verify_numeric(*cell.identity, cell.params, o).status == Status::pass);
        }
    }
}

TEST_CASE("exhausted budgets abort instead of producing a verdict") {
    GridSpec spec = jensen_grid(3, 3);
    spec.term_budget = 3;
    const SuiteReport report = run_suite(spec);
    REQUIRE(report.results.size() == 1);
    CHECK(report.results[0].status == Status::aborted);
    CHECK_FALSE(report.aggregate_pass);
}

TEST_CASE("fail-fast stops after the first refuted cell") {
    GridSpec spec = jensen_grid(1, 4);
    spec.mutation = Mutation::drop_last_term;
    spec.fail_fast = true;
    const SuiteReport report = run_suite(spec);
    CHECK(report.results.size() == 1);
    CHECK_FALSE(report.aggregate_pass);
}

TEST_CASE("report serialization shapes") {
    const auto r = verify_symbolic(find_identity("jensen"), with_n(1));
    ReportOptions ro;
    ro.include_timing = false;
    ro.seed = 42;
    const std::string json = report_json({r}, ro);
    CHECK(json.find("\"tool_version\"") != std::string::npos);
    CHECK(json.find("\"seed\": 42") != std::string::npos);
    CHECK(json.find("\"identity\": \"jensen\"") != std::string::npos);
    CHECK(json.find("elapsed_ms") == std::string::npos);
    const std::string tsv = report_tsv({r}, ro);
    CHECK(tsv.substr(0, tsv.find('\n')) ==
          "identity\tparams\tmode\tstatus\tlhs_monomials\trhs_monomials");
    const std::string text = report_text({r}, ro);
    CHECK(text.find("[pass] jensen n=1 symbolic") != std::string::npos);
}
