#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "idforge/binomial.hpp"

namespace idforge {

enum class Side { lhs, rhs };

enum class IdentityStatus {
    normal,
    // The printed form fails an exact desk check; the catalog ships it with
    // a frozen expected-difference fixture instead of an equality claim.
    known_discrepant,
};

// One slot of an identity's structural-parameter schema.
struct ParamSpec {
    std::string name;
    bool is_vector = false;
    int min_value = 0;  // for scalars / vector components; kUnbounded = any integer
    std::string doc;

    static constexpr int kUnbounded = INT_MIN;
};

// A binding of the integer parameters that fix the shape of a sum.
struct StructuralParams {
    std::map<std::string, int> scalars;
    std::map<std::string, VecIndex> vectors;

    int scalar(const std::string& name) const;
    const VecIndex& vec(const std::string& name) const;

    bool operator==(const StructuralParams&) const = default;
};

// Flat summation index: one entry for scalar sums, the component list for
// vector sums, the concatenation of the s blocks for composition tuples.
using Index = std::vector<int>;

// Summation domain of one side at fixed parameters.
struct DomainSpec {
    enum class Kind { singleton, scalar_range, vec_range, compositions, vec_compositions };

    Kind kind = Kind::singleton;
    int hi = 0;      // scalar_range: k = 0..hi
    int total = 0;   // compositions: n
    int parts = 0;   // compositions / vec_compositions: s
    VecIndex bound;  // vec_range / vec_compositions

    static DomainSpec singleton() { return {}; }
    static DomainSpec scalar_range(int hi);
    static DomainSpec vec_range(VecIndex bound);
    static DomainSpec compositions(int total, int parts);
    static DomainSpec vec_compositions(VecIndex bound, int parts);
};

// Expansion controls: the monomial budget plus the negative-control
// mutations (applied by the verifier to the left side only).
struct BuildOptions {
    long long term_budget = 1'000'000;
    int upper_shift = 0;          // added to the first binomial's upper argument
    bool drop_last_term = false;  // omit the final summand
};

// A catalog entry: schema, symbolic variables, and the two side builders.
// The left and right term functions realize the displayed sums directly and
// never share the summation being tested.
struct Identity {
    std::string name;
    std::string citation;
    std::string schema_doc;
    IdentityStatus status = IdentityStatus::normal;
    std::vector<ParamSpec> schema;
    std::function<void(const StructuralParams&)> validate_extra;  // optional
    std::function<std::vector<std::string>(const StructuralParams&)> symbolic_vars;
    std::function<DomainSpec(const StructuralParams&, Side)> domain;
    std::function<Polynomial(const StructuralParams&, Side, const Index&, int shift)> term;
    // Frozen lhs-rhs differences for known-discrepant entries, keyed by
    // render_params output.
    std::map<std::string, Polynomial> expected_difference;

    bool flagged() const { return status == IdentityStatus::known_discrepant; }
    void validate(const StructuralParams& params) const;
};

// All catalog entries in stable order.
const std::vector<Identity>& catalog();

// Lookup by public token; throws SchemaError for unknown names.
const Identity& find_identity(const std::string& name);

// Canonical "n=2,s=1" rendering in schema order.
std::string render_params(const Identity& id, const StructuralParams& params);

long long domain_size(const DomainSpec& d);
bool index_in_domain(const DomainSpec& d, const Index& ix);
void for_each_index(const DomainSpec& d, const std::function<void(const Index&)>& fn);

// Streams the summands of one side in domain order with options applied.
void for_each_term(const Identity& id, const StructuralParams& params, Side side,
                   const BuildOptions& options, const std::function<void(const Polynomial&)>& fn);

// Full symbolic expansion of one side.
Polynomial build_side(const Identity& id, const StructuralParams& params, Side side,
                      const BuildOptions& options = {});

// The single summand at `index`, boundary conventions applied.
Polynomial term_at(const Identity& id, const StructuralParams& params, Side side,
                   const Index& index);

}  // namespace idforge
