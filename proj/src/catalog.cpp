#include "idforge/catalog.hpp"

#include <algorithm>

#include "idforge/enumeration.hpp"
#include "idforge/errors.hpp"

namespace idforge {

int StructuralParams::scalar(const std::string& name) const {
    auto it = scalars.find(name);
    if (it == scalars.end()) throw SchemaError("missing scalar parameter '" + name + "'");
    return it->second;
}

const VecIndex& StructuralParams::vec(const std::string& name) const {
    auto it = vectors.find(name);
    if (it == vectors.end()) throw SchemaError("missing vector parameter '" + name + "'");
    return it->second;
}

DomainSpec DomainSpec::scalar_range(int hi) {
    DomainSpec d;
    d.kind = Kind::scalar_range;
    d.hi = hi;
    return d;
}

DomainSpec DomainSpec::vec_range(VecIndex bound) {
    DomainSpec d;
    d.kind = Kind::vec_range;
    d.bound = std::move(bound);
    return d;
}

DomainSpec DomainSpec::compositions(int total, int parts) {
    DomainSpec d;
    d.kind = Kind::compositions;
    d.total = total;
    d.parts = parts;
    return d;
}

DomainSpec DomainSpec::vec_compositions(VecIndex bound, int parts) {
    DomainSpec d;
    d.kind = Kind::vec_compositions;
    d.bound = std::move(bound);
    d.parts = parts;
    return d;
}

void Identity::validate(const StructuralParams& params) const {
    for (const auto& spec : schema) {
        if (spec.is_vector) {
            auto it = params.vectors.find(spec.name);
            if (it == params.vectors.end())
                throw SchemaError(name + ": missing vector parameter '" + spec.name + "'");
            if (it->second.dim() < 1)
                throw SchemaError(name + ": vector parameter '" + spec.name + "' is empty");
            if (spec.min_value != ParamSpec::kUnbounded)
                for (int v : it->second.c)
                    if (v < spec.min_value)
                        throw SchemaError(name + ": component " + std::to_string(v) + " of '" +
                                          spec.name + "' violates >= " +
                                          std::to_string(spec.min_value));
        } else {
            auto it = params.scalars.find(spec.name);
            if (it == params.scalars.end())
                throw SchemaError(name + ": missing parameter '" + spec.name + "'");
            if (spec.min_value != ParamSpec::kUnbounded && it->second < spec.min_value)
                throw SchemaError(name + ": parameter '" + spec.name + "' = " +
                                  std::to_string(it->second) + " violates >= " +
                                  std::to_string(spec.min_value));
        }
    }
    auto declared = [&](const std::string& key, bool vec) {
        return std::any_of(schema.begin(), schema.end(), [&](const ParamSpec& s) {
            return s.name == key && s.is_vector == vec;
        });
    };
    for (const auto& [key, _] : params.scalars)
        if (!declared(key, false))
            throw SchemaError(name + ": unknown parameter '" + key + "'");
    for (const auto& [key, _] : params.vectors)
        if (!declared(key, true))
            throw SchemaError(name + ": unknown vector parameter '" + key + "'");
    if (validate_extra) validate_extra(params);
}

const Identity& find_identity(const std::string& name) {
    for (const Identity& id : catalog())
        if (id.name == name) return id;
    throw SchemaError("unknown identity '" + name + "'");
}

std::string render_params(const Identity& id, const StructuralParams& params) {
    std::string out;
    for (const auto& spec : id.schema) {
        if (!out.empty()) out += ",";
        out += spec.name + "=";
        out += spec.is_vector ? params.vec(spec.name).str()
                              : std::to_string(params.scalar(spec.name));
    }
    return out;
}

long long domain_size(const DomainSpec& d) {
    using Kind = DomainSpec::Kind;
    auto count_compositions = [](int n, int s) -> long long {
        if (s == 0) return n == 0 ? 1 : 0;
        const Rational c = binom_int(n + s - 1, s - 1);
        return static_cast<long long>(c.to_integer());
    };
    switch (d.kind) {
        case Kind::singleton:
            return 1;
        case Kind::scalar_range:
            return static_cast<long long>(d.hi) + 1;
        case Kind::vec_range: {
            long long out = 1;
            for (int v : d.bound.c) out *= v + 1;
            return out;
        }
        case Kind::compositions:
            return count_compositions(d.total, d.parts);
        case Kind::vec_compositions: {
            long long out = 1;
            for (int v : d.bound.c) out *= count_compositions(v, d.parts);
            return out;
        }
    }
    return 0;
}

bool index_in_domain(const DomainSpec& d, const Index& ix) {
    using Kind = DomainSpec::Kind;
    auto nonneg = [](const Index& v) {
        return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
    };
    switch (d.kind) {
        case Kind::singleton:
            return ix.empty();
        case Kind::scalar_range:
            return ix.size() == 1 && ix[0] >= 0 && ix[0] <= d.hi;
        case Kind::vec_range: {
            if (static_cast<int>(ix.size()) != d.bound.dim() || !nonneg(ix)) return false;
            for (int i = 0; i < d.bound.dim(); ++i)
                if (ix[i] > d.bound.c[i]) return false;
            return true;
        }
        case Kind::compositions: {
            if (static_cast<int>(ix.size()) != d.parts || !nonneg(ix)) return false;
            int sum = 0;
            for (int v : ix) sum += v;
            return sum == d.total;
        }
        case Kind::vec_compositions: {
            const int m = d.bound.dim();
            if (static_cast<int>(ix.size()) != d.parts * m || !nonneg(ix)) return false;
            for (int i = 0; i < m; ++i) {
                int sum = 0;
                for (int j = 0; j < d.parts; ++j) sum += ix[j * m + i];
                if (sum != d.bound.c[i]) return false;
            }
            return true;
        }
    }
    return false;
}

void for_each_index(const DomainSpec& d, const std::function<void(const Index&)>& fn) {
    using Kind = DomainSpec::Kind;
    switch (d.kind) {
        case Kind::singleton:
            fn(Index{});
            return;
        case Kind::scalar_range: {
            Index ix(1);
            for (int k = 0; k <= d.hi; ++k) {
                ix[0] = k;
                fn(ix);
            }
            return;
        }
        case Kind::vec_range: {
            VecRangeCursor cursor(d.bound);
            while (const VecIndex* k = cursor.next()) fn(k->c);
            return;
        }
        case Kind::compositions: {
            CompositionCursor cursor(d.total, d.parts);
            while (const std::vector<int>* k = cursor.next()) fn(*k);
            return;
        }
        case Kind::vec_compositions: {
            VecCompositionCursor cursor(d.bound, d.parts);
            Index flat;
            while (const std::vector<VecIndex>* tuple = cursor.next()) {
                flat.clear();
                for (const VecIndex& block : *tuple)
                    flat.insert(flat.end(), block.c.begin(), block.c.end());
                fn(flat);
            }
            return;
        }
    }
}

void for_each_term(const Identity& id, const StructuralParams& params, Side side,
                   const BuildOptions& options, const std::function<void(const Polynomial&)>& fn) {
    id.validate(params);
    const DomainSpec dom = id.domain(params, side);
    if (!options.drop_last_term) {
        for_each_index(dom, [&](const Index& ix) {
            fn(id.term(params, side, ix, options.upper_shift));
        });
        return;
    }
    // One-element lookahead so the final summand is omitted without needing
    // the domain size up front.
    bool buffered = false;
    Polynomial pending;
    for_each_index(dom, [&](const Index& ix) {
        Polynomial t = id.term(params, side, ix, options.upper_shift);
        if (buffered) fn(pending);
        pending = std::move(t);
        buffered = true;
    });
}

Polynomial build_side(const Identity& id, const StructuralParams& params, Side side,
                      const BuildOptions& options) {
    Polynomial acc;
    for_each_term(id, params, side, options, [&](const Polynomial& t) {
        acc += t;
        if (static_cast<long long>(acc.term_count()) > options.term_budget)
            throw TermBudgetExceeded(id.name + ": side exceeded the term budget of " +
                                     std::to_string(options.term_budget) + " monomials");
    });
    return acc;
}

Polynomial term_at(const Identity& id, const StructuralParams& params, Side side,
                   const Index& index) {
    id.validate(params);
    const DomainSpec dom = id.domain(params, side);
    if (!index_in_domain(dom, index))
        throw ContractViolation(id.name + ": index out of the summation domain");
    return id.term(params, side, index, 0);
}

}  // namespace idforge
