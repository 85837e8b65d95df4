// The identity catalog: every entry encodes the two sides of one displayed
// identity as summation domain + term builder over exact polynomials. The
// `shift` argument is the negative-control mutation: it is added to the
// upper argument of the first binomial-type factor of the term and is zero
// outside mutation runs.

#include <string>
#include <vector>

#include "idforge/catalog.hpp"
#include "idforge/errors.hpp"

namespace idforge {
namespace {

Polynomial pvar(const std::string& name) { return Polynomial::variable(name); }

Polynomial var_pow(const std::string& name, int e) {
    return Polynomial::monomial(Monomial::variable(name, e), Rational(1));
}

Rational sign_pow(int e) { return (e & 1) ? Rational(-1) : Rational(1); }

long long choose2(long long t) { return t * (t - 1) / 2; }

std::vector<std::string> numbered_vars(const std::string& stem, int count) {
    std::vector<std::string> v;
    v.reserve(count);
    for (int i = 1; i <= count; ++i) v.push_back(stem + std::to_string(i));
    return v;
}

Polynomial sum_of_vars(const std::vector<std::string>& vars) {
    Polynomial out;
    for (const auto& v : vars) out += pvar(v);
    return out;
}

// prod_i (vars_i + offset)^{k_i}
Polynomial shifted_vec_power(const std::vector<std::string>& vars, const VecIndex& k,
                             long long offset) {
    Polynomial out(1);
    for (int i = 0; i < k.dim(); ++i) out *= (pvar(vars[i]) + Polynomial(offset)).pow(k.c[i]);
    return out;
}

ParamSpec scalar_param(std::string name, int min_value, std::string doc) {
    return ParamSpec{std::move(name), false, min_value, std::move(doc)};
}

ParamSpec vector_param(std::string name, int min_value, std::string doc) {
    return ParamSpec{std::move(name), true, min_value, std::move(doc)};
}

std::function<std::vector<std::string>(const StructuralParams&)> fixed_vars(
    std::vector<std::string> vars) {
    return [vars = std::move(vars)](const StructuralParams&) { return vars; };
}

VecIndex vec_of(const Index& ix) { return VecIndex(std::vector<int>(ix.begin(), ix.end())); }

// Block j of a flattened s-tuple of m-dimensional vectors.
VecIndex block_of(const Index& ix, int j, int m) {
    return VecIndex(std::vector<int>(ix.begin() + j * m, ix.begin() + (j + 1) * m));
}

// Shared summand of Jensen-type left sides: C(x+kz, k) C(y-kz, n-k).
Polynomial jensen_lhs_term(int n, int k, int shift) {
    const Polynomial kz = pvar("z").scaled(Rational(k));
    return binom_poly(pvar("x") + kz + Polynomial(shift), k) *
           binom_poly(pvar("y") - kz, n - k);
}

// Shared summand of the multi-sum left sides: prod_i C(x_i + k_i z, k_i).
Polynomial chu_lhs_term(const Index& ix, int shift) {
    Polynomial out(1);
    for (std::size_t i = 0; i < ix.size(); ++i) {
        const Polynomial arg = pvar("x" + std::to_string(i + 1)) +
                               pvar("z").scaled(Rational(ix[i])) +
                               Polynomial(i == 0 ? shift : 0);
        out *= binom_poly(arg, ix[i]);
    }
    return out;
}

// Shared summand of the multinomial multi-sum left sides:
// prod_i C(x_i + k_i . z, k_i).
Polynomial chu89_lhs_term(const Index& ix, int s, int m, int shift) {
    const auto zv = numbered_vars("z", m);
    Polynomial out(1);
    for (int j = 0; j < s; ++j) {
        const VecIndex kj = block_of(ix, j, m);
        const Polynomial arg = pvar("x" + std::to_string(j + 1)) + dot_product(zv, kj) +
                               Polynomial(j == 0 ? shift : 0);
        out *= multinomial_poly(arg, kj);
    }
    return out;
}

Identity make_chu_vandermonde() {
    Identity id;
    id.name = "chu_vandermonde";
    id.citation = "Chu-Vandermonde convolution";
    id.schema_doc = "n>=0";
    id.schema = {scalar_param("n", 0, "summation length")};
    id.symbolic_vars = fixed_vars({"x", "y"});
    id.domain = [](const StructuralParams& p, Side side) {
        return side == Side::lhs ? DomainSpec::scalar_range(p.scalar("n"))
                                 : DomainSpec::singleton();
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const int n = p.scalar("n");
        if (side == Side::rhs) return binom_poly(pvar("x") + pvar("y"), n);
        const int k = ix[0];
        return binom_poly(pvar("x") + Polynomial(shift), k) * binom_poly(pvar("y"), n - k);
    };
    return id;
}

Identity make_abel() {
    Identity id;
    id.name = "abel";
    id.citation = "Abel's identity";
    id.schema_doc = "n>=0";
    id.schema = {scalar_param("n", 0, "summation length")};
    id.symbolic_vars = fixed_vars({"x", "y", "z"});
    id.domain = [](const StructuralParams& p, Side side) {
        return side == Side::lhs ? DomainSpec::scalar_range(p.scalar("n"))
                                 : DomainSpec::singleton();
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const int n = p.scalar("n");
        if (side == Side::rhs) return (pvar("x") + pvar("y")).pow(n);
        const int k = ix[0];
        // k = 0 collapses x (x+kz)^{k-1} to x/x; the term is (y)^n.
        if (k == 0) return pvar("y").pow(n);
        const Polynomial kz = pvar("z").scaled(Rational(k));
        return (pvar("x") * (pvar("x") + kz).pow(k - 1) * (pvar("y") - kz).pow(n - k))
            .scaled(binom_int(n + shift, k));
    };
    return id;
}

Identity make_rothe() {
    Identity id;
    id.name = "rothe";
    id.citation = "Rothe's identity (Hagen-Rothe)";
    id.schema_doc = "n>=0";
    id.schema = {scalar_param("n", 0, "summation length")};
    id.symbolic_vars = fixed_vars({"x", "y", "z"});
    id.domain = [](const StructuralParams& p, Side side) {
        return side == Side::lhs ? DomainSpec::scalar_range(p.scalar("n"))
                                 : DomainSpec::singleton();
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const int n = p.scalar("n");
        if (side == Side::rhs) return binom_poly(pvar("x") + pvar("y"), n);
        const int k = ix[0];
        if (k == 0) return binom_poly(pvar("y"), n);
        // x/(x-kz) C(x-kz, k) cancels to x falling(x-kz-1, k-1) / k!.
        const Polynomial kz = pvar("z").scaled(Rational(k));
        const Polynomial head =
            pvar("x") * falling_factorial(pvar("x") - kz - Polynomial(1) + Polynomial(shift), k - 1);
        return head.scaled(Rational(BigInt(1), factorial(k))) *
               binom_poly(pvar("y") + kz, n - k);
    };
    return id;
}

Identity make_jensen() {
    Identity id;
    id.name = "jensen";
    id.citation = "Jensen's identity";
    id.schema_doc = "n>=0";
    id.schema = {scalar_param("n", 0, "summation length")};
    id.symbolic_vars = fixed_vars({"x", "y", "z"});
    id.domain = [](const StructuralParams& p, Side) {
        return DomainSpec::scalar_range(p.scalar("n"));
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const int n = p.scalar("n");
        const int k = ix[0];
        if (side == Side::lhs) return jensen_lhs_term(n, k, shift);
        return binom_poly(pvar("x") + pvar("y") - Polynomial(k), n - k) * var_pow("z", k);
    };
    return id;
}

Identity make_gould_jensen() {
    Identity id;
    id.name = "gould_jensen";
    id.citation = "Gould's Abel-type analogue of Jensen's identity";
    id.schema_doc = "n>=0";
    id.schema = {scalar_param("n", 0, "summation length")};
    id.symbolic_vars = fixed_vars({"x", "y", "z"});
    id.domain = [](const StructuralParams& p, Side) {
        return DomainSpec::scalar_range(p.scalar("n"));
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const int n = p.scalar("n");
        const int k = ix[0];
        if (side == Side::lhs) {
            const Polynomial kz = pvar("z").scaled(Rational(k));
            // No binomial factor here; the mutation shifts the first power base.
            return ((pvar("x") + kz + Polynomial(shift)).pow(k) * (pvar("y") - kz).pow(n - k))
                .scaled(Rational(BigInt(1), factorial(k) * factorial(n - k)));
        }
        return ((pvar("x") + pvar("y")).pow(k) * var_pow("z", n - k))
            .scaled(Rational(BigInt(1), factorial(k)));
    };
    return id;
}

Identity make_gould_variation() {
    Identity id;
    id.name = "gould_variation";
    id.citation = "Gould's variation of Jensen's identity (printed form)";
    id.schema_doc = "n>=0";
    id.status = IdentityStatus::known_discrepant;
    id.schema = {scalar_param("n", 0, "summation length")};
    id.symbolic_vars = fixed_vars({"x", "y", "z"});
    id.domain = [](const StructuralParams& p, Side) {
        return DomainSpec::scalar_range(p.scalar("n"));
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const int n = p.scalar("n");
        const int k = ix[0];
        if (side == Side::lhs) return jensen_lhs_term(n, k, shift);
        // k C(x+y-k, n-k) (x+y-(n-k)z-k)/(x+y-k) z^k; the leading factor k
        // kills the k = 0 term, and the rational factor cancels for k >= 1.
        if (k == 0) return Polynomial();
        const Polynomial xy = pvar("x") + pvar("y");
        if (k == n) return var_pow("z", n).scaled(Rational(n));
        const Polynomial numer =
            xy - pvar("z").scaled(Rational(n - k)) - Polynomial(k);
        return (numer * falling_factorial(xy - Polynomial(k + 1), n - k - 1))
                   .scaled(Rational(BigInt(k), factorial(n - k))) *
               var_pow("z", k);
    };
    // Desk check at n = 1: left side is x+y+z, printed right side is z.
    id.expected_difference["n=1"] = pvar("x") + pvar("y");
    return id;
}

Identity make_stirling_sum() {
    Identity id;
    id.name = "stirling_sum";
    id.citation = "alternating binomial sum of monomials (finite difference)";
    id.schema_doc = "n>=0, 0<=r<=n";
    id.schema = {scalar_param("n", 0, "summation length"),
                 scalar_param("r", 0, "monomial degree")};
    id.validate_extra = [](const StructuralParams& p) {
        if (p.scalar("r") > p.scalar("n"))
            throw SchemaError("stirling_sum: r must satisfy r <= n");
    };
    id.symbolic_vars = fixed_vars({});
    id.domain = [](const StructuralParams& p, Side side) {
        return side == Side::lhs ? DomainSpec::scalar_range(p.scalar("n"))
                                 : DomainSpec::singleton();
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const int n = p.scalar("n"), r = p.scalar("r");
        if (side == Side::rhs)
            return r == n ? Polynomial(Rational(factorial(n))) : Polynomial();
        const int k = ix[0];
        return Polynomial(sign_pow(n - k) * binom_int(n + shift, k) * Rational(k).pow(r));
    };
    return id;
}

Identity make_chu_multisum() {
    Identity id;
    id.name = "chu_multisum";
    id.citation = "Chu's multi-sum generalization of Jensen's identity";
    id.schema_doc = "n>=0, s>=1";
    id.schema = {scalar_param("n", 0, "total composition weight"),
                 scalar_param("s", 1, "number of parts")};
    id.symbolic_vars = [](const StructuralParams& p) {
        auto v = numbered_vars("x", p.scalar("s"));
        v.push_back("z");
        return v;
    };
    id.domain = [](const StructuralParams& p, Side side) {
        return side == Side::lhs ? DomainSpec::compositions(p.scalar("n"), p.scalar("s"))
                                 : DomainSpec::scalar_range(p.scalar("n"));
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const int n = p.scalar("n"), s = p.scalar("s");
        if (side == Side::lhs) return chu_lhs_term(ix, shift);
        const int k = ix[0];
        const Polynomial arg =
            sum_of_vars(numbered_vars("x", s)) + pvar("z").scaled(Rational(n)) - Polynomial(k);
        return binom_poly(arg, n - k).scaled(binom_int(k + s - 2, k)) * var_pow("z", k);
    };
    return id;
}

Identity make_jensen_alt() {
    Identity id;
    id.name = "jensen_alt";
    id.citation = "Jensen's identity, right side regrouped in powers of z-1";
    id.schema_doc = "n>=0";
    id.schema = {scalar_param("n", 0, "summation length")};
    id.symbolic_vars = fixed_vars({"x", "y", "z"});
    id.domain = [](const StructuralParams& p, Side) {
        return DomainSpec::scalar_range(p.scalar("n"));
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const int n = p.scalar("n");
        const int k = ix[0];
        if (side == Side::lhs) return jensen_lhs_term(n, k, shift);
        return binom_poly(pvar("x") + pvar("y") + Polynomial(1), n - k) *
               (pvar("z") - Polynomial(1)).pow(k);
    };
    return id;
}

Identity make_shift_identity() {
    Identity id;
    id.name = "shift_identity";
    id.citation = "binomial upper-shift transform";
    id.schema_doc = "n>=0";
    id.schema = {scalar_param("n", 0, "summation length")};
    id.symbolic_vars = fixed_vars({"x", "z"});
    id.domain = [](const StructuralParams& p, Side) {
        return DomainSpec::scalar_range(p.scalar("n"));
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const int n = p.scalar("n");
        const int k = ix[0];
        if (side == Side::lhs)
            return binom_poly(pvar("x") - Polynomial(k) + Polynomial(shift), n - k) *
                   var_pow("z", k);
        return binom_poly(pvar("x") + Polynomial(1), n - k) *
               (pvar("z") - Polynomial(1)).pow(k);
    };
    return id;
}

Identity make_gkp() {
    Identity id;
    id.name = "gkp";
    id.citation = "Graham-Knuth-Patashnik identity (two-term form)";
    id.schema_doc = "m>=0 (r symbolic)";
    id.schema = {scalar_param("m", 0, "summation length")};
    id.symbolic_vars = fixed_vars({"r", "x", "y"});
    id.domain = [](const StructuralParams& p, Side) {
        return DomainSpec::scalar_range(p.scalar("m"));
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const int m = p.scalar("m");
        const int k = ix[0];
        if (side == Side::lhs)
            return binom_poly(pvar("r") + Polynomial(m) + Polynomial(shift), k) *
                   var_pow("x", k) * var_pow("y", m - k);
        return binom_poly(-pvar("r"), k).scaled(sign_pow(k)) * var_pow("x", k) *
               (pvar("x") + pvar("y")).pow(m - k);
    };
    return id;
}

Identity make_chu_multisum_alt() {
    Identity id;
    id.name = "chu_multisum_alt";
    id.citation = "Chu's multi-sum identity, right side in powers of z-1";
    id.schema_doc = "n>=0, s>=1";
    id.schema = {scalar_param("n", 0, "total composition weight"),
                 scalar_param("s", 1, "number of parts")};
    id.symbolic_vars = [](const StructuralParams& p) {
        auto v = numbered_vars("x", p.scalar("s"));
        v.push_back("z");
        return v;
    };
    id.domain = [](const StructuralParams& p, Side side) {
        return side == Side::lhs ? DomainSpec::compositions(p.scalar("n"), p.scalar("s"))
                                 : DomainSpec::scalar_range(p.scalar("n"));
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const int n = p.scalar("n"), s = p.scalar("s");
        if (side == Side::lhs) return chu_lhs_term(ix, shift);
        const int j = ix[0];
        const Polynomial arg = sum_of_vars(numbered_vars("x", s)) +
                               pvar("z").scaled(Rational(n)) + Polynomial(s - 1);
        return binom_poly(arg, n - j).scaled(binom_int(j + s - 2, j)) *
               (pvar("z") - Polynomial(1)).pow(j);
    };
    return id;
}

Identity make_ks2() {
    Identity id;
    id.name = "ks2";
    id.citation = "binomial transform with staircase factor C(k+s,k)";
    id.schema_doc = "n>=0, s>=0";
    id.schema = {scalar_param("n", 0, "summation length"),
                 scalar_param("s", 0, "staircase offset")};
    id.symbolic_vars = fixed_vars({"x", "z"});
    id.domain = [](const StructuralParams& p, Side) {
        return DomainSpec::scalar_range(p.scalar("n"));
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const int n = p.scalar("n"), s = p.scalar("s");
        const int k = ix[0];
        if (side == Side::lhs)
            return binom_poly(pvar("x") - Polynomial(k), n - k)
                       .scaled(binom_int(k + s + shift, k)) *
                   var_pow("z", k);
        return binom_poly(pvar("x") + Polynomial(s + 1), n - k).scaled(binom_int(k + s, k)) *
               (pvar("z") - Polynomial(1)).pow(k);
    };
    return id;
}

Identity make_gkp_full() {
    Identity id;
    id.name = "gkp_full";
    id.citation = "Graham-Knuth-Patashnik identity (four-parameter form)";
    id.schema_doc = "0<=n<=m (r symbolic)";
    id.schema = {scalar_param("m", 0, "upper length"), scalar_param("n", 0, "lower length")};
    id.validate_extra = [](const StructuralParams& p) {
        if (p.scalar("n") > p.scalar("m")) throw SchemaError("gkp_full: requires n <= m");
    };
    id.symbolic_vars = fixed_vars({"r", "x", "y"});
    id.domain = [](const StructuralParams& p, Side) {
        // Terms with k > m-n vanish with their binomial factor C(., m-n-k),
        // before any negative power of x could arise.
        return DomainSpec::scalar_range(p.scalar("m") - p.scalar("n"));
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const int m = p.scalar("m"), n = p.scalar("n");
        const int k = ix[0];
        const Rational c = binom_int(n + k, n);
        if (side == Side::lhs)
            return binom_poly(pvar("r") + Polynomial(m) + Polynomial(shift), m - n - k)
                       .scaled(c) *
                   var_pow("x", m - n - k) * var_pow("y", k);
        return binom_poly(-pvar("r"), m - n - k).scaled(c * sign_pow(m - n - k)) *
               var_pow("x", m - n - k) * (pvar("x") + pvar("y")).pow(k);
    };
    return id;
}

Identity make_sun() {
    Identity id;
    id.name = "sun";
    id.citation = "Sun's identity";
    id.schema_doc = "m>=0, n>=0, a>=0";
    id.schema = {scalar_param("m", 0, "left summation length"),
                 scalar_param("n", 0, "right summation length"),
                 scalar_param("a", 0, "lower index")};
    id.symbolic_vars = fixed_vars({"x"});
    id.domain = [](const StructuralParams& p, Side side) {
        return DomainSpec::scalar_range(side == Side::lhs ? p.scalar("m") : p.scalar("n"));
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const int m = p.scalar("m"), n = p.scalar("n"), a = p.scalar("a");
        const int k = ix[0];
        if (side == Side::lhs) {
            const Rational c = binom_int(n + k, a);
            if (c.is_zero()) return Polynomial();  // guards the power n+k-a < 0
            return (Polynomial(1) + pvar("x"))
                .pow(n + k - a)
                .scaled(sign_pow(m - k) * binom_int(m + shift, k) * c);
        }
        const Rational c = binom_int(m + k, a);
        if (c.is_zero()) return Polynomial();
        return var_pow("x", m + k - a).scaled(binom_int(n, k) * c);
    };
    return id;
}

Identity make_munarini() {
    Identity id;
    id.name = "munarini";
    id.citation = "Munarini's identity";
    id.schema_doc = "n>=0 (alpha, beta symbolic)";
    id.schema = {scalar_param("n", 0, "summation length")};
    id.symbolic_vars = fixed_vars({"alpha", "beta", "x"});
    id.domain = [](const StructuralParams& p, Side) {
        return DomainSpec::scalar_range(p.scalar("n"));
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const int n = p.scalar("n");
        const int k = ix[0];
        const Polynomial stair = binom_poly(pvar("beta") + Polynomial(k), k);
        if (side == Side::lhs) {
            const Polynomial arg =
                pvar("beta") - pvar("alpha") + Polynomial(n) + Polynomial(shift);
            return binom_poly(arg, n - k).scaled(sign_pow(n - k)) * stair *
                   (Polynomial(1) + pvar("x")).pow(k);
        }
        return binom_poly(pvar("alpha"), n - k) * stair * var_pow("x", k);
    };
    return id;
}

Identity make_simons() {
    Identity id;
    id.name = "simons";
    id.citation = "Simons' identity";
    id.schema_doc = "n>=0";
    id.schema = {scalar_param("n", 0, "summation length")};
    id.symbolic_vars = fixed_vars({"x"});
    id.domain = [](const StructuralParams& p, Side) {
        return DomainSpec::scalar_range(p.scalar("n"));
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const int n = p.scalar("n");
        const int k = ix[0];
        const Rational stair = binom_int(n + k, k);
        if (side == Side::lhs)
            return (Polynomial(1) + pvar("x"))
                .pow(k)
                .scaled(sign_pow(n - k) * binom_int(n + shift, k) * stair);
        return var_pow("x", k).scaled(binom_int(n, k) * stair);
    };
    return id;
}

Identity make_cv_multi() {
    Identity id;
    id.name = "cv_multi";
    id.citation = "Chu-Vandermonde convolution, multinomial form";
    id.schema_doc = "nvec in N^m";
    id.schema = {vector_param("nvec", 0, "vector summation bound")};
    id.symbolic_vars = fixed_vars({"x", "y"});
    id.domain = [](const StructuralParams& p, Side side) {
        return side == Side::lhs ? DomainSpec::vec_range(p.vec("nvec"))
                                 : DomainSpec::singleton();
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const VecIndex& n = p.vec("nvec");
        if (side == Side::rhs) return multinomial_poly(pvar("x") + pvar("y"), n);
        const VecIndex k = vec_of(ix);
        return multinomial_poly(pvar("x") + Polynomial(shift), k) *
               multinomial_poly(pvar("y"), n.minus(k));
    };
    return id;
}

Identity make_stirling_multi() {
    Identity id;
    id.name = "stirling_multi";
    id.citation = "alternating binomial sum of monomials, multinomial form";
    id.schema_doc = "nvec,rvec in N^m with rvec=nvec or some r_i<n_i";
    id.schema = {vector_param("nvec", 0, "vector summation bound"),
                 vector_param("rvec", 0, "monomial exponent vector")};
    id.validate_extra = [](const StructuralParams& p) {
        const VecIndex& n = p.vec("nvec");
        const VecIndex& r = p.vec("rvec");
        if (n.dim() != r.dim())
            throw SchemaError("stirling_multi: nvec and rvec must share a dimension");
        if (r == n) return;
        for (int i = 0; i < n.dim(); ++i)
            if (r.c[i] < n.c[i]) return;
        throw SchemaError(
            "stirling_multi: rvec must equal nvec or have some component r_i < n_i");
    };
    id.symbolic_vars = fixed_vars({});
    id.domain = [](const StructuralParams& p, Side side) {
        return side == Side::lhs ? DomainSpec::vec_range(p.vec("nvec"))
                                 : DomainSpec::singleton();
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const VecIndex& n = p.vec("nvec");
        const VecIndex& r = p.vec("rvec");
        if (side == Side::rhs)
            return r == n ? Polynomial(Rational(vec_factorial(n))) : Polynomial();
        const VecIndex k = vec_of(ix);
        Rational coeff = binom_int(n.c[0] + shift, k.c[0]);
        for (int i = 1; i < n.dim(); ++i) coeff *= binom_int(n.c[i], k.c[i]);
        return Polynomial(sign_pow(n.sum() - k.sum()) * coeff * Rational(int_vec_pow(k, r)));
    };
    return id;
}

Identity make_scalar_upper_composition() {
    Identity id;
    id.name = "scalar_upper_composition";
    id.citation = "composition convolution with scalar upper arguments";
    id.schema_doc = "nvec in N^m, avec in N^s with |avec|=|nvec|";
    id.schema = {vector_param("nvec", 0, "vector composition target"),
                 vector_param("avec", 0, "scalar upper arguments")};
    id.validate_extra = [](const StructuralParams& p) {
        if (p.vec("avec").sum() != p.vec("nvec").sum())
            throw SchemaError("scalar_upper_composition: requires |avec| = |nvec|");
    };
    id.symbolic_vars = fixed_vars({});
    id.domain = [](const StructuralParams& p, Side side) {
        return side == Side::lhs
                   ? DomainSpec::vec_compositions(p.vec("nvec"), p.vec("avec").dim())
                   : DomainSpec::singleton();
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const VecIndex& n = p.vec("nvec");
        const VecIndex& a = p.vec("avec");
        if (side == Side::rhs) return Polynomial(multinomial_int(n.sum(), n));
        Rational out(1);
        for (int j = 0; j < a.dim(); ++j)
            out *= multinomial_int(a.c[j] + (j == 0 ? shift : 0), block_of(ix, j, n.dim()));
        return Polynomial(out);
    };
    return id;
}

Identity make_compositions_lemma() {
    Identity id;
    id.name = "compositions_lemma";
    id.citation = "composition sum of multinomial self-coefficients";
    id.schema_doc = "nvec in N^m, s>=1";
    id.schema = {vector_param("nvec", 0, "vector composition target"),
                 scalar_param("s", 1, "number of parts")};
    id.symbolic_vars = fixed_vars({});
    id.domain = [](const StructuralParams& p, Side side) {
        return side == Side::lhs ? DomainSpec::vec_compositions(p.vec("nvec"), p.scalar("s"))
                                 : DomainSpec::singleton();
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const VecIndex& n = p.vec("nvec");
        const int s = p.scalar("s");
        if (side == Side::rhs) return Polynomial(multinomial_int(n.sum() + s - 1, n));
        Rational out(1);
        for (int j = 0; j < s; ++j) {
            const VecIndex kj = block_of(ix, j, n.dim());
            out *= multinomial_int(kj.sum() + (j == 0 ? shift : 0), kj);
        }
        return Polynomial(out);
    };
    return id;
}

Identity make_mohanty_handa() {
    Identity id;
    id.name = "mohanty_handa";
    id.citation = "Mohanty-Handa's identity";
    id.schema_doc = "nvec in N^m";
    id.schema = {vector_param("nvec", 0, "vector summation bound")};
    id.symbolic_vars = [](const StructuralParams& p) {
        std::vector<std::string> v{"x", "y"};
        for (auto& z : numbered_vars("z", p.vec("nvec").dim())) v.push_back(z);
        return v;
    };
    id.domain = [](const StructuralParams& p, Side) {
        return DomainSpec::vec_range(p.vec("nvec"));
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const VecIndex& n = p.vec("nvec");
        const auto zv = numbered_vars("z", n.dim());
        const VecIndex k = vec_of(ix);
        if (side == Side::lhs) {
            const Polynomial kz = dot_product(zv, k);
            return multinomial_poly(pvar("x") + kz + Polynomial(shift), k) *
                   multinomial_poly(pvar("y") - kz, n.minus(k));
        }
        return multinomial_poly(pvar("x") + pvar("y") - Polynomial(k.sum()), n.minus(k))
                   .scaled(multinomial_int(k.sum(), k)) *
               vec_monomial(zv, k);
    };
    return id;
}

Identity make_chu89() {
    Identity id;
    id.name = "chu89";
    id.citation = "Chu's multinomial generalization of Mohanty-Handa's identity";
    id.schema_doc = "nvec in N^m, s>=1";
    id.schema = {vector_param("nvec", 0, "vector composition target"),
                 scalar_param("s", 1, "number of parts")};
    id.symbolic_vars = [](const StructuralParams& p) {
        auto v = numbered_vars("x", p.scalar("s"));
        for (auto& z : numbered_vars("z", p.vec("nvec").dim())) v.push_back(z);
        return v;
    };
    id.domain = [](const StructuralParams& p, Side side) {
        return side == Side::lhs
                   ? DomainSpec::vec_compositions(p.vec("nvec"), p.scalar("s"))
                   : DomainSpec::vec_range(p.vec("nvec"));
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const VecIndex& n = p.vec("nvec");
        const int s = p.scalar("s");
        const int m = n.dim();
        if (side == Side::lhs) return chu89_lhs_term(ix, s, m, shift);
        const auto zv = numbered_vars("z", m);
        const VecIndex k = vec_of(ix);
        const Polynomial arg = sum_of_vars(numbered_vars("x", s)) + dot_product(zv, n) -
                               Polynomial(k.sum());
        return multinomial_poly(arg, n.minus(k)).scaled(multinomial_int(k.sum() + s - 2, k)) *
               vec_monomial(zv, k);
    };
    return id;
}

Identity make_chu89_alt() {
    Identity id;
    id.name = "chu89_alt";
    id.citation = "Chu's multinomial identity, right side in powers of z-1";
    id.schema_doc = "nvec in N^m, s>=1";
    id.schema = {vector_param("nvec", 0, "vector composition target"),
                 scalar_param("s", 1, "number of parts")};
    id.symbolic_vars = [](const StructuralParams& p) {
        auto v = numbered_vars("x", p.scalar("s"));
        for (auto& z : numbered_vars("z", p.vec("nvec").dim())) v.push_back(z);
        return v;
    };
    id.domain = [](const StructuralParams& p, Side side) {
        return side == Side::lhs
                   ? DomainSpec::vec_compositions(p.vec("nvec"), p.scalar("s"))
                   : DomainSpec::vec_range(p.vec("nvec"));
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const VecIndex& n = p.vec("nvec");
        const int s = p.scalar("s");
        const int m = n.dim();
        if (side == Side::lhs) return chu89_lhs_term(ix, s, m, shift);
        const auto zv = numbered_vars("z", m);
        const VecIndex j = vec_of(ix);
        const Polynomial arg = sum_of_vars(numbered_vars("x", s)) + dot_product(zv, n) +
                               Polynomial(s - 1);
        return multinomial_poly(arg, n.minus(j)).scaled(multinomial_int(j.sum() + s - 2, j)) *
               shifted_vec_power(zv, j, -1);
    };
    return id;
}

Identity make_newmulti() {
    Identity id;
    id.name = "newmulti";
    id.citation = "multinomial staircase transform identity";
    id.schema_doc = "nvec in N^m, s>=0";
    id.schema = {vector_param("nvec", 0, "vector summation bound"),
                 scalar_param("s", 0, "staircase offset")};
    id.symbolic_vars = [](const StructuralParams& p) {
        std::vector<std::string> v{"x"};
        for (auto& z : numbered_vars("z", p.vec("nvec").dim())) v.push_back(z);
        return v;
    };
    id.domain = [](const StructuralParams& p, Side) {
        return DomainSpec::vec_range(p.vec("nvec"));
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const VecIndex& n = p.vec("nvec");
        const int s = p.scalar("s");
        const auto zv = numbered_vars("z", n.dim());
        const VecIndex k = vec_of(ix);
        if (side == Side::lhs)
            return multinomial_poly(pvar("x") - Polynomial(k.sum()), n.minus(k))
                       .scaled(multinomial_int(k.sum() + s + shift, k)) *
                   vec_monomial(zv, k);
        return multinomial_poly(pvar("x") + Polynomial(s + 1), n.minus(k))
                   .scaled(multinomial_int(k.sum() + s, k)) *
               shifted_vec_power(zv, k, -1);
    };
    return id;
}

Identity make_multi_munarini() {
    Identity id;
    id.name = "multi_munarini";
    id.citation = "multinomial generalization of Munarini's identity";
    id.schema_doc = "nvec in N^m, alpha/beta integers";
    id.schema = {vector_param("nvec", 0, "vector summation bound"),
                 scalar_param("alpha", ParamSpec::kUnbounded, "integer parameter"),
                 scalar_param("beta", ParamSpec::kUnbounded, "integer parameter")};
    id.symbolic_vars = [](const StructuralParams& p) {
        return numbered_vars("x", p.vec("nvec").dim());
    };
    id.domain = [](const StructuralParams& p, Side) {
        return DomainSpec::vec_range(p.vec("nvec"));
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const VecIndex& n = p.vec("nvec");
        const int alpha = p.scalar("alpha"), beta = p.scalar("beta");
        const auto xv = numbered_vars("x", n.dim());
        const VecIndex k = vec_of(ix);
        const Rational stair = multinomial_int(beta + k.sum(), k);
        if (side == Side::lhs)
            return shifted_vec_power(xv, k, 1).scaled(
                sign_pow(n.sum() - k.sum()) *
                multinomial_int(beta - alpha + n.sum() + shift, n.minus(k)) * stair);
        return shifted_vec_power(xv, k, 0).scaled(multinomial_int(alpha, n.minus(k)) * stair);
    };
    return id;
}

Identity make_multi_simons() {
    Identity id;
    id.name = "multi_simons";
    id.citation = "multinomial generalization of Simons' identity";
    id.schema_doc = "nvec in N^m";
    id.schema = {vector_param("nvec", 0, "vector summation bound")};
    id.symbolic_vars = [](const StructuralParams& p) {
        return numbered_vars("x", p.vec("nvec").dim());
    };
    id.domain = [](const StructuralParams& p, Side) {
        return DomainSpec::vec_range(p.vec("nvec"));
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const VecIndex& n = p.vec("nvec");
        const auto xv = numbered_vars("x", n.dim());
        const VecIndex k = vec_of(ix);
        const Rational stair = multinomial_int(n.sum() + k.sum(), k);
        if (side == Side::lhs)
            return shifted_vec_power(xv, k, 1).scaled(
                sign_pow(n.sum() - k.sum()) *
                multinomial_int(n.sum() + shift, n.minus(k)) * stair);
        return shifted_vec_power(xv, k, 0).scaled(multinomial_int(n.sum(), n.minus(k)) * stair);
    };
    return id;
}

Identity make_hou_zeng_q() {
    Identity id;
    id.name = "hou_zeng_q";
    id.citation = "Hou-Zeng q-analogue of Sun's identity";
    id.schema_doc = "m>=0, n>=0, a>=0";
    id.schema = {scalar_param("m", 0, "left summation length"),
                 scalar_param("n", 0, "right summation length"),
                 scalar_param("a", 0, "lower index")};
    id.symbolic_vars = fixed_vars({"q", "x"});
    id.domain = [](const StructuralParams& p, Side side) {
        return DomainSpec::scalar_range(side == Side::lhs ? p.scalar("m") : p.scalar("n"));
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const int m = p.scalar("m"), n = p.scalar("n"), a = p.scalar("a");
        const int k = ix[0];
        if (side == Side::lhs) {
            const Polynomial bracket = gauss_binom(n + k, a);
            if (bracket.is_zero()) return Polynomial();  // guards (.;q)_{n+k-a}
            const Polynomial poch = q_pochhammer(-(var_pow("x", 1) * q_power(a)), n + k - a);
            return gauss_binom(m + shift, k).scaled(sign_pow(m - k)) * bracket * poch *
                   q_power(choose2(k + 1) - static_cast<long long>(m) * k + choose2(a));
        }
        const Polynomial bracket = gauss_binom(m + k, a);
        if (bracket.is_zero()) return Polynomial();
        return gauss_binom(n, k) * bracket * var_pow("x", m + k - a) *
               q_power(static_cast<long long>(m) * n + choose2(k));
    };
    return id;
}

Identity make_munarini_q() {
    Identity id;
    id.name = "munarini_q";
    id.citation = "q-analogue of Munarini's identity";
    id.schema_doc = "n>=0, alpha/beta integers";
    id.schema = {scalar_param("n", 0, "summation length"),
                 scalar_param("alpha", ParamSpec::kUnbounded, "integer parameter"),
                 scalar_param("beta", ParamSpec::kUnbounded, "integer parameter")};
    id.symbolic_vars = fixed_vars({"q", "x"});
    id.domain = [](const StructuralParams& p, Side) {
        return DomainSpec::scalar_range(p.scalar("n"));
    };
    id.term = [](const StructuralParams& p, Side side, const Index& ix, int shift) {
        const int n = p.scalar("n");
        const int alpha = p.scalar("alpha"), beta = p.scalar("beta");
        const int k = ix[0];
        const Polynomial stair = gauss_binom(beta + k, k);
        if (side == Side::lhs)
            return gauss_binom(beta - alpha + n + shift, n - k).scaled(sign_pow(n - k)) *
                   stair * q_power(choose2(n - k) - choose2(n)) *
                   q_pochhammer(-pvar("x"), k);
        return gauss_binom(alpha, n - k) * stair *
               q_power(choose2(n - k + 1) +
                       static_cast<long long>(beta - alpha) * (n - k)) *
               var_pow("x", k);
    };
    return id;
}

}  // namespace

const std::vector<Identity>& catalog() {
    static const std::vector<Identity> entries = [] {
        std::vector<Identity> v;
        v.push_back(make_chu_vandermonde());
        v.push_back(make_abel());
        v.push_back(make_rothe());
        v.push_back(make_jensen());
        v.push_back(make_gould_jensen());
        v.push_back(make_gould_variation());
        v.push_back(make_stirling_sum());
        v.push_back(make_chu_multisum());
        v.push_back(make_jensen_alt());
        v.push_back(make_shift_identity());
        v.push_back(make_gkp());
        v.push_back(make_chu_multisum_alt());
        v.push_back(make_ks2());
        v.push_back(make_gkp_full());
        v.push_back(make_sun());
        v.push_back(make_munarini());
        v.push_back(make_simons());
        v.push_back(make_cv_multi());
        v.push_back(make_stirling_multi());
        v.push_back(make_scalar_upper_composition());
        v.push_back(make_compositions_lemma());
        v.push_back(make_mohanty_handa());
        v.push_back(make_chu89());
        v.push_back(make_chu89_alt());
        v.push_back(make_newmulti());
        v.push_back(make_multi_munarini());
        v.push_back(make_multi_simons());
        v.push_back(make_hou_zeng_q());
        v.push_back(make_munarini_q());
        return v;
    }();
    return entries;
}

}  // namespace idforge
