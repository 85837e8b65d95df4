#include "idforge/binomial.hpp"

#include <mutex>

#include "idforge/errors.hpp"

namespace idforge {

int VecIndex::sum() const {
    int s = 0;
    for (int v : c) s += v;
    return s;
}

bool VecIndex::all_nonnegative() const {
    for (int v : c)
        if (v < 0) return false;
    return true;
}

bool VecIndex::leq(const VecIndex& other) const {
    if (dim() != other.dim())
        throw ContractViolation("VecIndex: dimension mismatch " + str() + " vs " + other.str());
    for (int i = 0; i < dim(); ++i)
        if (c[i] > other.c[i]) return false;
    return true;
}

VecIndex VecIndex::plus(const VecIndex& other) const {
    if (dim() != other.dim())
        throw ContractViolation("VecIndex: dimension mismatch " + str() + " vs " + other.str());
    VecIndex out = *this;
    for (int i = 0; i < dim(); ++i) out.c[i] += other.c[i];
    return out;
}

VecIndex VecIndex::minus(const VecIndex& other) const {
    if (dim() != other.dim())
        throw ContractViolation("VecIndex: dimension mismatch " + str() + " vs " + other.str());
    VecIndex out = *this;
    for (int i = 0; i < dim(); ++i) out.c[i] -= other.c[i];
    return out;
}

std::string VecIndex::str() const {
    std::string s = "(";
    for (int i = 0; i < dim(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

BigInt factorial(int n) {
    if (n < 0) throw ContractViolation("factorial: negative argument " + std::to_string(n));
    static std::mutex mu;
    static std::vector<BigInt> memo{1};
    std::lock_guard lock(mu);
    while (static_cast<int>(memo.size()) <= n)
        memo.push_back(memo.back() * static_cast<int>(memo.size()));
    return memo[n];
}

BigInt vec_factorial(const VecIndex& v) {
    BigInt out = 1;
    for (int x : v.c) out *= factorial(x);
    return out;
}

Polynomial falling_factorial(const Polynomial& p, int k) {
    if (k < 0) throw ContractViolation("falling_factorial: negative length");
    Polynomial out(1);
    for (int i = 0; i < k; ++i) out *= p - Polynomial(i);
    return out;
}

Polynomial binom_poly(const Polynomial& p, long long k) {
    if (k < 0) return Polynomial();
    return falling_factorial(p, static_cast<int>(k))
        .scaled(Rational(BigInt(1), factorial(static_cast<int>(k))));
}

Rational binom_int(long long a, long long k) {
    if (k < 0) return Rational(0);
    Rational num(1);
    for (long long i = 0; i < k; ++i) num *= Rational(a - i);
    return num / Rational(factorial(static_cast<int>(k)));
}

Polynomial multinomial_poly(const Polynomial& p, const VecIndex& n) {
    if (!n.all_nonnegative()) return Polynomial();
    return falling_factorial(p, n.sum()).scaled(Rational(BigInt(1), vec_factorial(n)));
}

Rational multinomial_int(long long a, const VecIndex& n) {
    if (!n.all_nonnegative()) return Rational(0);
    Rational num(1);
    for (int i = 0; i < n.sum(); ++i) num *= Rational(a - i);
    return num / Rational(vec_factorial(n));
}

Rational vec_binom(const VecIndex& n, const VecIndex& k) {
    if (n.dim() != k.dim())
        throw ContractViolation("vec_binom: dimension mismatch " + n.str() + " vs " + k.str());
    Rational out(1);
    for (int i = 0; i < n.dim(); ++i) out *= binom_int(n.c[i], k.c[i]);
    return out;
}

Polynomial vec_monomial(const std::vector<std::string>& z_vars, const VecIndex& k) {
    if (static_cast<int>(z_vars.size()) != k.dim())
        throw ContractViolation("vec_monomial: dimension mismatch");
    if (!k.all_nonnegative())
        throw ContractViolation("vec_monomial: negative component in " + k.str());
    std::vector<Monomial::Entry> entries;
    for (int i = 0; i < k.dim(); ++i)
        if (k.c[i] != 0) entries.emplace_back(z_vars[i], k.c[i]);
    return Polynomial::monomial(Monomial::from_entries(std::move(entries)), Rational(1));
}

Polynomial dot_product(const std::vector<std::string>& z_vars, const VecIndex& k) {
    if (static_cast<int>(z_vars.size()) != k.dim())
        throw ContractViolation("dot_product: dimension mismatch");
    Polynomial out;
    for (int i = 0; i < k.dim(); ++i)
        out += Polynomial::variable(z_vars[i]).scaled(Rational(k.c[i]));
    return out;
}

BigInt int_vec_pow(const VecIndex& base, const VecIndex& exp) {
    if (base.dim() != exp.dim())
        throw ContractViolation("int_vec_pow: dimension mismatch");
    BigInt out = 1;
    for (int i = 0; i < base.dim(); ++i) {
        if (exp.c[i] < 0) throw ContractViolation("int_vec_pow: negative exponent");
        for (int j = 0; j < exp.c[i]; ++j) out *= base.c[i];  // 0^0 == 1 falls out
    }
    return out;
}

Polynomial q_pochhammer(const Polynomial& a, int n) {
    if (n < 0) throw ContractViolation("q_pochhammer: negative length");
    const Polynomial q = Polynomial::variable("q");
    Polynomial out(1);
    Polynomial aqk = a;
    for (int i = 0; i < n; ++i) {
        out *= Polynomial(1) - aqk;
        if (i + 1 < n) aqk *= q;
    }
    return out;
}

Polynomial q_power(long long e) {
    if (e == 0) return Polynomial(1);
    return Polynomial::monomial(Monomial::variable("q", static_cast<int>(e)), Rational(1));
}

namespace {

// Dense view of a Laurent polynomial in q: coefficients for exponents
// low .. low+coeffs.size()-1.
struct DenseQ {
    long long low = 0;
    std::vector<Rational> coeffs;
};

DenseQ to_dense_q(const Polynomial& p) {
    DenseQ d;
    if (p.is_zero()) return d;
    long long lo = 0, hi = 0;
    bool first = true;
    for (const auto& [m, _] : p.terms()) {
        for (const auto& [name, e] : m.entries())
            if (name != "q")
                throw ContractViolation("laurent_div_exact_q: operand is not univariate in q");
        const long long e = m.exponent_of("q");
        lo = first ? e : std::min(lo, e);
        hi = first ? e : std::max(hi, e);
        first = false;
    }
    d.low = lo;
    d.coeffs.assign(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (const auto& [m, c] : p.terms()) d.coeffs[m.exponent_of("q") - lo] = c;
    return d;
}

Polynomial from_dense_q(const std::vector<Rational>& coeffs, long long low) {
    Polynomial out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        const long long e = low + static_cast<long long>(i);
        out += Polynomial::monomial(e == 0 ? Monomial{} : Monomial::variable("q", static_cast<int>(e)),
                                    coeffs[i]);
    }
    return out;
}

}  // namespace

Polynomial laurent_div_exact_q(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw ContractViolation("laurent_div_exact_q: zero divisor");
    if (num.is_zero()) return Polynomial();
    DenseQ n = to_dense_q(num);
    const DenseQ d = to_dense_q(den);
    if (n.coeffs.size() < d.coeffs.size())
        throw ContractViolation("laurent_div_exact_q: nonzero remainder");

    // Ordinary descending long division on the shifted coefficient vectors.
    const std::size_t qlen = n.coeffs.size() - d.coeffs.size() + 1;
    std::vector<Rational> quot(qlen, Rational(0));
    const Rational& lead = d.coeffs.back();
    for (std::size_t i = qlen; i-- > 0;) {
        Rational f = n.coeffs[i + d.coeffs.size() - 1] / lead;
        quot[i] = f;
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < d.coeffs.size(); ++j)
            n.coeffs[i + j] -= f * d.coeffs[j];
    }
    for (const Rational& r : n.coeffs)
        if (!r.is_zero()) throw ContractViolation("laurent_div_exact_q: nonzero remainder");

    return from_dense_q(quot, n.low - d.low);
}

Polynomial gauss_binom(long long alpha, long long k) {
    if (k < 0) return Polynomial();
    if (k == 0) return Polynomial(1);
    const Polynomial num = q_pochhammer(q_power(alpha - k + 1), static_cast<int>(k));
    if (num.is_zero()) return Polynomial();  // 0 <= alpha < k
    const Polynomial den = q_pochhammer(q_power(1), static_cast<int>(k));
    return laurent_div_exact_q(num, den);
}

}  // namespace idforge
