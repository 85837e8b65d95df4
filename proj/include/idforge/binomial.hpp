#pragma once

#include <string>
#include <vector>

#include "idforge/polynomial.hpp"

namespace idforge {

// Integer vector index for multinomial coefficients and vector sums.
// The componentwise partial order 0 <= k <= n means 0 <= k_i <= n_i for
// every i; |k| is the component sum and k! the product of factorials.
struct VecIndex {
    std::vector<int> c;

    VecIndex() = default;
    explicit VecIndex(std::vector<int> v) : c(std::move(v)) {}
    VecIndex(std::initializer_list<int> v) : c(v) {}

    int dim() const { return static_cast<int>(c.size()); }
    int sum() const;
    bool all_nonnegative() const;
    bool leq(const VecIndex& other) const;  // componentwise; dims must match

    VecIndex plus(const VecIndex& other) const;
    VecIndex minus(const VecIndex& other) const;

    bool operator==(const VecIndex&) const = default;
    auto operator<=>(const VecIndex&) const = default;

    std::string str() const;  // "(1,2)"
};

// n! as an exact integer; memoized, safe for concurrent callers.
BigInt factorial(int n);

// v! = v_1! * ... * v_m!; every component must be nonnegative.
BigInt vec_factorial(const VecIndex& v);

// p (p-1) ... (p-k+1); the empty product (k == 0) is 1.
Polynomial falling_factorial(const Polynomial& p, int k);

// Binomial coefficient with polynomial upper argument:
// falling_factorial(p, k) / k! for k >= 0, zero for k < 0.
Polynomial binom_poly(const Polynomial& p, long long k);

// Integer binomial under the same conventions; satisfies
// binom_int(-a, k) == (-1)^k binom_int(a+k-1, k) exactly.
Rational binom_int(long long a, long long k);

// Multinomial coefficient with polynomial upper argument and vector lower
// index: falling_factorial(p, |n|) / n! when n is componentwise nonnegative,
// zero otherwise.
Polynomial multinomial_poly(const Polynomial& p, const VecIndex& n);

// Same with a constant upper argument (any integer).
Rational multinomial_int(long long a, const VecIndex& n);

// Componentwise product of integer binomials, prod C(n_i, k_i).
Rational vec_binom(const VecIndex& n, const VecIndex& k);

// z_1^{k_1} ... z_m^{k_m} as a Polynomial; k must be componentwise >= 0.
Polynomial vec_monomial(const std::vector<std::string>& z_vars, const VecIndex& k);

// k_1 z_1 + ... + k_m z_m.
Polynomial dot_product(const std::vector<std::string>& z_vars, const VecIndex& k);

// prod base_i^{exp_i} over the components, with 0^0 == 1; exps must be >= 0.
BigInt int_vec_pow(const VecIndex& base, const VecIndex& exp);

// (a;q)_n = (1-a)(1-aq)...(1-aq^{n-1}); the empty product is 1.
Polynomial q_pochhammer(const Polynomial& a, int n);

// The Laurent monomial q^e; e may be negative.
Polynomial q_power(long long e);

// Gaussian binomial [alpha k] = (q^{alpha-k+1};q)_k / (q;q)_k for k >= 0,
// zero for k < 0. alpha may be any integer; negative alpha yields a Laurent
// polynomial in q. The quotient is computed by exact single-variable
// division with the remainder asserted zero.
Polynomial gauss_binom(long long alpha, long long k);

// Exact quotient of Laurent polynomials in the single variable q; throws
// ContractViolation if the division leaves a remainder or if either operand
// involves another variable.
Polynomial laurent_div_exact_q(const Polynomial& num, const Polynomial& den);

}  // namespace idforge
