#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "idforge/rational.hpp"

namespace idforge {

// Product of variable powers, e.g. x^2*y. Entries are sorted by variable
// name and never carry exponent zero. Negative exponents are legal only on
// the Laurent variable "q"; any other negative exponent is a construction
// error.
class Monomial {
public:
    using Entry = std::pair<std::string, int>;

    Monomial() = default;  // the empty product, i.e. 1

    static Monomial variable(const std::string& name, int exponent = 1);
    static Monomial from_entries(std::vector<Entry> entries);

    bool is_unit() const { return entries_.empty(); }
    int degree() const;  // sum of exponents, Laurent exponents included
    int exponent_of(const std::string& var) const;
    const std::vector<Entry>& entries() const { return entries_; }

    // Exponentwise sum (the monomial product).
    Monomial merged_with(const Monomial& other) const;

    bool operator==(const Monomial&) const = default;

    std::string str() const;  // "x^2*y", "q^-1*x", "1" for the unit

private:
    std::vector<Entry> entries_;
    static void validate(const Entry& e);
};

// Canonical term order: total degree descending, ties by variable name
// ascending then exponent descending. Doubles as the rendering order of
// Polynomial::str.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over Rational. Stored terms never have a
// zero coefficient, so structural equality is semantic equality.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Polynomial() = default;  // zero
    Polynomial(long long c) : Polynomial(Rational(c)) {}  // NOLINT
    Polynomial(const Rational& c);                        // NOLINT

    static Polynomial variable(const std::string& name);
    static Polynomial monomial(const Monomial& m, const Rational& coeff);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    int degree() const;  // 0 for the zero polynomial

    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()

    std::vector<std::string> variables() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(long long e) const;  // e >= 0; p^0 == 1 for every p, 0^0 == 1
    Polynomial scaled(const Rational& c) const;

    // Exact evaluation. The assignment must cover every variable present;
    // a negative exponent on q requires assignment[q] != 0.
    Rational eval(const std::map<std::string, Rational>& assignment) const;

    // Substitute variables by polynomials; unmapped variables persist.
    // A variable occurring with a negative exponent may only be replaced by
    // a nonzero constant.
    Polynomial subst(const std::map<std::string, Polynomial>& replacements) const;

    bool operator==(const Polynomial&) const = default;

    // Canonical rendering: MonomialOrder term order, coefficients as "p" or
    // "p/q", the zero polynomial as "0".
    std::string str() const;

private:
    TermMap terms_;
    void add_term(const Monomial& m, const Rational& c);
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace idforge
