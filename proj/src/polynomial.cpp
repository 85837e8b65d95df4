#include "idforge/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "idforge/errors.hpp"

namespace idforge {

namespace {

bool valid_variable_name(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name.front()))) return false;
    return std::all_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

}  // namespace

void Monomial::validate(const Entry& e) {
    if (!valid_variable_name(e.first))
        throw ContractViolation("Monomial: invalid variable name '" + e.first + "'");
    if (e.second == 0)
        throw ContractViolation("Monomial: zero exponent on '" + e.first + "' must be elided");
    if (e.second < 0 && e.first != "q")
        throw ContractViolation("Monomial: negative exponent on non-Laurent variable '" +
                                e.first + "'");
}

Monomial Monomial::variable(const std::string& name, int exponent) {
    Monomial m;
    if (exponent == 0) return m;
    Entry e{name, exponent};
    validate(e);
    m.entries_.push_back(std::move(e));
    return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
    std::erase_if(entries, [](const Entry& e) { return e.second == 0; });
    std::sort(entries.begin(), entries.end());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        validate(entries[i]);
        if (i > 0 && entries[i].first == entries[i - 1].first)
            throw ContractViolation("Monomial: duplicate variable '" + entries[i].first + "'");
    }
    Monomial m;
    m.entries_ = std::move(entries);
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [_, e] : entries_) d += e;
    return d;
}

int Monomial::exponent_of(const std::string& var) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), var,
                               [](const Entry& e, const std::string& v) { return e.first < v; });
    return (it != entries_.end() && it->first == var) ? it->second : 0;
}

Monomial Monomial::merged_with(const Monomial& other) const {
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin(), b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            merged.push_back(*a++);
        } else if (a == entries_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            const int e = a->second + b->second;
            if (e != 0) {
                Entry combined{a->first, e};
                validate(combined);
                merged.push_back(std::move(combined));
            }
            ++a;
            ++b;
        }
    }
    Monomial m;
    m.entries_ = std::move(merged);
    return m;
}

std::string Monomial::str() const {
    if (entries_.empty()) return "1";
    std::string out;
    for (const auto& [name, exp] : entries_) {
        if (!out.empty()) out += "*";
        out += name;
        if (exp != 1) out += "^" + std::to_string(exp);
    }
    return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    const std::size_t n = std::min(ea.size(), eb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (ea[i].first != eb[i].first) return ea[i].first < eb[i].first;
        if (ea[i].second != eb[i].second) return ea[i].second > eb[i].second;
    }
    return ea.size() > eb.size();
}

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(const std::string& name) {
    return monomial(Monomial::variable(name), Rational(1));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& coeff) {
    Polynomial p;
    if (!coeff.is_zero()) p.terms_.emplace(m, coeff);
    return p;
}

int Polynomial::degree() const {
    int d = 0;
    bool first = true;
    for (const auto& [m, _] : terms_) {
        if (first || m.degree() > d) d = m.degree();
        first = false;
    }
    return d;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant())
        throw ContractViolation("Polynomial: " + str() + " is not constant");
    return terms_.begin()->second;
}

std::vector<std::string> Polynomial::variables() const {
    std::vector<std::string> vars;
    for (const auto& [m, _] : terms_)
        for (const auto& [name, e] : m.entries()) vars.push_back(name);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(ma.merged_with(mb), ca * cb);
    return out;
}

Polynomial Polynomial::pow(long long e) const {
    if (e < 0) throw ContractViolation("Polynomial: negative power " + std::to_string(e));
    Polynomial result(Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial p;
    if (c.is_zero()) return p;
    for (const auto& [m, coeff] : terms_) p.terms_.emplace(m, coeff * c);
    return p;
}

Rational Polynomial::eval(const std::map<std::string, Rational>& assignment) const {
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        Rational value = c;
        for (const auto& [name, exp] : m.entries()) {
            auto it = assignment.find(name);
            if (it == assignment.end())
                throw ContractViolation("Polynomial::eval: variable '" + name +
                                        "' missing from assignment");
            if (exp < 0 && it->second.is_zero())
                throw ContractViolation("Polynomial::eval: q = 0 meets a negative exponent");
            value *= it->second.pow(exp);
        }
        sum += value;
    }
    return sum;
}

Polynomial Polynomial::subst(const std::map<std::string, Polynomial>& replacements) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Polynomial term(c);
        for (const auto& [name, exp] : m.entries()) {
            auto it = replacements.find(name);
            if (it == replacements.end()) {
                term *= Polynomial::monomial(Monomial::variable(name, exp), Rational(1));
            } else if (exp >= 0) {
                term *= it->second.pow(exp);
            } else {
                if (!it->second.is_constant() || it->second.is_zero())
                    throw ContractViolation(
                        "Polynomial::subst: negative exponent on '" + name +
                        "' requires a nonzero constant replacement");
                term = term.scaled(it->second.constant_value().pow(exp));
            }
        }
        out += term;
    }
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c.is_negative();
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const Rational a = c.abs();
        if (m.is_unit()) {
            out += a.str();
        } else if (a == Rational(1)) {
            out += m.str();
        } else {
            out += a.str() + "*" + m.str();
        }
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace idforge
