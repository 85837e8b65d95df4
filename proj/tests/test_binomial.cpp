#include <doctest.h>

#include <random>

#include "idforge/binomial.hpp"
#include "idforge/errors.hpp"

using namespace idforge;

namespace {

Polynomial var(const std::string& name) { return Polynomial::variable(name); }

Polynomial random_sparse(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> term_count(1, 3);
    std::uniform_int_distribution<int> exp_dist(0, 2);
    std::uniform_int_distribution<int> coeff_dist(-4, 4);
    Polynomial p;
    const int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        std::vector<Monomial::Entry> entries;
        for (const char* name : {"x", "y", "z"}) {
            const int e = exp_dist(rng);
            if (e) entries.emplace_back(name, e);
        }
        p += Polynomial::monomial(Monomial::from_entries(entries), Rational(coeff_dist(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("falling factorial") {
    const Polynomial x = var("x"), z = var("z");
    CHECK(falling_factorial(x, 3) ==
          x.pow(3) - x.pow(2).scaled(Rational(3)) + x.scaled(Rational(2)));
    CHECK(falling_factorial(x * z - Polynomial(7), 0) == Polynomial(1));
    // (x+z)(x+z-1) expanded by hand.
    CHECK(falling_factorial(x + z, 2) ==
          x.pow(2) + (x * z).scaled(Rational(2)) + z.pow(2) - x - z);
}

TEST_CASE("binomial with polynomial upper argument") {
    const Polynomial x = var("x"), z = var("z");
    CHECK(binom_poly(x, 2) == (x.pow(2) - x).scaled(Rational(BigInt(1), BigInt(2))));
    CHECK(binom_poly(x + z.pow(2), -1).is_zero());
    CHECK(binom_poly(x + z, 1) == x + z);
    CHECK(binom_poly(x, 0) == Polynomial(1));
}

TEST_CASE("pascal recurrence as a polynomial identity") {
    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 50; ++rep) {
        const Polynomial p = random_sparse(rng);
        for (int k = 0; k <= 6; ++k)
            CHECK(binom_poly(p, k) ==
                  binom_poly(p - Polynomial(1), k) + binom_poly(p - Polynomial(1), k - 1));
    }
}

TEST_CASE("integer binomials and the negative upper index identity") {
    CHECK(binom_int(5, 2) == Rational(10));
    CHECK(binom_int(-1, 3) == Rational(-1));
    CHECK(binom_int(0, 0) == Rational(1));
    CHECK(binom_int(3, 5) == Rational(0));
    CHECK(binom_int(4, -2) == Rational(0));
    for (long long a = -5; a <= 5; ++a)
        for (long long k = 0; k <= 6; ++k) {
            const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
            CHECK(binom_int(-a, k) == sign * binom_int(a + k - 1, k));
        }
}

TEST_CASE("chu-vandermonde convolution as kernel smoke test") {
    const Polynomial x = var("x"), y = var("y");
    for (int n = 0; n <= 5; ++n) {
        Polynomial sum;
        for (int k = 0; k <= n; ++k) sum += binom_poly(x, k) * binom_poly(y, n - k);
        CHECK(sum == binom_poly(x + y, n));
    }
}

TEST_CASE("multinomial coefficients") {
    const Polynomial x = var("x");
    CHECK(multinomial_poly(x, VecIndex{1, 1}) == x.pow(2) - x);
    CHECK(multinomial_poly(x.pow(3), VecIndex{2, -1}).is_zero());
    CHECK(multinomial_poly(Polynomial(3), VecIndex{1, 1}) == Polynomial(6));
    CHECK(multinomial_int(3, VecIndex{1, 1}) == Rational(6));
    CHECK(multinomial_int(-1, VecIndex{0, 0}) == Rational(1));  // empty falling product

    // m = 1 coincides with the scalar binomial.
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 30; ++rep) {
        const Polynomial p = random_sparse(rng);
        for (int k = 0; k <= 4; ++k)
            CHECK(multinomial_poly(p, VecIndex{k}) == binom_poly(p, k));
    }
}

TEST_CASE("componentwise vector binomial") {
    CHECK(vec_binom(VecIndex{2, 2}, VecIndex{1, 1}) == Rational(4));
    CHECK(vec_binom(VecIndex{2, 1}, VecIndex{0, 0}) == Rational(1));
    CHECK(vec_binom(VecIndex{1, 1}, VecIndex{2, 0}) == Rational(0));
    CHECK_THROWS_AS(vec_binom(VecIndex{1}, VecIndex{1, 0}), ContractViolation);
}

TEST_CASE("vector monomials and dot products") {
    const std::vector<std::string> zv{"z1", "z2"};
    CHECK(vec_monomial(zv, VecIndex{1, 2}) ==
          Polynomial::monomial(Monomial::from_entries({{"z1", 1}, {"z2", 2}}), Rational(1)));
    CHECK(vec_monomial(zv, VecIndex{0, 0}) == Polynomial(1));
    CHECK(vec_monomial({"z1"}, VecIndex{3}) ==
          Polynomial::monomial(Monomial::variable("z1", 3), Rational(1)));
    CHECK_THROWS_AS(vec_monomial(zv, VecIndex{-1, 0}), ContractViolation);

    CHECK(dot_product(zv, VecIndex{1, 2}) == var("z1") + var("z2").scaled(Rational(2)));
    CHECK(dot_product(zv, VecIndex{0, 0}).is_zero());
    CHECK(dot_product({"z1"}, VecIndex{4}) == var("z1").scaled(Rational(4)));
    CHECK_THROWS_AS(dot_product(zv, VecIndex{1}), ContractViolation);
}

TEST_CASE("integer vector powers use the 0^0 = 1 convention") {
    CHECK(int_vec_pow(VecIndex{0, 2}, VecIndex{0, 3}) == BigInt(8));
    CHECK(int_vec_pow(VecIndex{0, 0}, VecIndex{0, 0}) == BigInt(1));
    CHECK(int_vec_pow(VecIndex{3, 2}, VecIndex{2, 1}) == BigInt(18));
}

TEST_CASE("q-pochhammer products") {
    const Polynomial a = var("a"), x = var("x"), q = var("q");
    CHECK(q_pochhammer(a, 0) == Polynomial(1));
    CHECK(q_pochhammer(a, 2) == Polynomial(1) - a - a * q + a.pow(2) * q);
    // (-x q^2; q)_1 = 1 + x q^2.
    CHECK(q_pochhammer(-(x * q_power(2)), 1) == Polynomial(1) + x * q_power(2));
    CHECK_THROWS_AS(q_pochhammer(a, -1), ContractViolation);
}

TEST_CASE("q powers") {
    CHECK(q_power(0) == Polynomial(1));
    CHECK(q_power(3) == Polynomial::monomial(Monomial::variable("q", 3), Rational(1)));
    CHECK(q_power(-2) == Polynomial::monomial(Monomial::variable("q", -2), Rational(1)));
}

TEST_CASE("gaussian binomials") {
    const Polynomial q = var("q");
    // Brute-force expansion of (q^3;q)_2 / (q;q)_2.
    CHECK(gauss_binom(4, 2) ==
          Polynomial(1) + q + q.pow(2).scaled(Rational(2)) + q.pow(3) + q.pow(4));
    CHECK(gauss_binom(7, -1).is_zero());
    CHECK(gauss_binom(5, 0) == Polynomial(1));
    CHECK(gauss_binom(2, 5).is_zero());
    // Negative upper index stays exact as a Laurent polynomial:
    // [-2 1] = (1 - q^-2)/(1 - q) = -q^-1 - q^-2.
    CHECK(gauss_binom(-2, 1) ==
          Polynomial::monomial(Monomial::variable("q", -1), Rational(-1)) +
              Polynomial::monomial(Monomial::variable("q", -2), Rational(-1)));
}

TEST_CASE("q-pascal recurrence") {
    for (long long alpha = 0; alpha <= 6; ++alpha)
        for (long long k = 0; k <= 5; ++k)
            CHECK(gauss_binom(alpha, k) ==
                  gauss_binom(alpha - 1, k - 1) + q_power(k) * gauss_binom(alpha - 1, k));
}

TEST_CASE("gaussian binomials at q = 1 reduce to integer binomials") {
    for (long long alpha = -4; alpha <= 6; ++alpha)
        for (long long k = 0; k <= 5; ++k) {
            const Polynomial g = gauss_binom(alpha, k);
            const Rational at_one = g.is_zero() ? Rational(0) : g.eval({{"q", Rational(1)}});
            CHECK(at_one == binom_int(alpha, k));
        }
}

TEST_CASE("exact laurent division rejects nonzero remainders") {
    const Polynomial q = var("q");
    CHECK(laurent_div_exact_q(q.pow(2) - Polynomial(1), q - Polynomial(1)) ==
          q + Polynomial(1));
    CHECK_THROWS_AS(laurent_div_exact_q(q.pow(2) + Polynomial(1), q - Polynomial(1)),
                    ContractViolation);
    CHECK_THROWS_AS(laurent_div_exact_q(q + var("x"), q), ContractViolation);
    CHECK_THROWS_AS(laurent_div_exact_q(q, Polynomial()), ContractViolation);
    // Laurent shifts divide exactly.
    CHECK(laurent_div_exact_q(q_power(-1) - q_power(-3), q_power(-3)) ==
          q.pow(2) - Polynomial(1));
}

TEST_CASE("factorials") {
    CHECK(factorial(0) == BigInt(1));
    CHECK(factorial(6) == BigInt(720));
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(vec_factorial(VecIndex{2, 3}) == BigInt(12));
    CHECK_THROWS_AS(factorial(-1), ContractViolation);
}
