/// @file test_polynomial.cpp
/// @brief Exact sparse polynomials: ordering, arithmetic, division by linear
/// factors, and modular evaluation.

#include <doctest.h>

#include "toric/errors.hpp"
#include "toric/polynomial.hpp"

using namespace toric;

namespace {

SparsePolynomial x(int nvars, int var) { return SparsePolynomial::variable(nvars, var); }

} // namespace

TEST_CASE("construction and basic queries") {
    const auto zero = SparsePolynomial(3);
    CHECK(zero.is_zero());
    CHECK(zero.total_degree() == 0);

    const auto c = SparsePolynomial::constant(3, Rational(-7, 2));
    CHECK(c.is_constant());
    CHECK(c.term_count() == 1);
    CHECK(c.to_string() == "-7/2");

    CHECK(SparsePolynomial::constant(2, 0).is_zero());
    CHECK_THROWS_AS(SparsePolynomial::variable(2, 3), input_error);
    CHECK_THROWS_AS(SparsePolynomial::linear_difference(3, 2, 2), input_error);
}

TEST_CASE("graded-lex ordering drives rendering") {
    const int n = 3;
    auto p = poly_add(poly_mul(x(n, 1), x(n, 1)), x(n, 3)); // x1^2 + x3
    p = poly_add(p, SparsePolynomial::constant(n, 5));
    CHECK(p.to_string() == "x1^2 + x3 + 5");

    // Degree first, then lexicographic: x1*x2 beats x3^2? No: same degree 2,
    // x1*x2 has the larger exponent vector lexicographically.
    auto q = poly_add(poly_mul(x(n, 1), x(n, 2)), poly_mul(x(n, 3), x(n, 3)));
    CHECK(q.to_string() == "x1*x2 + x3^2");
}

TEST_CASE("arithmetic identities") {
    const int n = 4;
    const auto a = SparsePolynomial::linear_difference(n, 1, 2);
    const auto b = SparsePolynomial::linear_difference(n, 3, 4);

    CHECK(poly_sub(a, a).is_zero());
    CHECK(poly_add(a, poly_neg(a)).is_zero());
    CHECK(poly_mul(a, b) == poly_mul(b, a));
    CHECK(poly_mul(a, poly_add(b, b)) == poly_scale(poly_mul(a, b), 2));
    CHECK(poly_mul(a, SparsePolynomial(n)).is_zero());

    // (x1 - x2)(x1 + x2) = x1^2 - x2^2
    const auto sum = poly_add(x(n, 1), x(n, 2));
    const auto expect = poly_sub(poly_mul(x(n, 1), x(n, 1)), poly_mul(x(n, 2), x(n, 2)));
    CHECK(poly_mul(a, sum) == expect);
}

TEST_CASE("substitution folds exponents") {
    const int n = 3;
    const auto diff = SparsePolynomial::linear_difference(n, 1, 2);
    CHECK(poly_substitute_equal(diff, 1, 2).is_zero());
    CHECK_FALSE(poly_substitute_equal(diff, 1, 3).is_zero());

    const auto prod = poly_mul(x(n, 1), x(n, 2)); // x1*x2 -> x2^2
    CHECK(poly_substitute_equal(prod, 1, 2) == poly_mul(x(n, 2), x(n, 2)));
}

TEST_CASE("exact division by a linear difference") {
    const int n = 3;
    const auto a = SparsePolynomial::linear_difference(n, 1, 2);
    const auto b = SparsePolynomial::linear_difference(n, 2, 3);
    const auto product = poly_mul(a, b);

    const auto quotient = poly_div_linear(product, 1, 2);
    REQUIRE(quotient.has_value());
    CHECK(*quotient == b);

    CHECK_FALSE(poly_div_linear(product, 1, 3).has_value());
    CHECK(poly_div_linear(SparsePolynomial(n), 1, 2)->is_zero());

    // x1^2 - x2^2 = (x1 - x2)(x1 + x2)
    const auto squares = poly_sub(poly_mul(x(n, 1), x(n, 1)), poly_mul(x(n, 2), x(n, 2)));
    CHECK(*poly_div_linear(squares, 1, 2) == poly_add(x(n, 1), x(n, 2)));
}

TEST_CASE("modular evaluation") {
    const int n = 2;
    const uint64_t p = 1000003;
    const auto f = poly_add(poly_mul(x(n, 1), x(n, 2)), SparsePolynomial::constant(n, 3));
    CHECK(poly_eval_mod(f, {5, 7}, p) == 38);

    const auto half = SparsePolynomial::constant(n, Rational(1, 2));
    // 1/2 mod p is the inverse of 2.
    CHECK((2 * poly_eval_mod(half, {0, 0}, p)) % p == 1);
    CHECK_THROWS_AS(poly_eval_mod(half, {0, 0}, 2), internal_error);
}

TEST_CASE("add_term erases cancelled coefficients") {
    SparsePolynomial f(2);
    f.add_term({1, 0}, 2);
    f.add_term({1, 0}, -2);
    CHECK(f.is_zero());
    f.add_term({0, 1}, Rational(1, 3));
    CHECK(f.term_count() == 1);
}
