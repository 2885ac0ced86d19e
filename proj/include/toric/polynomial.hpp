#ifndef toric_polynomial_hpp
#define toric_polynomial_hpp

/// Exact sparse multivariate polynomials over the rationals.
///
/// Variables are x1..xn for a fixed variable count per polynomial; exponent
/// vectors are dense (length n).  Terms are kept in graded-lexicographic
/// order, largest first, so iteration order doubles as the canonical
/// rendering order and begin() is the leading term.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "toric/errors.hpp"

namespace toric {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Monomial = std::vector<uint32_t>; // exponent of x_{i+1} at index i

/// Graded-lexicographic order, greatest monomial first: higher total degree
/// wins; ties break toward the vector that is lexicographically larger, so
/// x1 precedes x2 among the degree-one monomials.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class SparsePolynomial {
public:
    SparsePolynomial() = default;
    explicit SparsePolynomial(int nvars);

    static SparsePolynomial constant(int nvars, const Rational& c);
    static SparsePolynomial variable(int nvars, int var);
    /// x_i - x_j (i != j, both in 1..nvars).
    static SparsePolynomial linear_difference(int nvars, int i, int j);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int total_degree() const; // 0 for the zero polynomial
    size_t term_count() const { return terms_.size(); }

    const std::map<Monomial, Rational, GradedLexGreater>& terms() const { return terms_; }

    /// Adds c * monomial, erasing the term if the coefficient cancels.
    void add_term(const Monomial& m, const Rational& c);

    bool operator==(const SparsePolynomial& other) const;
    bool operator!=(const SparsePolynomial& other) const { return !(*this == other); }

    /// Deterministic rendering, e.g. "x1^2*x3 - 2*x2 + 1/2".
    std::string to_string() const;

private:
    int nvars_ = 0;
    std::map<Monomial, Rational, GradedLexGreater> terms_;
};

SparsePolynomial poly_add(const SparsePolynomial& a, const SparsePolynomial& b);
SparsePolynomial poly_sub(const SparsePolynomial& a, const SparsePolynomial& b);
SparsePolynomial poly_mul(const SparsePolynomial& a, const SparsePolynomial& b);
SparsePolynomial poly_scale(const SparsePolynomial& a, const Rational& c);
SparsePolynomial poly_neg(const SparsePolynomial& a);

/// Substitutes x_i := x_j (exponents of x_i fold onto x_j).
SparsePolynomial poly_substitute_equal(const SparsePolynomial& a, int i, int j);

/// Exact division by the linear factor (x_i - x_j).  Returns the quotient
/// when the division is exact (equivalently, when the polynomial vanishes
/// under x_i := x_j), and nullopt otherwise.
std::optional<SparsePolynomial> poly_div_linear(const SparsePolynomial& a, int i, int j);

/// Evaluates at a point modulo a prime.  Coefficients are reduced mod p;
/// throws internal_error if a coefficient denominator is divisible by p.
uint64_t poly_eval_mod(const SparsePolynomial& a, const std::vector<uint64_t>& point,
                       uint64_t prime);

} // namespace toric

#endif
