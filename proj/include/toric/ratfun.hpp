#ifndef toric_ratfun_hpp
#define toric_ratfun_hpp

/// Rational functions whose denominators are products of linear factors
/// (x_i - x_j).  The denominator is a multiset of factors with i < j; a
/// factor supplied as (j, i) is flipped and the sign folded into the
/// numerator.  Instances are always normalized: no denominator factor
/// divides the numerator, and the zero function has an empty denominator.
/// Normalized forms are unique, so structural equality is function equality.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/polynomial.hpp"

namespace toric {

/// Fixed 61-bit prime for randomized evaluation (2^61 - 1).
inline constexpr uint64_t kEvalPrime = 2305843009213693951ULL;

/// Default seed for the randomized equality pre-check.
inline constexpr uint64_t kDefaultEqualitySeed = 0x746f726963ULL;

struct LinearFactor {
    int i = 0;
    int j = 0; // invariant i < j after canonicalization
    auto operator<=>(const LinearFactor&) const = default;
};

class RationalFunction {
public:
    RationalFunction() = default;

    /// Builds numerator / prod(factors) and normalizes.  Factors given as
    /// (j, i) with j > i are canonicalized, negating the numerator once per
    /// flipped factor.
    RationalFunction(SparsePolynomial numerator, std::vector<LinearFactor> factors);

    static RationalFunction zero(int nvars);
    static RationalFunction constant(int nvars, const Rational& c);

    int nvars() const { return numerator_.nvars(); }
    bool is_zero() const { return numerator_.is_zero(); }
    const SparsePolynomial& numerator() const { return numerator_; }
    /// Sorted multiset of canonical factors.
    const std::vector<LinearFactor>& denominator() const { return denominator_; }

private:
    SparsePolynomial numerator_{1};
    std::vector<LinearFactor> denominator_;
};

/// Exact sum over a common denominator (multiset lcm), then normalization.
RationalFunction rf_sum(const std::vector<RationalFunction>& terms);
RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_scale(const RationalFunction& a, const Rational& c);
RationalFunction rf_neg(const RationalFunction& a);
RationalFunction rf_mul_factor_inverse(const RationalFunction& a, int i, int j);

/// Evaluates at a point mod prime; nullopt when a denominator factor
/// vanishes at the point (a pole of the stored representation).
std::optional<uint64_t> rf_eval_mod(const RationalFunction& a,
                                    const std::vector<uint64_t>& point,
                                    uint64_t prime = kEvalPrime);

/// Equality: runs the randomized modular pre-check (k sample points) and the
/// exact structural check, and throws internal_error if they disagree.
bool rf_equal(const RationalFunction& a, const RationalFunction& b,
              uint64_t seed = kDefaultEqualitySeed, int samples = 8);

/// Canonical rendering: numerator in graded-lex order (parenthesized when it
/// has several terms), then " / (" factors ")" with factors sorted and
/// repeated factors shown as powers.  Examples:
///   "-2 / ((x1-x2)(x1-x3)(x2-x4)(x3-x4))"
///   "1 / ((x1-x2))"
///   "0"
std::string rf_to_string(const RationalFunction& a);

} // namespace toric

#endif
