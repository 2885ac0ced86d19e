#include "toric/ratfun.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace toric {

RationalFunction::RationalFunction(SparsePolynomial numerator,
                                   std::vector<LinearFactor> factors)
    : numerator_(std::move(numerator)) {
    bool negate = false;
    for (auto& f : factors) {
        if (f.i == f.j) throw input_error("linear factor needs distinct variables");
        if (f.i < 1 || f.j < 1 || f.i > numerator_.nvars() || f.j > numerator_.nvars()) {
            throw input_error("linear factor variable out of range");
        }
        if (f.i > f.j) {
            std::swap(f.i, f.j);
            negate = !negate;
        }
    }
    if (negate) numerator_ = poly_neg(numerator_);
    std::sort(factors.begin(), factors.end());
    denominator_ = std::move(factors);

    if (numerator_.is_zero()) {
        denominator_.clear();
        return;
    }
    // Cancel every denominator factor that exactly divides the numerator.
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t k = 0; k < denominator_.size(); ++k) {
            auto quotient = poly_div_linear(numerator_, denominator_[k].i, denominator_[k].j);
            if (quotient) {
                numerator_ = std::move(*quotient);
                denominator_.erase(denominator_.begin() + k);
                progress = true;
                break;
            }
        }
        if (numerator_.is_zero()) {
            // Cannot happen: dividing a nonzero polynomial exactly by a
            // nonzero factor never yields zero; keep as a guard.
            denominator_.clear();
            return;
        }
        if (numerator_.is_constant()) break;
    }
}

RationalFunction RationalFunction::zero(int nvars) {
    return RationalFunction(SparsePolynomial(nvars), {});
}

RationalFunction RationalFunction::constant(int nvars, const Rational& c) {
    return RationalFunction(SparsePolynomial::constant(nvars, c), {});
}

namespace {

using FactorCount = std::map<LinearFactor, int>;

FactorCount count_factors(const std::vector<LinearFactor>& factors) {
    FactorCount out;
    for (const auto& f : factors) ++out[f];
    return out;
}

SparsePolynomial multiply_factors(int nvars, const FactorCount& counts) {
    SparsePolynomial out = SparsePolynomial::constant(nvars, 1);
    for (const auto& [f, mult] : counts) {
        SparsePolynomial lin = SparsePolynomial::linear_difference(nvars, f.i, f.j);
        for (int k = 0; k < mult; ++k) out = poly_mul(out, lin);
    }
    return out;
}

// Adds a batch of terms over their least common denominator.
RationalFunction sum_over_common_denominator(int nvars,
                                             const std::vector<const RationalFunction*>& terms) {
    FactorCount common;
    for (const RationalFunction* t : terms) {
        FactorCount mine = count_factors(t->denominator());
        for (const auto& [f, mult] : mine) {
            common[f] = std::max(common[f], mult);
        }
    }

    SparsePolynomial numerator(nvars);
    for (const RationalFunction* t : terms) {
        if (t->is_zero()) continue;
        FactorCount mine = count_factors(t->denominator());
        FactorCount cofactor = common;
        for (const auto& [f, mult] : mine) {
            cofactor[f] -= mult;
            if (cofactor[f] < 0) throw internal_error("common denominator undercounts a factor");
        }
        numerator =
            poly_add(numerator, poly_mul(t->numerator(), multiply_factors(nvars, cofactor)));
    }

    std::vector<LinearFactor> denominator;
    for (const auto& [f, mult] : common) {
        for (int k = 0; k < mult; ++k) denominator.push_back(f);
    }
    return RationalFunction(std::move(numerator), std::move(denominator));
}

} // namespace

RationalFunction rf_sum(const std::vector<RationalFunction>& terms) {
    if (terms.empty()) throw input_error("rf_sum needs at least one term");
    const int nvars = terms.front().nvars();
    for (const auto& t : terms) {
        if (t.nvars() != nvars) throw input_error("rational function arity mismatch");
    }

    // Reduce pairwise rather than over one global denominator: normalizing
    // after every pair keeps the intermediate numerators small when a long
    // sum telescopes, which the closed-form identities routinely produce.
    std::vector<RationalFunction> layer = terms;
    while (layer.size() > 1) {
        std::vector<RationalFunction> next;
        next.reserve(layer.size() / 2 + 1);
        for (size_t k = 0; k + 1 < layer.size(); k += 2) {
            next.push_back(sum_over_common_denominator(nvars, {&layer[k], &layer[k + 1]}));
        }
        if (layer.size() % 2 == 1) next.push_back(std::move(layer.back()));
        layer = std::move(next);
    }
    return std::move(layer.front());
}

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) {
    return rf_sum({a, b});
}

RationalFunction rf_scale(const RationalFunction& a, const Rational& c) {
    if (c == 0) return RationalFunction::zero(a.nvars());
    return RationalFunction(poly_scale(a.numerator(), c), a.denominator());
}

RationalFunction rf_neg(const RationalFunction& a) { return rf_scale(a, -1); }

RationalFunction rf_mul_factor_inverse(const RationalFunction& a, int i, int j) {
    std::vector<LinearFactor> factors = a.denominator();
    factors.push_back(LinearFactor{i, j});
    return RationalFunction(a.numerator(), std::move(factors));
}

std::optional<uint64_t> rf_eval_mod(const RationalFunction& a,
                                    const std::vector<uint64_t>& point,
                                    uint64_t prime) {
    if (static_cast<int>(point.size()) != a.nvars()) {
        throw input_error("evaluation point arity mismatch");
    }
    uint64_t den = 1;
    for (const auto& f : a.denominator()) {
        uint64_t xi = point[f.i - 1] % prime;
        uint64_t xj = point[f.j - 1] % prime;
        uint64_t diff = (xi + prime - xj) % prime;
        if (diff == 0) return std::nullopt;
        den = static_cast<uint64_t>((static_cast<__uint128_t>(den) * diff) % prime);
    }
    uint64_t num = poly_eval_mod(a.numerator(), point, prime);
    // den^(p-2) is den^{-1} mod p for prime p
    uint64_t inv = 1, base = den, exp = prime - 2;
    while (exp) {
        if (exp & 1) inv = static_cast<uint64_t>((static_cast<__uint128_t>(inv) * base) % prime);
        base = static_cast<uint64_t>((static_cast<__uint128_t>(base) * base) % prime);
        exp >>= 1;
    }
    return static_cast<uint64_t>((static_cast<__uint128_t>(num) * inv) % prime);
}

bool rf_equal(const RationalFunction& a, const RationalFunction& b,
              uint64_t seed, int samples) {
    if (a.nvars() != b.nvars()) throw input_error("rational function arity mismatch");

    // Randomized pre-check: agreement at sample points is necessary for
    // equality and, by Schwartz-Zippel over a 61-bit field, near-sufficient.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint64_t> draw(1, kEvalPrime - 1);
    int verdicts = 0;
    bool sampled_equal = true;
    for (int s = 0; s < samples; ++s) {
        std::vector<uint64_t> point(a.nvars());
        for (auto& x : point) x = draw(rng);
        auto va = rf_eval_mod(a, point);
        auto vb = rf_eval_mod(b, point);
        if (!va || !vb) continue; // pole of a stored representation: skip point
        ++verdicts;
        if (*va != *vb) {
            sampled_equal = false;
            break;
        }
    }

    bool exact = a.numerator() == b.numerator() && a.denominator() == b.denominator();
    if (verdicts > 0 && sampled_equal != exact) {
        throw internal_error("randomized equality pre-check disagrees with exact check");
    }
    return exact;
}

std::string rf_to_string(const RationalFunction& a) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    if (a.numerator().term_count() > 1) {
        out << "(" << a.numerator().to_string() << ")";
    } else {
        out << a.numerator().to_string();
    }
    if (a.denominator().empty()) return out.str();
    out << " / (";
    FactorCount counts = count_factors(a.denominator());
    for (const auto& [f, mult] : counts) {
        out << "(x" << f.i << "-x" << f.j << ")";
        if (mult > 1) out << "^" << mult;
    }
    out << ")";
    return out.str();
}

} // namespace toric
