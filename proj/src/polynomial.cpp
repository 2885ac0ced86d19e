#include "toric/polynomial.hpp"

#include <numeric>
#include <sstream>

namespace toric {

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
    uint64_t da = std::accumulate(a.begin(), a.end(), uint64_t{0});
    uint64_t db = std::accumulate(b.begin(), b.end(), uint64_t{0});
    if (da != db) return da > db;
    return a > b; // lexicographically larger exponent vector first
}

SparsePolynomial::SparsePolynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw input_error("polynomial needs at least one variable");
}

SparsePolynomial SparsePolynomial::constant(int nvars, const Rational& c) {
    SparsePolynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(int nvars, int var) {
    if (var < 1 || var > nvars) throw input_error("variable index out of range");
    SparsePolynomial p(nvars);
    Monomial m(nvars, 0);
    m[var - 1] = 1;
    p.add_term(m, 1);
    return p;
}

SparsePolynomial SparsePolynomial::linear_difference(int nvars, int i, int j) {
    if (i == j) throw input_error("linear difference needs distinct variables");
    SparsePolynomial p = variable(nvars, i);
    Monomial m(nvars, 0);
    m[j - 1] = 1;
    p.add_term(m, -1);
    return p;
}

bool SparsePolynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree() == 0;
}

int SparsePolynomial::total_degree() const {
    if (terms_.empty()) return 0;
    // begin() is the graded-lex leading term, which has maximal degree
    const Monomial& lead = terms_.begin()->first;
    return static_cast<int>(std::accumulate(lead.begin(), lead.end(), uint64_t{0}));
}

void SparsePolynomial::add_term(const Monomial& m, const Rational& c) {
    if (static_cast<int>(m.size()) != nvars_) {
        throw input_error("monomial arity does not match variable count");
    }
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool SparsePolynomial::operator==(const SparsePolynomial& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
}

namespace {

std::string monomial_to_string(const Monomial& m) {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) out << "*";
        out << "x" << (i + 1);
        if (m[i] > 1) out << "^" << m[i];
        first = false;
    }
    return out.str();
}

std::string rational_to_string(const Rational& c) {
    std::ostringstream out;
    out << c;
    return out.str();
}

} // namespace

std::string SparsePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        Rational a = coeff;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string vars = monomial_to_string(mono);
        if (vars.empty()) {
            out << rational_to_string(a);
        } else {
            if (a != 1) out << rational_to_string(a) << "*";
            out << vars;
        }
        first = false;
    }
    return out.str();
}

namespace {

void check_same_arity(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.nvars() != b.nvars()) {
        throw input_error("polynomial arity mismatch");
    }
}

} // namespace

SparsePolynomial poly_add(const SparsePolynomial& a, const SparsePolynomial& b) {
    check_same_arity(a, b);
    SparsePolynomial out = a;
    for (const auto& [m, c] : b.terms()) out.add_term(m, c);
    return out;
}

SparsePolynomial poly_sub(const SparsePolynomial& a, const SparsePolynomial& b) {
    check_same_arity(a, b);
    SparsePolynomial out = a;
    for (const auto& [m, c] : b.terms()) out.add_term(m, -c);
    return out;
}

SparsePolynomial poly_mul(const SparsePolynomial& a, const SparsePolynomial& b) {
    check_same_arity(a, b);
    SparsePolynomial out(a.nvars());
    Monomial prod(a.nvars());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            for (int i = 0; i < a.nvars(); ++i) prod[i] = ma[i] + mb[i];
            out.add_term(prod, ca * cb);
        }
    }
    return out;
}

SparsePolynomial poly_scale(const SparsePolynomial& a, const Rational& c) {
    SparsePolynomial out(a.nvars());
    if (c == 0) return out;
    for (const auto& [m, coeff] : a.terms()) out.add_term(m, coeff * c);
    return out;
}

SparsePolynomial poly_neg(const SparsePolynomial& a) { return poly_scale(a, -1); }

SparsePolynomial poly_substitute_equal(const SparsePolynomial& a, int i, int j) {
    if (i < 1 || i > a.nvars() || j < 1 || j > a.nvars() || i == j) {
        throw input_error("bad variable indices for substitution");
    }
    SparsePolynomial out(a.nvars());
    for (const auto& [m, c] : a.terms()) {
        Monomial folded = m;
        folded[j - 1] += folded[i - 1];
        folded[i - 1] = 0;
        out.add_term(folded, c);
    }
    return out;
}

std::optional<SparsePolynomial> poly_div_linear(const SparsePolynomial& a, int i, int j) {
    if (i < 1 || i > a.nvars() || j < 1 || j > a.nvars() || i == j) {
        throw input_error("bad variable indices for linear division");
    }
    if (a.is_zero()) return SparsePolynomial(a.nvars());

    // View a as a polynomial in x_i with coefficients c_k free of x_i.
    uint32_t deg = 0;
    std::map<uint32_t, SparsePolynomial> coeff;
    for (const auto& [m, c] : a.terms()) {
        uint32_t k = m[i - 1];
        deg = std::max(deg, k);
        auto it = coeff.find(k);
        if (it == coeff.end()) it = coeff.emplace(k, SparsePolynomial(a.nvars())).first;
        Monomial rest = m;
        rest[i - 1] = 0;
        it->second.add_term(rest, c);
    }
    if (deg == 0) {
        // No x_i at all: divisible only if a == 0, handled above.
        return std::nullopt;
    }
    auto coeff_at = [&](uint32_t k) -> SparsePolynomial {
        auto it = coeff.find(k);
        return it == coeff.end() ? SparsePolynomial(a.nvars()) : it->second;
    };

    // Synthetic division by (x_i - x_j): q_{d-1} = c_d, q_{k-1} = c_k + x_j*q_k,
    // remainder c_0 + x_j*q_0.
    SparsePolynomial xj = SparsePolynomial::variable(a.nvars(), j);
    std::vector<SparsePolynomial> q(deg, SparsePolynomial(a.nvars()));
    q[deg - 1] = coeff_at(deg);
    for (uint32_t k = deg - 1; k >= 1; --k) {
        q[k - 1] = poly_add(coeff_at(k), poly_mul(xj, q[k]));
    }
    SparsePolynomial remainder = poly_add(coeff_at(0), poly_mul(xj, q[0]));
    if (!remainder.is_zero()) return std::nullopt;

    SparsePolynomial quotient(a.nvars());
    for (uint32_t k = 0; k < deg; ++k) {
        for (const auto& [m, c] : q[k].terms()) {
            Monomial full = m;
            full[i - 1] += k;
            quotient.add_term(full, c);
        }
    }
    return quotient;
}

namespace {

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t p) {
    uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) acc = mul_mod(acc, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

uint64_t integer_mod(const Integer& v, uint64_t p) {
    Integer r = v % Integer(p);
    if (r < 0) r += p;
    return static_cast<uint64_t>(r);
}

} // namespace

uint64_t poly_eval_mod(const SparsePolynomial& a, const std::vector<uint64_t>& point,
                       uint64_t prime) {
    if (static_cast<int>(point.size()) != a.nvars()) {
        throw input_error("evaluation point arity mismatch");
    }
    uint64_t acc = 0;
    for (const auto& [m, c] : a.terms()) {
        uint64_t num = integer_mod(boost::multiprecision::numerator(c), prime);
        uint64_t den = integer_mod(boost::multiprecision::denominator(c), prime);
        if (den == 0) {
            throw internal_error("coefficient denominator divisible by evaluation prime");
        }
        uint64_t term = mul_mod(num, pow_mod(den, prime - 2, prime), prime);
        for (int i = 0; i < a.nvars(); ++i) {
            if (m[i] != 0) term = mul_mod(term, pow_mod(point[i] % prime, m[i], prime), prime);
        }
        acc = (acc + term) % prime;
    }
    return acc;
}

} // namespace toric
