#include "toric/greene.hpp"

#include <algorithm>
#include <set>

#include "toric/errors.hpp"
#include "toric/toric_poset.hpp"

namespace toric {

namespace {

void shuffle_step(const std::vector<int>& a, size_t ia, const std::vector<int>& b, size_t ib,
                  std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    if (ia == a.size() && ib == b.size()) {
        out.push_back(prefix);
        return;
    }
    if (ia < a.size()) {
        prefix.push_back(a[ia]);
        shuffle_step(a, ia + 1, b, ib, prefix, out);
        prefix.pop_back();
    }
    if (ib < b.size()) {
        prefix.push_back(b[ib]);
        shuffle_step(a, ia, b, ib + 1, prefix, out);
        prefix.pop_back();
    }
}

/// Denominator factors of the cyclic product over a word: consecutive pairs
/// plus the closing pair.
std::vector<LinearFactor> cyclic_factors(const std::vector<int>& word) {
    std::vector<LinearFactor> factors;
    factors.reserve(word.size());
    for (size_t k = 0; k + 1 < word.size(); ++k) {
        factors.push_back({word[k], word[k + 1]});
    }
    factors.push_back({word.back(), word.front()});
    return factors;
}

RationalFunction inverse_of_factors(int nvars, std::vector<LinearFactor> factors) {
    return RationalFunction(SparsePolynomial::constant(nvars, 1), std::move(factors));
}

void require_distinct_labels(const std::vector<int>& labels, int nvars) {
    std::set<int> seen;
    for (int x : labels) {
        if (x < 1 || x > nvars) {
            throw input_error("label out of range");
        }
        if (!seen.insert(x).second) {
            throw input_error("labels must be distinct");
        }
    }
}

} // namespace

std::vector<std::vector<int>> shuffle(const std::vector<int>& a, const std::vector<int>& b) {
    std::set<int> seen(a.begin(), a.end());
    if (seen.size() != a.size()) {
        throw input_error("shuffle: left sequence has repeated labels");
    }
    for (int x : b) {
        if (!seen.insert(x).second) {
            throw input_error("shuffle: sequences must be disjoint");
        }
    }
    if (seen.size() != a.size() + b.size()) {
        throw input_error("shuffle: right sequence has repeated labels");
    }
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    prefix.reserve(a.size() + b.size());
    shuffle_step(a, 0, b, 0, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

RationalFunction psi_poset(const Quiver& q) {
    const int n = q.vertex_count();
    if (n < 2) {
        throw input_error("psi_poset requires at least two vertices");
    }
    std::vector<RationalFunction> terms;
    for (const LinearExtension& w : linear_extensions(q)) {
        std::vector<LinearFactor> factors;
        factors.reserve(n - 1);
        for (int k = 0; k + 1 < n; ++k) {
            factors.push_back({w[k], w[k + 1]});
        }
        terms.push_back(inverse_of_factors(n, std::move(factors)));
    }
    return rf_sum(terms);
}

RationalFunction psi_tor_word(const ToricTotalOrder& w) {
    if (w.word.size() < 2) {
        throw input_error("psi_tor_word requires at least two vertices");
    }
    return inverse_of_factors(static_cast<int>(w.word.size()), cyclic_factors(w.word));
}

RationalFunction psi_tor(const Quiver& q, ExtensionMethod method) {
    const int n = q.vertex_count();
    if (n < 2) {
        throw input_error("psi_tor requires at least two vertices");
    }
    std::vector<RationalFunction> terms;
    for (const ToricTotalOrder& w : ltor(q, method)) {
        terms.push_back(psi_tor_word(w));
    }
    return rf_sum(terms);
}

RationalFunction greene_strongly_planar(const Quiver& q,
                                        const std::vector<BoundedRegion>& regions) {
    const int n = q.vertex_count();
    if (n < 2) {
        throw input_error("greene_strongly_planar requires at least two vertices");
    }
    SparsePolynomial numerator = SparsePolynomial::constant(n, 1);
    for (const BoundedRegion& region : regions) {
        if (region.min_v == region.max_v ||
            std::find(region.delta.begin(), region.delta.end(), region.min_v) ==
                region.delta.end() ||
            std::find(region.delta.begin(), region.delta.end(), region.max_v) ==
                region.delta.end()) {
            throw input_error("bounded region lacks a distinct interior min/max");
        }
        numerator = poly_mul(numerator,
                             SparsePolynomial::linear_difference(n, region.min_v, region.max_v));
    }
    std::vector<LinearFactor> covers;
    covers.reserve(q.arcs().size());
    for (const Arc& arc : q.arcs()) {
        covers.push_back({arc.first, arc.second});
    }
    return RationalFunction(std::move(numerator), std::move(covers));
}

RationalFunction psi_tor_bounded(const Quiver& p, int zero, int one) {
    const std::vector<int> srcs = sources(p);
    const std::vector<int> snks = sinks(p);
    if (srcs.size() != 1 || srcs.front() != zero) {
        throw input_error("bounded poset must have the designated bottom as unique source");
    }
    if (snks.size() != 1 || snks.front() != one) {
        throw input_error("bounded poset must have the designated top as unique sink");
    }
    return rf_mul_factor_inverse(psi_poset(p), one, zero);
}

DoubleChainLabels double_chain_labels(int k, int j) {
    if (k < 0 || j < 0) {
        throw input_error("chain lengths must be nonnegative");
    }
    DoubleChainLabels labels;
    labels.k = k;
    labels.j = j;
    labels.bottom = 1;
    labels.top = k + j + 2;
    for (int i = 1; i <= k; ++i) {
        labels.b.push_back(1 + i);
    }
    for (int s = 1; s <= j; ++s) {
        labels.c.push_back(1 + k + s);
    }
    return labels;
}

Quiver double_chain_quiver(int k, int j) {
    const DoubleChainLabels labels = double_chain_labels(k, j);
    std::set<Arc> arcs;
    auto add_chain = [&](const std::vector<int>& chain) {
        int prev = labels.bottom;
        for (int v : chain) {
            arcs.insert({prev, v});
            prev = v;
        }
        arcs.insert({prev, labels.top});
    };
    add_chain(labels.b);
    add_chain(labels.c);
    arcs.insert({labels.bottom, labels.top});
    return Quiver(labels.top, std::vector<Arc>(arcs.begin(), arcs.end()));
}

RationalFunction kk_closed_form(const std::vector<int>& b, const std::vector<int>& c, int zero,
                                int one, int nvars) {
    std::vector<int> all = {zero, one};
    all.insert(all.end(), b.begin(), b.end());
    all.insert(all.end(), c.begin(), c.end());
    require_distinct_labels(all, nvars);

    const int k = static_cast<int>(b.size());
    std::vector<LinearFactor> factors;
    int prev = zero;
    for (int r = 0; r <= k; ++r) {
        const int next = r < k ? b[r] : one;
        factors.push_back({next, prev}); // (x_{b_{r+1}} - x_{b_r})
        prev = next;
    }
    prev = zero;
    for (size_t s = 0; s <= c.size(); ++s) {
        const int next = s < c.size() ? c[s] : one;
        factors.push_back({prev, next}); // (x_{c_s} - x_{c_{s+1}})
        prev = next;
    }
    const Rational sign = (k % 2 == 0) ? 1 : -1;
    return RationalFunction(SparsePolynomial::constant(nvars, sign), std::move(factors));
}

RationalFunction kk_closed_form(int k, int j) {
    const DoubleChainLabels labels = double_chain_labels(k, j);
    return kk_closed_form(labels.b, labels.c, labels.bottom, labels.top, labels.top);
}

KKReport verify_kk(int k, int j) {
    const DoubleChainLabels labels = double_chain_labels(k, j);

    KKReport report;
    report.k = k;
    report.j = j;

    std::vector<RationalFunction> terms;
    for (const std::vector<int>& a : shuffle(labels.b, labels.c)) {
        std::vector<int> word = {labels.top, labels.bottom};
        word.insert(word.end(), a.begin(), a.end());
        terms.push_back(psi_tor_word(cyclic_canonical(word)));
    }
    report.lhs = rf_sum(terms);

    std::vector<int> rhs_word = {labels.top};
    rhs_word.insert(rhs_word.end(), labels.b.rbegin(), labels.b.rend());
    rhs_word.push_back(labels.bottom);
    rhs_word.insert(rhs_word.end(), labels.c.begin(), labels.c.end());
    report.rhs =
        rf_scale(psi_tor_word(cyclic_canonical(rhs_word)), (k % 2 == 0) ? Rational(1) : Rational(-1));

    report.closed = kk_closed_form(k, j);
    report.quiver_psi = psi_tor(double_chain_quiver(k, j));
    report.pass = rf_equal(report.lhs, report.rhs) && rf_equal(report.lhs, report.closed) &&
                  rf_equal(report.lhs, report.quiver_psi);
    return report;
}

ShuffleVanishingReport verify_shuffle_vanishing(const std::vector<int>& a,
                                                const std::vector<int>& b, int pivot) {
    if (a.empty() || b.empty()) {
        throw input_error("shuffle vanishing needs two nonempty sequences");
    }
    const int n = static_cast<int>(a.size() + b.size()) + 1;
    std::vector<int> all = {pivot};
    all.insert(all.end(), a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    require_distinct_labels(all, n);

    ShuffleVanishingReport report;
    report.a = a;
    report.b = b;
    report.pivot = pivot;

    std::vector<RationalFunction> terms;
    for (const std::vector<int>& c : shuffle(a, b)) {
        std::vector<int> word = {pivot};
        word.insert(word.end(), c.begin(), c.end());
        terms.push_back(psi_tor_word(cyclic_canonical(word)));
    }
    report.sum = rf_sum(terms);
    report.pass = report.sum.is_zero();
    return report;
}

CutVertexReport verify_cut_vertex_vanishing(const Quiver& q, ExtensionMethod method) {
    const Graph graph = q.underlying_graph();

    CutVertexReport report;
    report.cut_vertices = graph.cut_vertices();
    report.component_count = graph.component_count();
    const bool disconnected = report.component_count > 1 && q.vertex_count() >= 3;
    report.hypothesis_met = disconnected || !report.cut_vertices.empty();
    report.psi = psi_tor(q, method);
    report.is_zero = report.psi.is_zero();
    report.pass = !report.hypothesis_met || report.is_zero;
    return report;
}

DenominatorReport verify_denominator(const Quiver& q, ExtensionMethod method) {
    if (q.vertex_count() < 3) {
        throw input_error("denominator containment is asserted for three or more vertices");
    }

    DenominatorReport report;
    report.psi = psi_tor(q, method);

    std::set<Edge> denom;
    for (const LinearFactor& f : report.psi.denominator()) {
        denom.insert({f.i, f.j});
    }
    std::set<Edge> hasse;
    const Quiver hasse_quiver = toric_hasse(q);
    for (const Arc& arc : hasse_quiver.arcs()) {
        hasse.insert({std::min(arc.first, arc.second), std::max(arc.first, arc.second)});
    }
    report.denominator_pairs.assign(denom.begin(), denom.end());
    report.hasse_pairs.assign(hasse.begin(), hasse.end());
    report.pass = std::includes(hasse.begin(), hasse.end(), denom.begin(), denom.end());
    report.proper = report.pass && denom != hasse;
    return report;
}

} // namespace toric
