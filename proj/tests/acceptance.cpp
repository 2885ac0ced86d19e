/// @file acceptance.cpp
/// @brief Acceptance gate: fourteen numbered criteria, one pass/fail line
/// each, every exact identity checked with exact arithmetic and every
/// criterion held to a wall-clock budget.  Exit 0 iff all criteria pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <set>
#include <string>
#include <vector>

#include "toric/extensions.hpp"
#include "toric/fixtures.hpp"
#include "toric/greene.hpp"
#include "toric/ratfun.hpp"
#include "toric/verify.hpp"

namespace {

using namespace toric;

struct Outcome {
    bool pass = false;
    std::string note;
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    Outcome (*run)();
};

std::set<ToricTotalOrder> as_set(const std::vector<ToricTotalOrder>& words) {
    return {words.begin(), words.end()};
}

Outcome check_suite(const SuiteReport& report) {
    Outcome out;
    out.pass = report.pass;
    if (report.pass) {
        out.note = std::to_string(report.instances) + " instances";
    } else {
        for (const SuiteItem& item : report.items) {
            if (!item.pass) {
                out.note = "failed: " + item.name;
                break;
            }
        }
    }
    return out;
}

// 1. Greene-function golden values: the disconnected poset vanishes and the
//    planar poset matches its closed form, each in under a second.
Outcome criterion_golden_psi() {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    const RationalFunction p1 = psi_poset(fixtures::disconnected_poset());
    const double s1 = std::chrono::duration<double>(clock::now() - t0).count();

    const auto t1 = clock::now();
    const RationalFunction p2 = psi_poset(fixtures::planar_poset());
    const double s2 = std::chrono::duration<double>(clock::now() - t1).count();

    Outcome out;
    out.pass = p1.is_zero() && rf_equal(p2, fixtures::planar_poset_psi()) && s1 < 1.0 && s2 < 1.0;
    out.note = "psi(P1) = " + rf_to_string(p1);
    return out;
}

// 2. Toric golden values on the diamond: the four extension classes and the
//    closed-form rational function.
Outcome criterion_golden_diamond() {
    const auto classes = ltor(fixtures::diamond(), ExtensionMethod::Recursive);
    const RationalFunction psi = psi_tor(fixtures::diamond());
    Outcome out;
    out.pass = classes == as_set(fixtures::diamond_toric_extensions()) &&
               rf_equal(psi, fixtures::diamond_psi_tor());
    out.note = std::to_string(classes.size()) + " classes, psi_tor = " + rf_to_string(psi);
    return out;
}

// 3. Five-vertex branching example: the three added-relation extension sets
//    match verbatim, their disjoint union is the full set, and dropping the
//    third block witnesses the proper inclusion.
Outcome criterion_branching_example() {
    const auto up = ltor(fixtures::branching_quiver_up(), ExtensionMethod::Recursive);
    const auto down = ltor(fixtures::branching_quiver_down(), ExtensionMethod::Recursive);
    const auto fan = ltor(fixtures::chain_fan(), ExtensionMethod::Recursive);
    const auto whole = ltor(fixtures::branching_quiver(), ExtensionMethod::Recursive);

    Outcome out;
    out.pass = up == as_set(fixtures::branching_up_extensions()) &&
               down == as_set(fixtures::branching_down_extensions()) &&
               fan == as_set(fixtures::chain_fan_extensions());

    std::set<ToricTotalOrder> uni = up;
    size_t total = up.size();
    for (const auto* part : {&down, &fan}) {
        for (const ToricTotalOrder& w : *part) uni.insert(w);
        total += part->size();
    }
    out.pass = out.pass && uni.size() == total && uni == whole;

    // Proper inclusion: the two added-relation sets alone miss two classes.
    std::set<ToricTotalOrder> pair_union = up;
    pair_union.insert(down.begin(), down.end());
    const bool proper =
        std::includes(whole.begin(), whole.end(), pair_union.begin(), pair_union.end()) &&
        pair_union.size() < whole.size();
    out.pass = out.pass && proper;
    out.note = std::to_string(up.size()) + "+" + std::to_string(down.size()) + "+" +
               std::to_string(fan.size()) + " = " + std::to_string(whole.size()) + " classes";
    return out;
}

// 4. The three enumeration routes agree: exhaustive n <= 5 plus 100 random
//    quivers at each of n = 6, 7.
Outcome criterion_oracle() {
    SuiteOptions options;
    options.max_n = 7;
    options.samples = 100;
    return check_suite(verify_oracle_suite(options));
}

// 5. Fingerprint partition equals flip reachability on 50 random graphs.
Outcome criterion_pretzel() {
    return check_suite(verify_pretzel_suite({}));
}

// 6. Vanishing criterion over the generated family (n <= 6) and the named
//    fixtures, including the non-sufficiency example and the nonzero diamond.
Outcome criterion_vanishing() {
    return check_suite(verify_cut_vertex_suite({}));
}

// 7. Denominator support inside the toric Hasse diagram over the same
//    family, with the double-chain proper-containment witness.
Outcome criterion_denominator() {
    return check_suite(verify_denominator_suite({}));
}

// 8. Shuffle relations for all 0 <= k, j <= 3, all four forms equal.
Outcome criterion_kk() {
    return check_suite(verify_kk_suite({}));
}

// 9. The one-pivot shuffle sum vanishes for all |a| + |b| <= 5.
Outcome criterion_shuffle() {
    return check_suite(verify_shuffle_suite({}));
}

// 10. Bounded factorization and the reading bijection on 100 random bounded
//     posets with at most 7 vertices.
Outcome criterion_bounded() {
    return check_suite(verify_bounded_suite({}));
}

// 11. Strongly planar product formula on the planar fixture and 20 generated
//     diagrams; the bow-tie fails every embedding.
Outcome criterion_planar() {
    return check_suite(verify_planar_suite({}));
}

// 12. Fixed-source flip connectivity and the contraction bijection on 100
//     random quivers with n <= 7, every vertex.
Outcome criterion_fixed_source() {
    return check_suite(verify_fixed_source_suite({}));
}

// 13. Extension counts on the double-chain family equal binomial(k+j, k)
//     under every method.
Outcome criterion_counting() {
    return check_suite(verify_counting_suite({}));
}

// 14. The randomized equality pre-check never disagrees with the exact check
//     across 10,000 seeded pairs.
Outcome criterion_rf() {
    return check_suite(verify_rf_suite({}));
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "golden Greene functions (P1, P2)", 2.0, criterion_golden_psi},
        {2, "golden diamond extensions and psi_tor", 1.0, criterion_golden_diamond},
        {3, "branching example: three blocks, disjoint union, proper inclusion", 5.0,
         criterion_branching_example},
        {4, "enumeration oracle: three routes agree (n <= 5 exhaustive, n = 6, 7 random)", 600.0,
         criterion_oracle},
        {5, "fingerprint partition = flip reachability (50 graphs)", 300.0, criterion_pretzel},
        {6, "vanishing criterion (generated family n <= 6 + fixtures)", 120.0,
         criterion_vanishing},
        {7, "denominator support in the toric Hasse diagram", 120.0, criterion_denominator},
        {8, "double-chain shuffle relations (k, j <= 3)", 60.0, criterion_kk},
        {9, "one-pivot shuffle vanishing (|a| + |b| <= 5)", 30.0, criterion_shuffle},
        {10, "bounded factorization and reading bijection (100 posets)", 120.0,
         criterion_bounded},
        {11, "strongly planar product formula and bow-tie rejection", 60.0, criterion_planar},
        {12, "fixed-source connectivity and contraction bijection (100 quivers)", 600.0,
         criterion_fixed_source},
        {13, "double-chain counting sanity", 30.0, criterion_counting},
        {14, "randomized vs exact equality (10,000 pairs)", 60.0, criterion_rf},
    };

    bool all_pass = true;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.note = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(
            std::chrono::steady_clock::now() - t0).count();
        const bool in_budget = seconds <= c.budget_seconds;
        const bool pass = outcome.pass && in_budget;
        all_pass = all_pass && pass;
        std::printf("criterion %2d  %-4s  %7.2fs / %6.0fs  %s%s%s\n", c.id,
                    pass ? "PASS" : "FAIL", seconds, c.budget_seconds, c.title.c_str(),
                    outcome.note.empty() ? "" : " — ", outcome.note.c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %s\n", all_pass ? "PASS" : "FAIL");
    return all_pass ? 0 : 1;
}
