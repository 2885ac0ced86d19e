#ifndef toric_greene_hpp
#define toric_greene_hpp

/// Greene's rational function of a poset (the sum over linear extensions of
/// 1 / prod (x_{w_k} - x_{w_{k+1}})) and its cyclic analogue over toric total
/// extensions, together with the closed-form identities attached to them:
/// strongly planar product formulas, the bounded-poset factorization, the
/// Kleiss-Kuijf-type shuffle relations, and the vanishing criteria.

#include <vector>

#include "toric/extensions.hpp"
#include "toric/planar.hpp"
#include "toric/ratfun.hpp"

namespace toric {

/// All interleavings of two disjoint words, in lexicographic order of the
/// chosen positions for `a`; size binomial(|a|+|b|, |a|).
std::vector<std::vector<int>> shuffle(const std::vector<int>& a, const std::vector<int>& b);

/// Greene's function of the poset induced by an acyclic quiver on >= 2
/// vertices (n < 2 is an input error: the summand needs consecutive pairs).
RationalFunction psi_poset(const Quiver& q);

/// Summand of the toric analogue for one cyclic class: the inverse of the
/// cyclic product prod (x_{w_k} - x_{w_{k+1}}) including the wrap factor.
RationalFunction psi_tor_word(const ToricTotalOrder& w);

/// Toric analogue: sum of psi_tor_word over the toric total extensions.
RationalFunction psi_tor(const Quiver& q, ExtensionMethod method = ExtensionMethod::Recursive);

/// Product formula for a strongly planar poset given its bounded regions:
/// prod_regions (x_min - x_max) / prod_covers (x_i - x_j).  `q` must be the
/// Hasse diagram of the poset (arcs are exactly the cover relations).
RationalFunction greene_strongly_planar(const Quiver& q, const std::vector<BoundedRegion>& regions);

/// Bounded factorization: for a bounded Hasse diagram p with bottom `zero`
/// and top `one`, the toric function of p + (zero -> one) via the closed form
/// psi_poset(p) / (x_one - x_zero).
RationalFunction psi_tor_bounded(const Quiver& p, int zero, int one);

/// Canonical labeling of the double-chain quiver: bottom = 1, chain b = 2..k+1,
/// chain c = k+2..k+j+1, top = k+j+2; arcs along both chains plus bottom->top.
struct DoubleChainLabels {
    int k = 0;
    int j = 0;
    int bottom = 1;
    int top = 2;
    std::vector<int> b; // labels of the first chain
    std::vector<int> c; // labels of the second chain
};

DoubleChainLabels double_chain_labels(int k, int j);
Quiver double_chain_quiver(int k, int j);

/// Closed form of the toric function of the double chain:
/// (-1)^k / (prod_{r=0..k} (x_{b_{r+1}} - x_{b_r}) * prod_{s=0..j} (x_{c_s} - x_{c_{s+1}}))
/// with b_0 = c_0 = zero and b_{k+1} = c_{j+1} = one.  Either chain may be
/// empty; all labels must be distinct and within 1..nvars.
RationalFunction kk_closed_form(const std::vector<int>& b, const std::vector<int>& c, int zero,
                                int one, int nvars);

/// Same closed form under the canonical double-chain labeling.
RationalFunction kk_closed_form(int k, int j);

struct KKReport {
    int k = 0;
    int j = 0;
    bool pass = false;
    RationalFunction lhs;       // sum over shuffles of (top, bottom, a)
    RationalFunction rhs;       // (-1)^k * (top, rev b, bottom, c)
    RationalFunction closed;    // kk_closed_form
    RationalFunction quiver_psi; // psi_tor of the double-chain quiver
};

/// Kleiss-Kuijf-type relation: checks lhs == rhs == closed form == the toric
/// function of the double-chain quiver.
KKReport verify_kk(int k, int j);

struct ShuffleVanishingReport {
    std::vector<int> a;
    std::vector<int> b;
    int pivot = 0;
    bool pass = false;
    RationalFunction sum;
};

/// Sum over c in the shuffle of a and b of psi_tor_word((pivot, c)) is zero.
/// Both sequences must be nonempty and {pivot} + a + b must use each label
/// 1..(|a|+|b|+1) exactly once.
ShuffleVanishingReport verify_shuffle_vanishing(const std::vector<int>& a,
                                                const std::vector<int>& b, int pivot);

struct CutVertexReport {
    bool hypothesis_met = false; // disconnected with n >= 3, or has a cut vertex
    bool is_zero = false;
    bool pass = false; // hypothesis_met implies is_zero; vacuous pass otherwise
    std::vector<int> cut_vertices;
    int component_count = 0;
    RationalFunction psi;
};

/// Vanishing criterion: a disconnected underlying graph (n >= 3) or a cut
/// vertex forces the toric function to vanish.  The criterion is sufficient
/// only, so an unmet hypothesis reports pass = true without any claim about
/// the value.
CutVertexReport verify_cut_vertex_vanishing(const Quiver& q,
                                            ExtensionMethod method = ExtensionMethod::Recursive);

struct DenominatorReport {
    bool pass = false;      // contained
    bool proper = false;    // containment is strict
    std::vector<Edge> denominator_pairs;
    std::vector<Edge> hasse_pairs;
    RationalFunction psi;
};

/// Denominator support: every factor of the normalized toric function is an
/// edge of the toric Hasse diagram.  Requires n >= 3 (the two-vertex toric
/// function has a squared factor and sits outside the statement).
DenominatorReport verify_denominator(const Quiver& q,
                                     ExtensionMethod method = ExtensionMethod::Recursive);

} // namespace toric

#endif
