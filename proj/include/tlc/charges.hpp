#pragma once

#include <functional>
#include <unordered_map>
#include <vector>

#include "tlc/diagram.hpp"
#include "tlc/tau_poly.hpp"
#include "tlc/word.hpp"

namespace tlc {

/// Pluggable solution of the triangle equation; the default is the closed
/// form. Alternative solutions are used by the mutation/robustness tests.
using ZFunction = std::function<Frac(int k, int w, int t)>;

Frac z_value(int k, int w, int t);
ZFunction default_z();

/// true iff Z satisfies the triangle equation for 0 < t < w <= maxW
/// together with the vanishing row Z(k+1, t).
bool triangle_check(int k, int maxW, const ZFunction& z = z_value);

/// coefficient of connected words: C_k(w,t) as a polynomial in tau
TauPoly c_connected(int k, int w, int t, const ZFunction& z = z_value);

/// C_k(w,t,v,g) = (-tau)^g C_k(w+v+g, t+v+g)
TauPoly coefficient_params(int k, const WordParams& p, const ZFunction& z = z_value);

/// D_k(word): the raw closed-form coefficient
TauPoly coefficient(int k, const TL1Word& word, const ZFunction& z = z_value);

/// Delta_k(W,T) = C_k(W,T-1) + C_k(W,T) + tau C_k(W+1,T)
TauPoly delta(int k, int w, int t, const ZFunction& z = z_value);

/// Translation-class density of a translation-invariant operator.
struct ChargeDensity {
    int k = 0;
    std::unordered_map<TL1Word, TauPoly, TL1WordHash> terms;

    bool operator==(const ChargeDensity& o) const {
        return k == o.k && terms == o.terms;
    }
};

/// The charge density of the appendix tables: the closed form over all
/// candidate words, with zero coefficients dropped and, for k >= 2, the
/// single-monoid term removed (the tables normalize away the Q_1 admixture).
ChargeDensity build_charge(int k, const ZFunction& z = z_value);

/// Truncated series in b with LinComb coefficients.
struct BSeries {
    std::vector<LinComb> coeff;  ///< index = power of b
};

/// Expand prod_{j=0}^{M-1} (1 + b e_j) to order `order` (leftmost factor
/// is applied last).
BSeries monoid_product_series(int order, int window);

/// log of the product series, coefficient of b^k times k!, for k = 1..order
std::vector<LinComb> log_series(const BSeries& p, int order);

/// Bulk density extraction: translation classes of TL1 words whose diagrams
/// lie fully inside [lo, hi); occurrences of the same class must agree.
ChargeDensity bulk_density(const LinComb& lc, int k, int lo, int hi,
                           const TL1DiagramIndex& index);

/// Transfer-matrix b-series oracle: bulk densities of Atilde_1 .. Atilde_k.
/// Requires M >= 3k + 2.
std::vector<ChargeDensity> transfer_series(int k, int M);

/// Symmetrized A_k: Atilde_k/(k-1)! plus the solved linear combination of
/// lower Atilde's; coefficients a_{k,i} are returned as tau-polynomials.
struct ASeriesResult {
    ChargeDensity density;   ///< table-normalized (single-monoid term removed)
    TauPoly width1;          ///< the removed single-monoid coefficient
    std::vector<TauPoly> a;  ///< a_{k,i}, i = 1..k/2
};
ASeriesResult a_series(int k, int M);

/// All of A_2 .. A_kmax from one transfer run on a shared window (indexing:
/// result[k]). Requires M >= 3*kmax + 2.
std::vector<ASeriesResult> a_series_batch(int kmax, int M);

/// Boost oracle: G_1 = sum e_j, G_{j+1} = [G_j, B] with B = sum j e_j on the
/// open window [0, M); returns bulk densities of G_1 .. G_k. Requires M >= 4k.
std::vector<ChargeDensity> boost_series(int k, int M);

}  // namespace tlc
