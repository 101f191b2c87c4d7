#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "tlc/charges.hpp"

namespace tlc {

/// [Q_k, H] accumulated over translation-normalized diagrams.
struct CommutatorDensity {
    std::unordered_map<Diagram, TauPoly, DiagramHash> terms;
    bool empty() const { return terms.empty(); }
};

/// Density of [Q, H] for a given charge density (defaults to build_charge):
/// sum over representatives q and offsets delta in [min-1, max+1] of
/// D(q)(q e_delta - e_delta q), reduced and translation-normalized.
CommutatorDensity commutator_density(const ChargeDensity& q);
CommutatorDensity commutator_density(int k, const ZFunction& z = z_value);

/// S_k(p) by forward enumeration of all (q, sigma) pairs whose reduced
/// product q e_sigma (resp. e_sigma q) equals p exactly. p is given as a
/// diagram so reduced words with a doubled monoid are accepted too.
TauPoly s_direct(int k, const Diagram& p, const ZFunction& z = z_value);
TauPoly s_direct(int k, const TL1Word& p, const ZFunction& z = z_value);

/// S_k(p) from the environment-code contribution tables.
TauPoly s_env(int k, const TL1Word& p, const ZFunction& z = z_value);

/// Single-code contribution at word parameters (w,t,v,g) of order k.
TauPoly env_contribution(EnvCode code, int k, const WordParams& p,
                         const ZFunction& z = z_value);

/// The diagrams reachable in [Q_k, H] together with the TL1 subset.
struct ReachableSet {
    std::vector<Diagram> all;      ///< every reduced product diagram
    std::vector<TL1Word> tl1;      ///< those that are TL1 words (normalized)
};
ReachableSet reachable_words(int k, const ZFunction& z = z_value);

/// Report of the identity checks (the six linear equations and the
/// four-parameter solution pattern).
struct IdentityReport {
    bool passed = true;
    int tuples_checked = 0;
    int tuples_skipped = 0;        ///< outside the side conditions
    std::string first_violation;   ///< empty when passed
};

/// Verifies the six identities on realizable parameter tuples within their
/// side conditions, the row-by-row negation of the preceding/following
/// tables, and the four-parameter form of all 23 contributions.
IdentityReport check_identities(int k, const ZFunction& z = z_value);

}  // namespace tlc
