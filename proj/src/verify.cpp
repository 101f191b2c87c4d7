#include "tlc/verify.hpp"

#include <set>
#include <sstream>

namespace tlc {

CommutatorDensity commutator_density(const ChargeDensity& q) {
    CommutatorDensity out;
    int loops = 0;
    for (const auto& [cls, D] : q.terms) {
        Diagram qd = tl1_diagram(cls);
        for (int delta = cls.min_index() - 1; delta <= cls.max_index() + 1; ++delta) {
            Diagram ed = Diagram::generator(delta);
            for (int side = 0; side < 2; ++side) {
                Diagram prod = side == 0 ? compose(qd, ed, loops)
                                         : compose(ed, qd, loops);
                TauPoly p = D;
                p.shift(loops);
                if (side == 1) p = -p;
                Diagram key = prod.is_identity() ? prod
                                                 : normalize_translation(prod).first;
                auto [it, fresh] = out.terms.try_emplace(key, p);
                if (!fresh) {
                    it->second += p;
                    if (it->second.is_zero()) out.terms.erase(it);
                }
            }
        }
    }
    return out;
}

CommutatorDensity commutator_density(int k, const ZFunction& z) {
    return commutator_density(build_charge(k, z));
}

TauPoly s_direct(int k, const Diagram& p, const ZFunction& z) {
    TauPoly total;
    if (p.is_identity()) return total;
    int loops = 0;
    for (const TL1Word& rep : enumerate_candidates(k)) {
        TauPoly D = coefficient(k, rep, z);
        if (D.is_zero()) continue;
        Diagram qd0 = tl1_diagram(rep);
        int wq = rep.width();
        // translates of q whose window can reach p's window
        for (int x = p.lo() - wq - 1; x <= p.hi(); ++x) {
            Diagram qd = qd0.translated(x);
            for (int sigma = x - 1; sigma <= x + wq; ++sigma) {
                for (int side = 0; side < 2; ++side) {
                    Diagram ed = Diagram::generator(sigma);
                    Diagram prod = side == 0 ? compose(qd, ed, loops)
                                             : compose(ed, qd, loops);
                    if (!(prod == p)) continue;
                    TauPoly c = D;
                    c.shift(loops);
                    if (side == 1) c = -c;
                    total += c;
                }
            }
        }
    }
    return total;
}

TauPoly s_direct(int k, const TL1Word& p, const ZFunction& z) {
    return s_direct(k, tl1_diagram(p), z);
}

namespace {

struct Delta4 {
    int dw, dt, dv, dg;
    int taupow = 0;
};

// contribution rows of the preceding table; the following table is the
// row-by-row negative with L and R interchanged
std::vector<Delta4> preceding_rows(EnvCode code) {
    switch (code) {
        case EnvCode::PL1:
            return {{0, 1, -1, -1}, {0, 2, -1, -1}, {0, 0, 0, 0, 1}, {0, -1, 1, 0}};
        case EnvCode::PR1:
            return {{0, 0, -1, -1}, {0, 1, -1, -1}, {0, 0, 0, 0, 1}, {0, 0, 1, 0}};
        case EnvCode::PL2:
            return {{0, 1, -1, 0}, {0, 0, 0, 0, 1}, {0, -1, 1, 0}};
        case EnvCode::PR2:
            return {{0, 0, -1, 0}, {0, 0, 0, 0, 1}, {0, 0, 1, 0}};
        case EnvCode::PL3:
            return {{1, 1, 0, 0}, {0, 0, 0, 0, 1}, {-1, -1, 0, 0}};
        case EnvCode::PR3:
            return {{1, 0, 0, 0}, {0, 0, 0, 0, 1}, {-1, 0, 0, 0}};
        case EnvCode::PP:
            return {{0, 0, 0, 0, 1}, {0, -1, 1, 1}};
        default:
            throw std::logic_error("not a preceding code");
    }
}

EnvCode mirror_pf(EnvCode code) {
    switch (code) {
        case EnvCode::FR1: return EnvCode::PL1;
        case EnvCode::FL1: return EnvCode::PR1;
        case EnvCode::FR2: return EnvCode::PL2;
        case EnvCode::FL2: return EnvCode::PR2;
        case EnvCode::FR3: return EnvCode::PL3;
        case EnvCode::FL3: return EnvCode::PR3;
        case EnvCode::FF: return EnvCode::PP;
        default: throw std::logic_error("not a following code");
    }
}

TauPoly eval_rows(const std::vector<Delta4>& rows, int k, const WordParams& p,
                  const ZFunction& z, bool negate) {
    TauPoly r;
    for (const Delta4& d : rows) {
        WordParams q{p.w + d.dw, p.t + d.dt, p.v + d.dv, p.g + d.dg};
        TauPoly c = coefficient_params(k, q, z);
        c.shift(d.taupow);
        r += c;
    }
    return negate ? -r : r;
}

// isolated-monoid half contributions: lambda_i with sign +1 for the L side
TauPoly lambda_half(int suffix, int k, const WordParams& p, const ZFunction& z,
                    bool left_side) {
    std::vector<Delta4> plus, minus;
    switch (suffix) {
        case 1:
            minus = {{0, 0, -1, -1}, {0, 1, -1, -1}};
            plus = {{0, 1, -1, -1}, {0, 2, -1, -1}};
            break;
        case 2:
            minus = {{0, 0, -1, 0}};
            plus = {{0, 1, -1, 0}};
            break;
        case 3:
            minus = {{1, 0, 0, 0}};
            plus = {{1, 1, 0, 0}};
            break;
        default:
            throw std::logic_error("bad vacancy suffix");
    }
    TauPoly r = eval_rows(plus, k, p, z, false) - eval_rows(minus, k, p, z, false);
    return left_side ? r : -r;
}

}  // namespace

TauPoly env_contribution(EnvCode code, int k, const WordParams& p, const ZFunction& z) {
    int c = static_cast<int>(code);
    if (code == EnvCode::PP || (c >= static_cast<int>(EnvCode::PL1) &&
                                c <= static_cast<int>(EnvCode::PR3)))
        return eval_rows(preceding_rows(code), k, p, z, false);
    if (code == EnvCode::FF || (c >= static_cast<int>(EnvCode::FL1) &&
                                c <= static_cast<int>(EnvCode::FR3)))
        return eval_rows(preceding_rows(mirror_pf(code)), k, p, z, true);
    int iso = c - static_cast<int>(EnvCode::L1R1);
    int li = iso / 3 + 1, rj = iso % 3 + 1;
    return lambda_half(li, k, p, z, true) + lambda_half(rj, k, p, z, false);
}

TauPoly s_env(int k, const TL1Word& p, const ZFunction& z) {
    WordParams wp = params(p);
    TauPoly total;
    for (const auto& [site, code] : classify_environments(p))
        total += env_contribution(code, k, wp, z);
    return total;
}

ReachableSet reachable_words(int k, const ZFunction& z) {
    ReachableSet out;
    ChargeDensity q = build_charge(k, z);
    std::unordered_map<Diagram, bool, DiagramHash> seen;
    TL1DiagramIndex index(k + 2);
    int loops = 0;
    for (const auto& [cls, D] : q.terms) {
        Diagram qd = tl1_diagram(cls);
        for (int delta = cls.min_index() - 1; delta <= cls.max_index() + 1; ++delta) {
            Diagram ed = Diagram::generator(delta);
            for (int side = 0; side < 2; ++side) {
                Diagram prod = side == 0 ? compose(qd, ed, loops)
                                         : compose(ed, qd, loops);
                if (prod.is_identity()) continue;
                Diagram key = normalize_translation(prod).first;
                if (!seen.emplace(key, true).second) continue;
                out.all.push_back(key);
                if (auto cls2 = index.lookup(key)) out.tl1.push_back(*cls2);
            }
        }
    }
    return out;
}

IdentityReport check_identities(int k, const ZFunction& z) {
    IdentityReport rep;
    // realizable parameter tuples: from all candidate words up to order k+2
    std::set<std::tuple<int, int, int, int>> tuples;
    for (const TL1Word& w : enumerate_candidates(k + 2)) {
        WordParams p = params(w);
        tuples.insert({p.w, p.t, p.v, p.g});
    }
    auto fail = [&](const char* what, const WordParams& p) {
        rep.passed = false;
        if (rep.first_violation.empty()) {
            std::ostringstream os;
            os << what << " at (w,t,v,g)=(" << p.w << "," << p.t << "," << p.v
               << "," << p.g << ")";
            rep.first_violation = os.str();
        }
    };
    auto val = [&](EnvCode c, const WordParams& p) {
        return env_contribution(c, k, p, z);
    };
    using EC = EnvCode;
    for (auto [w, t, v, g] : tuples) {
        WordParams p{w, t, v, g};
        // row-by-row negation of the two tables
        for (EC f : {EC::FR1, EC::FL1, EC::FR2, EC::FL2, EC::FR3, EC::FL3, EC::FF})
            if (!(val(f, p) + val(mirror_pf(f), p)).is_zero())
                fail("table negation", p);
        bool in36 = t >= 1 && v + g >= 2;
        bool in37 = t >= 1 && t < w - 1;
        bool in38 = v + g >= 2 && t >= 1 && t <= w - 4;
        int applicable = 3 + in36 + in37 + in38;
        rep.tuples_checked += applicable;
        rep.tuples_skipped += 6 - applicable;
        if (!(val(EC::L3R1, p) + val(EC::L1R2, p) + val(EC::L2R3, p)).is_zero())
            fail("L3R1+L1R2+L2R3", p);
        if (!(val(EC::FL3, p) + val(EC::PR2, p) + val(EC::L2R3, p)).is_zero())
            fail("FL3+PR2+L2R3", p);
        if (!(val(EC::PL3, p) + val(EC::FR2, p) + val(EC::L2R3, p)).is_zero())
            fail("PL3+FR2+L2R3", p);
        if (in36 && !(val(EC::PL3, p) + val(EC::FR1, p) + val(EC::L1R3, p)).is_zero())
            fail("PL3+FR1+L1R3", p);
        if (in37 && !(val(EC::PL3, p) + val(EC::FF, p) + val(EC::PR3, p)).is_zero())
            fail("PL3+FF+PR3", p);
        if (in38 && !(val(EC::PL1, p) + val(EC::FF, p) + val(EC::PR1, p)).is_zero())
            fail("PL1+FF+PR1", p);
        // four-parameter solution pattern on tuples inside all side conditions
        if (in36 && in37 && in38) {
            TauPoly FF = val(EC::FF, p);
            TauPoly Phi = FF * Frac(1, 2);
            TauPoly Lam[4];
            for (int j = 1; j <= 3; ++j)
                Lam[j] = val(static_cast<EC>(static_cast<int>(EC::FL1) + j - 1), p) - Phi;
            auto expect = [&](EC c, const TauPoly& pat) {
                if (!(val(c, p) - pat).is_zero()) fail("four-parameter pattern", p);
            };
            for (int j = 1; j <= 3; ++j) {
                expect(static_cast<EC>(static_cast<int>(EC::FR1) + j - 1), Phi - Lam[j]);
                expect(static_cast<EC>(static_cast<int>(EC::PL1) + j - 1), -Phi + Lam[j]);
                expect(static_cast<EC>(static_cast<int>(EC::PR1) + j - 1), -Phi - Lam[j]);
            }
            expect(EC::PP, -FF);
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j)
                    expect(static_cast<EC>(static_cast<int>(EC::L1R1) + 3 * (i - 1) + j - 1),
                           Lam[i] - Lam[j]);
        }
    }
    return rep;
}

}  // namespace tlc
