#include "tlc/charges.hpp"

#include <stdexcept>

#include "tlc/parallel.hpp"

namespace tlc {

Frac z_value(int k, int w, int t) {
    if (w > k) return Frac(0);
    Frac s = Frac::binomial((k + 1) / 2 - t - 1, k - w) +
             Frac::binomial(k / 2 - t - 1, k - w);
    return (t % 2) ? -s : s;
}

ZFunction default_z() {
    return [](int k, int w, int t) { return z_value(k, w, t); };
}

bool triangle_check(int k, int maxW, const ZFunction& z) {
    for (int w = 1; w <= maxW; ++w)
        for (int t = 1; t < w; ++t)
            if (!(z(k, w, t - 1) + z(k, w, t) + z(k, w + 1, t)).is_zero()) return false;
    for (int t = 0; t <= maxW; ++t)
        if (!z(k, k + 1, t).is_zero()) return false;
    return true;
}

TauPoly c_connected(int k, int w, int t, const ZFunction& z) {
    TauPoly r;
    for (int j = 0; 2 * j <= k - w; ++j) {
        Frac zv = z(k, w + 2 * j, t + j);
        if (!zv.is_zero()) r += TauPoly::tau(k - w - 2 * j, zv);
    }
    return r;
}

TauPoly coefficient_params(int k, const WordParams& p, const ZFunction& z) {
    TauPoly base = c_connected(k, p.w + p.v + p.g, p.t + p.v + p.g, z);
    base.shift(p.g);
    return (p.g % 2) ? -base : base;
}

TauPoly coefficient(int k, const TL1Word& word, const ZFunction& z) {
    return coefficient_params(k, params(word), z);
}

TauPoly delta(int k, int w, int t, const ZFunction& z) {
    TauPoly r = c_connected(k, w, t - 1, z) + c_connected(k, w, t, z);
    TauPoly third = c_connected(k, w + 1, t, z);
    third.shift(1);
    return r + third;
}

ChargeDensity build_charge(int k, const ZFunction& z) {
    if (k < 1) throw std::invalid_argument("charge order must be >= 1");
    ChargeDensity q;
    q.k = k;
    if (k == 1) {
        q.terms.emplace(TL1Word{0, 1, 0}, TauPoly(Frac(1)));
        return q;
    }
    for (const TL1Word& w : enumerate_candidates(k)) {
        if (w.width() == 1) continue;  // table normalization: no Q_1 admixture
        TauPoly c = coefficient(k, w, z);
        if (!c.is_zero()) q.terms.emplace(w, std::move(c));
    }
    return q;
}

BSeries monoid_product_series(int order, int window) {
    BSeries p;
    p.coeff.assign(order + 1, LinComb());
    p.coeff[0] = LinComb::unit();
    int loops = 0;
    for (int j = 0; j < window; ++j) {
        Diagram ej = Diagram::generator(j);
        for (int m = order; m >= 1; --m) {
            for (const auto& [d, c] : p.coeff[m - 1].terms()) {
                Diagram prod = compose(d, ej, loops);
                p.coeff[m].add_term_shifted(prod, c, loops);
            }
        }
    }
    return p;
}

namespace {

/// parallel LinComb product; the larger factor is split into chunks
LinComb mul_big(const LinComb& a, const LinComb& b) {
    if (a.size() * b.size() < 1u << 14) return mul(a, b);
    const bool split_left = a.size() >= b.size();
    const LinComb& outer = split_left ? a : b;
    const LinComb& inner = split_left ? b : a;
    size_t n = outer.size();
    int workers = thread_count();
    std::vector<const std::pair<const Diagram, TauPoly>*> items;
    items.reserve(n);
    for (const auto& kv : outer.terms()) items.push_back(&kv);
    std::vector<LinComb> parts(std::max(workers, 1));
    parallel_chunks(n, [&](int w, size_t lo, size_t hi) {
        LinComb& out = parts[w];
        out.reserve((hi - lo) * 2);
        int loops = 0;
        for (size_t i = lo; i < hi; ++i) {
            const auto& [dout, pout] = *items[i];
            for (const auto& [din, pin] : inner.terms()) {
                const Diagram& da = split_left ? dout : din;
                const Diagram& db = split_left ? din : dout;
                Diagram d = compose(da, db, loops);
                if (pin.is_one()) {
                    out.add_term_shifted(d, pout, loops);
                } else if (pout.is_one()) {
                    out.add_term_shifted(d, pin, loops);
                } else {
                    out.add_term_shifted(d, pout * pin, loops);
                }
            }
        }
    });
    LinComb r = std::move(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i) r += parts[i];
    return r;
}

}  // namespace

std::vector<LinComb> log_series(const BSeries& p, int order) {
    // X = P - 1; log(1+X) = sum_{n>=1} (-1)^{n+1} X^n / n, truncated
    std::vector<LinComb> X(p.coeff.begin(), p.coeff.end());
    X.resize(order + 1);
    X[0] = LinComb();
    std::vector<LinComb> L(order + 1);
    std::vector<LinComb> Xp = X;
    for (int m = 1; m <= order; ++m) L[m] += Xp[m];
    for (int n = 2; n <= order; ++n) {
        std::vector<LinComb> nxt(order + 1);
        for (int a = n - 1; a < order; ++a) {
            if (Xp[a].empty()) continue;
            for (int b = 1; a + b <= order; ++b) {
                if (X[b].empty()) continue;
                nxt[a + b] += mul_big(Xp[a], X[b]);
            }
            Xp[a] = LinComb();  // last use of this order
        }
        Xp = std::move(nxt);
        Frac f(((n % 2) ? 1 : -1), n);
        for (int m = n; m <= order; ++m) {
            if (Xp[m].empty()) continue;
            LinComb term = Xp[m];
            term.scale(f);
            L[m] += term;
        }
    }
    for (int m = 1; m <= order; ++m) {
        long long fact = 1;
        for (int i = 2; i <= m; ++i) fact *= i;
        L[m].scale(Frac(fact));
    }
    return L;
}

ChargeDensity bulk_density(const LinComb& lc, int k, int lo, int hi,
                           const TL1DiagramIndex& index) {
    ChargeDensity out;
    out.k = k;
    for (const auto& [d, p] : lc.terms()) {
        if (d.is_identity()) continue;
        if (d.lo() < lo || d.hi() > hi) continue;
        auto [nd, shift] = normalize_translation(d);
        auto cls = index.lookup(nd);
        if (!cls) throw std::runtime_error("non-TL1 diagram in bulk region: " + d.str());
        auto it = out.terms.find(*cls);
        if (it == out.terms.end()) {
            out.terms.emplace(*cls, p);
        } else if (it->second != p) {
            throw std::runtime_error("bulk density not translation invariant at " +
                                     notation(*cls));
        }
    }
    return out;
}

std::vector<ChargeDensity> transfer_series(int k, int M) {
    if (M < 3 * k + 2) throw std::invalid_argument("window too small: need M >= 3k+2");
    BSeries p = monoid_product_series(k, M);
    std::vector<LinComb> L = log_series(p, k);
    TL1DiagramIndex index(k);
    std::vector<ChargeDensity> out;
    for (int j = 1; j <= k; ++j)
        out.push_back(bulk_density(L[j], j, k, M - k, index));
    return out;
}

namespace {

/// Exact solve of the symmetrization system: unknown tau-polynomials
/// a_{k,i} (degree <= maxd-1) such that the assembled density is
/// symmetric (odd k) or antisymmetric (even k) under time reversal.
std::vector<TauPoly> solve_symmetry(int k, const ChargeDensity& base,
                                    const std::vector<ChargeDensity>& lower) {
    const int sgn = (k % 2) ? 1 : -1;
    const int maxd = k + 2;
    const int nu = static_cast<int>(lower.size());
    const int ncol = nu * maxd;

    std::vector<std::vector<Frac>> rows;  // augmented [ncol | rhs]
    auto trdiff = [&](const ChargeDensity& d, const TL1Word& c) {
        TauPoly r;
        auto it = d.terms.find(c);
        if (it != d.terms.end()) r += it->second;
        auto jt = d.terms.find(time_reverse(c));
        if (jt != d.terms.end()) r -= jt->second * Frac(sgn);
        return r;
    };
    std::vector<TL1Word> classes;
    {
        std::unordered_map<TL1Word, bool, TL1WordHash> seen;
        auto collect = [&](const ChargeDensity& d) {
            for (auto& [c, p] : d.terms)
                if (seen.emplace(c, true).second) classes.push_back(c);
        };
        collect(base);
        for (auto& l : lower) collect(l);
    }
    for (const TL1Word& c : classes) {
        TauPoly rb = trdiff(base, c);
        std::vector<TauPoly> rl;
        rl.reserve(nu);
        for (auto& l : lower) rl.push_back(trdiff(l, c));
        int maxdeg = rb.degree();
        for (auto& p : rl) maxdeg = std::max(maxdeg, p.degree() + maxd - 1);
        for (int d = 0; d <= maxdeg; ++d) {
            std::vector<Frac> row(ncol + 1, Frac(0));
            bool any = false;
            for (int i = 0; i < nu; ++i)
                for (int dd = 0; dd < maxd; ++dd) {
                    const Frac& cc = rl[i][d - dd];
                    if (!cc.is_zero()) { row[i * maxd + dd] = cc; any = true; }
                }
            row[ncol] = -rb[d];
            if (any || !row[ncol].is_zero()) rows.push_back(std::move(row));
        }
    }
    // Gaussian elimination, exact
    int r = 0;
    std::vector<int> pivots;
    for (int c = 0; c < ncol && r < static_cast<int>(rows.size()); ++c) {
        int pr = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (!rows[i][c].is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(rows[r], rows[pr]);
        Frac pv = rows[r][c];
        for (auto& x : rows[r]) x /= pv;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Frac f = rows[i][c];
            for (int j = c; j <= ncol; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
        if (!rows[i][ncol].is_zero())
            throw std::runtime_error("no-solution: symmetry system inconsistent");
    std::vector<Frac> sol(ncol, Frac(0));
    for (int i = 0; i < r; ++i) sol[pivots[i]] = rows[i][ncol];
    std::vector<TauPoly> a(nu);
    for (int i = 0; i < nu; ++i)
        for (int dd = 0; dd < maxd; ++dd)
            if (!sol[i * maxd + dd].is_zero()) a[i] += TauPoly::tau(dd, sol[i * maxd + dd]);
    return a;
}

}  // namespace

namespace {

ASeriesResult a_series_from(int k, const std::vector<ChargeDensity>& At) {
    ChargeDensity base;
    base.k = k;
    long long fact = 1;
    for (int i = 2; i < k; ++i) fact *= i;
    Frac inv_fact(1, fact);
    for (auto& [c, p] : At[k - 1].terms) base.terms.emplace(c, p * inv_fact);
    std::vector<ChargeDensity> lower;
    for (int i = 1; 2 * i <= k; ++i) lower.push_back(At[k - 2 * i]);  // Atilde_{k+1-2i}

    ASeriesResult res;
    res.a = solve_symmetry(k, base, lower);
    res.density.k = k;
    res.density.terms = base.terms;
    for (size_t i = 0; i < lower.size(); ++i) {
        if (res.a[i].is_zero()) continue;
        for (auto& [c, p] : lower[i].terms) {
            auto [it, fresh] = res.density.terms.try_emplace(c, p * res.a[i]);
            if (!fresh) {
                it->second += p * res.a[i];
                if (it->second.is_zero()) res.density.terms.erase(it);
            }
        }
    }
    // drop the single-monoid term: same table normalization as the charges
    for (auto it = res.density.terms.begin(); it != res.density.terms.end();) {
        if (it->first.width() == 1) {
            res.width1 = it->second;
            it = res.density.terms.erase(it);
        } else {
            ++it;
        }
    }
    for (auto it = res.density.terms.begin(); it != res.density.terms.end();)
        it = it->second.is_zero() ? res.density.terms.erase(it) : std::next(it);
    return res;
}

}  // namespace

ASeriesResult a_series(int k, int M) {
    if (M < 3 * k + 2) throw std::invalid_argument("window too small: need M >= 3k+2");
    return a_series_from(k, transfer_series(k, M));
}

std::vector<ASeriesResult> a_series_batch(int kmax, int M) {
    if (M < 3 * kmax + 2)
        throw std::invalid_argument("window too small: need M >= 3k+2");
    std::vector<ChargeDensity> At = transfer_series(kmax, M);
    std::vector<ASeriesResult> out(kmax + 1);
    for (int k = 2; k <= kmax; ++k) out[k] = a_series_from(k, At);
    return out;
}

std::vector<ChargeDensity> boost_series(int k, int M) {
    if (M < 4 * k) throw std::invalid_argument("window too small: need M >= 4k");
    TL1DiagramIndex index(k);
    LinComb G;
    for (int j = 0; j < M; ++j)
        G.add_term(Diagram::generator(j), TauPoly(Frac(1)));  // G_1 = sum e_j
    std::vector<ChargeDensity> out;
    out.push_back(bulk_density(G, 1, k, M - k, index));
    for (int step = 2; step <= k; ++step) {
        LinComb nxt;
        int loops = 0;
        for (const auto& [d, p] : G.terms()) {
            for (int j = 0; j < M; ++j) {
                if (j + 2 <= d.lo() || j >= d.hi()) continue;  // e_j commutes: cancels
                Diagram ej = Diagram::generator(j);
                // [G, B] contribution: j * (d e_j - e_j d)
                Diagram right = compose(d, ej, loops);
                TauPoly pr = p * Frac(j);
                pr.shift(loops);
                nxt.add_term(right, pr);
                Diagram left = compose(ej, d, loops);
                TauPoly pl = p * Frac(-j);
                pl.shift(loops);
                nxt.add_term(left, pl);
            }
        }
        G = std::move(nxt);
        out.push_back(bulk_density(G, step, k, M - k, index));
    }
    return out;
}

}  // namespace tlc
