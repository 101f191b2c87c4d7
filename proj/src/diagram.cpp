#include "tlc/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace tlc {

bool Diagram::operator<(const Diagram& o) const {
    if (lo_ != o.lo_) return lo_ < o.lo_;
    if (n_ != o.n_) return n_ < o.n_;
    return std::lexicographical_compare(pair_.begin(), pair_.begin() + 2 * n_,
                                        o.pair_.begin(), o.pair_.begin() + 2 * o.n_);
}

bool Diagram::is_planar() const {
    // boundary circle order: bottom left->right, then top right->left
    int m = 2 * n_;
    auto circ = [&](int p) { return p < n_ ? p : m - 1 - (p - n_); };
    std::vector<int> stack;
    std::vector<int> open(m, -1);
    std::vector<int> at(m);
    for (int p = 0; p < m; ++p) at[circ(p)] = p;
    for (int c = 0; c < m; ++c) {
        int p = at[c];
        int q = pair_[p];
        if (open[q] >= 0) {
            if (stack.empty() || stack.back() != q) return false;
            stack.pop_back();
        } else {
            open[p] = c;
            stack.push_back(p);
        }
    }
    return stack.empty();
}

std::string Diagram::str() const {
    std::string s = "window[" + std::to_string(lo_) + "," + std::to_string(hi()) + "):";
    for (int p = 0; p < 2 * n_; ++p) {
        if (p && pair_[p] < p) continue;
        int q = pair_[p];
        if (q < p) continue;
        auto nm = [&](int x) {
            return (x < n_ ? "b" : "t") + std::to_string(x < n_ ? x + lo_ : x - n_ + lo_);
        };
        s += " " + nm(p) + "-" + nm(q);
    }
    return s;
}

size_t DiagramHash::operator()(const Diagram& d) const {
    uint64_t h = 0x243f6a8885a308d3ull ^ (uint64_t(uint16_t(d.lo_)) << 8 | d.n_);
    int m = 2 * d.n_;
    for (int i = 0; i < m; ++i) {
        h ^= d.pair_[i];
        h *= 0x100000001b3ull;
    }
    return static_cast<size_t>(h ^ (h >> 29));
}

Diagram compose(const Diagram& a, const Diagram& b, int& loops) {
    loops = 0;
    if (a.is_identity()) return b;
    if (b.is_identity()) return a;

    const int lo = std::min(a.lo(), b.lo());
    const int hi = std::max(a.hi(), b.hi());
    const int n = hi - lo;
    if (n > Diagram::kMaxStrands) throw std::length_error("diagram window overflow");

    // Four rows of n points: 0..n-1 bottom of b, n..2n-1 top of b,
    // 2n..3n-1 bottom of a, 3n..4n-1 top of a. Rows 1 and 2 are glued.
    std::array<int16_t, 4 * Diagram::kMaxStrands> part;
    auto link = [&](int x, int y) { part[x] = static_cast<int16_t>(y); part[y] = static_cast<int16_t>(x); };
    const int boff = b.lo() - lo, aoff = a.lo() - lo;
    for (int s = 0; s < n; ++s) {
        int st = lo + s;
        if (st < b.lo() || st >= b.hi()) link(s, n + s);
        if (st < a.lo() || st >= a.hi()) link(2 * n + s, 3 * n + s);
    }
    const int bn = b.strands(), an = a.strands();
    for (int p = 0; p < 2 * bn; ++p) {
        int q = b.partner(p);
        if (q < p) continue;
        int gp = p < bn ? p + boff : n + (p - bn) + boff;
        int gq = q < bn ? q + boff : n + (q - bn) + boff;
        link(gp, gq);
    }
    for (int p = 0; p < 2 * an; ++p) {
        int q = a.partner(p);
        if (q < p) continue;
        int gp = p < an ? 2 * n + p + aoff : 3 * n + (p - an) + aoff;
        int gq = q < an ? 2 * n + q + aoff : 3 * n + (q - an) + aoff;
        link(gp, gq);
    }

    // Trace paths from the external points through the glued middle rows.
    auto glue = [&](int x) { return x < 2 * n ? x + n : x - n; };
    std::array<int16_t, 2 * Diagram::kMaxStrands> res;
    std::array<bool, 2 * Diagram::kMaxStrands> mid_seen{};
    auto ext_index = [&](int x) { return x < n ? x : n + (x - 3 * n); };
    for (int e0 = 0; e0 < 4 * n; ++e0) {
        bool is_ext = e0 < n || e0 >= 3 * n;
        if (!is_ext) continue;
        int e = ext_index(e0);
        int x = part[e0];
        while (x >= n && x < 3 * n) {
            mid_seen[x - n] = true;
            int x2 = glue(x);
            mid_seen[x2 - n] = true;
            x = part[x2];
        }
        res[e] = static_cast<int16_t>(ext_index(x));
    }
    // loops: cycles among unvisited middle points
    for (int m0 = n; m0 < 3 * n; ++m0) {
        if (mid_seen[m0 - n]) continue;
        ++loops;
        int x = m0;
        while (!mid_seen[x - n]) {
            mid_seen[x - n] = true;
            int x2 = glue(x);
            mid_seen[x2 - n] = true;
            x = part[x2];
        }
    }

    // minimize window: strip edge through-strands
    int start = 0, end = n;
    while (start < end && res[start] == n + start) ++start;
    while (end > start && res[end - 1] == n + end - 1) --end;
    Diagram out;
    if (start == end) return out;  // identity
    out.lo_ = static_cast<int16_t>(lo + start);
    out.n_ = static_cast<uint8_t>(end - start);
    int m = out.n_;
    auto remap = [&](int x) {
        return x < n ? x - start : m + (x - n - start);
    };
    for (int s = start; s < end; ++s) {
        out.pair_[remap(s)] = static_cast<uint8_t>(remap(res[s]));
        out.pair_[remap(n + s)] = static_cast<uint8_t>(remap(res[n + s]));
    }
    return out;
}

std::pair<Diagram, int> normalize_translation(const Diagram& d) {
    if (d.is_identity())
        throw std::invalid_argument("identity diagram has no canonical shift");
    int shift = -d.lo();
    return {d.translated(shift), shift};
}

LinComb& LinComb::scale(const TauPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, p] : terms_) p *= c;
    return *this;
}

LinComb& LinComb::scale(const Frac& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, p] : terms_) p *= c;
    return *this;
}

LinComb add(LinComb a, const LinComb& b) { return a += b; }
LinComb scale(LinComb a, const TauPoly& c) { a.scale(c); return a; }

LinComb mul(const LinComb& a, const LinComb& b) {
    LinComb r;
    int loops = 0;
    for (const auto& [da, pa] : a.terms()) {
        for (const auto& [db, pb] : b.terms()) {
            Diagram d = compose(da, db, loops);
            if (pb.is_one()) {
                r.add_term_shifted(d, pa, loops);
            } else if (pa.is_one()) {
                r.add_term_shifted(d, pb, loops);
            } else {
                r.add_term_shifted(d, pa * pb, loops);
            }
        }
    }
    return r;
}

std::pair<Diagram, int> word_diagram(const GeneralWord& word) {
    Diagram d;
    int loops = 0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int l = 0;
        d = compose(Diagram::generator(*it), d, l);  // next letter applied after
        loops += l;
    }
    return {d, loops};
}

LinComb embed_word(const GeneralWord& word) {
    auto [d, loops] = word_diagram(word);
    return LinComb::single(d, TauPoly::tau(loops));
}

Diagram tl1_diagram(const TL1Word& word) {
    auto [d, loops] = word_diagram(to_sequence(word));
    if (loops != 0) throw std::logic_error("TL1 word reduced with loops");
    return d;
}

TL1DiagramIndex::TL1DiagramIndex(int maxw) {
    for (int w = 1; w <= maxw; ++w) {
        uint32_t ends = 1u | (1u << (w - 1));
        uint32_t inner = w > 2 ? ((1u << (w - 1)) - 2u) : 0u;
        uint32_t sub = 0;
        while (true) {
            TL1Word base{0, ends | sub, 0};
            uint32_t pairs = base.adjacent_pairs();
            uint32_t f = 0;
            while (true) {
                TL1Word cls{0, base.support, f};
                map_.emplace(tl1_diagram(cls), cls);
                if (f == pairs) break;
                f = (f - pairs) & pairs;
            }
            if (sub == inner) break;
            sub = (sub - inner) & inner;
        }
    }
}

std::optional<TL1Word> TL1DiagramIndex::lookup(const Diagram& d) const {
    auto it = map_.find(d);
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

}  // namespace tlc
