#include "tlc/word.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace tlc {

GeneralWord from_sequence(const std::vector<int>& indices) { return indices; }

std::optional<TL1Word> canonical_tl1(const GeneralWord& word) {
    if (word.empty()) return std::nullopt;
    int lo = *std::min_element(word.begin(), word.end());
    int hi = *std::max_element(word.begin(), word.end());
    if (hi - lo >= 32) return std::nullopt;
    // position in the sequence: smaller position = applied later
    std::array<int, 32> pos;
    pos.fill(-1);
    for (size_t i = 0; i < word.size(); ++i) {
        int b = word[i] - lo;
        if (pos[b] >= 0) return std::nullopt;  // repeated letter: not TL1
        pos[b] = static_cast<int>(i);
    }
    TL1Word w{lo, 0, 0};
    for (int b = 0; b < 32; ++b)
        if (pos[b] >= 0) w.support |= 1u << b;
    for (int b = 0; b + 1 < 32; ++b)
        if (pos[b] >= 0 && pos[b + 1] >= 0 && pos[b + 1] < pos[b])
            w.flags |= 1u << b;  // e_{b+1} applied after e_b
    return w;
}

WordParams params(const TL1Word& word) {
    WordParams p;
    p.w = word.width();
    p.t = std::popcount(word.flags);
    p.v = p.w - word.length();
    uint32_t s = word.support;
    // gaps: maximal zero-runs strictly inside the support span
    bool in_gap = false;
    for (int i = 0; i < p.w; ++i) {
        bool present = s >> i & 1u;
        if (!present && !in_gap) { ++p.g; in_gap = true; }
        if (present) in_gap = false;
    }
    return p;
}

TL1Word translate(const TL1Word& word, int shift) {
    return {word.base + shift, word.support, word.flags};
}

TL1Word time_reverse(const TL1Word& word) {
    return {word.base, word.support, word.adjacent_pairs() & ~word.flags};
}

TL1Word reflect(const TL1Word& word, int pivot) {
    int w = word.width();
    TL1Word r;
    r.base = pivot - word.max_index();
    for (int i = 0; i < w; ++i)
        if (word.support >> i & 1u) r.support |= 1u << (w - 1 - i);
    // pair (base+i, base+i+1) maps to the mirrored pair; the time order of the
    // two letters is unchanged, so the mirrored flag is the negation
    uint32_t pairs = word.adjacent_pairs();
    for (int i = 0; i + 1 < w; ++i)
        if (pairs >> i & 1u) {
            bool f = word.flags >> i & 1u;
            if (!f) r.flags |= 1u << (w - 2 - i);
        }
    return r;
}

std::vector<TL1Word> enumerate_candidates(int k) {
    std::vector<TL1Word> out;
    if (k < 1) return out;
    for (int w = 1; w <= k; ++w) {
        uint32_t ends = 1u | (1u << (w - 1));
        uint32_t inner = w > 2 ? ((1u << (w - 1)) - 2u) : 0u;
        // iterate subsets of the inner bits
        uint32_t sub = 0;
        while (true) {
            uint32_t support = ends | sub;
            TL1Word base_word{0, support, 0};
            WordParams p = params(base_word);
            if (p.w + p.v + p.g <= k) {
                uint32_t pairs = base_word.adjacent_pairs();
                // iterate flag subsets of pairs
                uint32_t f = 0;
                while (true) {
                    out.push_back({0, support, f});
                    if (f == pairs) break;
                    f = (f - pairs) & pairs;  // next subset
                }
            }
            if (sub == inner) break;
            sub = (sub - inner) & inner;
        }
    }
    return out;
}

GeneralWord to_sequence(const TL1Word& word) {
    // Kahn order, smallest index first: written left-to-right, leftmost
    // applied last. Constraint per present pair (i,i+1): flag set means
    // e_{i+1} is applied after e_i, so e_{i+1} is written earlier.
    int w = word.width();
    GeneralWord seq;
    std::array<bool, 34> emitted{};
    auto present = [&](int i) { return i >= 0 && i < w && (word.support >> i & 1u); };
    auto ready = [&](int i) {
        if (emitted[i]) return false;
        // predecessor = neighbour that must be written before i
        if (present(i - 1) && (word.flags >> (i - 1) & 1u) == 0 && !emitted[i - 1])
            return false;  // pair (i-1,i) untransposed: i-1 written first
        if (present(i + 1) && (word.flags >> i & 1u) && !emitted[i + 1])
            return false;  // pair (i,i+1) transposed: i+1 written first
        return true;
    };
    int n = word.length();
    for (int step = 0; step < n; ++step) {
        for (int i = 0; i < w; ++i) {
            if (!present(i) || !ready(i)) continue;
            seq.push_back(word.base + i);
            emitted[i] = true;
            break;
        }
    }
    if (static_cast<int>(seq.size()) != n)
        throw std::logic_error("cyclic order constraint in TL1 word");
    return seq;
}

std::string notation(const GeneralWord& word) {
    std::string s = "[";
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(word[i]);
    }
    return s + "]";
}

std::string notation(const TL1Word& word) { return notation(to_sequence(word)); }

std::optional<TL1Word> parse_notation(const std::string& text) {
    std::string inner = text;
    auto l = inner.find('['), r = inner.rfind(']');
    if (l == std::string::npos || r == std::string::npos || r < l) return std::nullopt;
    std::istringstream in(inner.substr(l + 1, r - l - 1));
    GeneralWord seq;
    int x;
    while (in >> x) seq.push_back(x);
    if (seq.empty()) return std::nullopt;
    return canonical_tl1(seq);
}

const char* env_code_name(EnvCode c) {
    static const char* names[] = {
        "PL1", "PL2", "PL3", "PR1", "PR2", "PR3", "PP",
        "FL1", "FL2", "FL3", "FR1", "FR2", "FR3", "FF",
        "L1R1", "L1R2", "L1R3", "L2R1", "L2R2", "L2R3", "L3R1", "L3R2", "L3R3",
    };
    return names[static_cast<int>(c)];
}

namespace {

// side symbols: 0 = P, 1 = F, 2.. = vacancy suffix 1..3
int left_symbol(const TL1Word& w, int i) {
    if (i == 0) return 2 + 2;  // left end -> L3
    if (w.support >> (i - 1) & 1u)
        return (w.flags >> (i - 1) & 1u) ? 1 : 0;  // flag: e_i follows e_{i-1}
    int glen = 0;
    for (int x = i - 1; x >= 0 && !(w.support >> x & 1u); --x) ++glen;
    return glen == 1 ? 2 + 0 : 2 + 1;
}

int right_symbol(const TL1Word& w, int i, int width) {
    if (i + 1 < width && (w.support >> (i + 1) & 1u))
        return (w.flags >> i & 1u) ? 0 : 1;  // flag: e_i precedes e_{i+1}
    if (i == width - 1) return 2 + 2;        // right end -> R3
    int glen = 0;
    for (int x = i + 1; x < width && !(w.support >> x & 1u); ++x) ++glen;
    return glen == 1 ? 2 + 0 : 2 + 1;
}

}  // namespace

std::vector<std::pair<int, EnvCode>> classify_environments(const TL1Word& word) {
    std::vector<std::pair<int, EnvCode>> out;
    int width = word.width();
    for (int i = 0; i < width; ++i) {
        if (!(word.support >> i & 1u)) continue;
        int l = left_symbol(word, i);
        int r = right_symbol(word, i, width);
        EnvCode code;
        if (l < 2 && r < 2) {
            if (l != r) continue;  // PF / FP: neither initial nor final
            code = l == 0 ? EnvCode::PP : EnvCode::FF;
        } else if (l < 2) {  // P/F with a vacancy on the right
            int j = r - 2;
            code = l == 0 ? static_cast<EnvCode>(static_cast<int>(EnvCode::PR1) + j)
                          : static_cast<EnvCode>(static_cast<int>(EnvCode::FR1) + j);
        } else if (r < 2) {  // vacancy on the left
            int j = l - 2;
            code = r == 0 ? static_cast<EnvCode>(static_cast<int>(EnvCode::PL1) + j)
                          : static_cast<EnvCode>(static_cast<int>(EnvCode::FL1) + j);
        } else {
            code = static_cast<EnvCode>(static_cast<int>(EnvCode::L1R1) +
                                        3 * (l - 2) + (r - 2));
        }
        out.emplace_back(word.base + i, code);
    }
    return out;
}

}  // namespace tlc
