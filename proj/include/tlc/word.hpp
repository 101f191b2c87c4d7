#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tlc {

/// A product of monoids e_{i}, kept as the sequence of indices.
/// The LAST element is applied first (rightmost operator factor).
using GeneralWord = std::vector<int>;

GeneralWord from_sequence(const std::vector<int>& indices);

struct WordParams {
    int w = 0;  ///< width: (max - min) + 1
    int t = 0;  ///< transpositions: adjacent pairs with e_{i+1} applied after e_i
    int v = 0;  ///< vacancies
    int g = 0;  ///< gaps (maximal runs of vacancies)
    bool operator==(const WordParams&) const = default;
};

/// Canonical form of a word in which every monoid occurs exactly once.
/// support bit i  => index base+i present (bit 0 and the top bit always set);
/// flags   bit i  => pair (base+i, base+i+1) transposed, i.e. e_{base+i+1}
///                   is applied after e_{base+i}.
struct TL1Word {
    int32_t base = 0;
    uint32_t support = 0;
    uint32_t flags = 0;

    int width() const { return 32 - std::countl_zero(support); }
    int length() const { return std::popcount(support); }
    int min_index() const { return base; }
    int max_index() const { return base + width() - 1; }
    bool contains(int i) const {
        return i >= base && i < base + 32 && (support >> (i - base) & 1u);
    }
    /// mask of pairs {i, i+1} with both endpoints in the support
    uint32_t adjacent_pairs() const { return support & (support >> 1); }

    bool operator==(const TL1Word&) const = default;
    auto operator<=>(const TL1Word&) const = default;
};

struct TL1WordHash {
    size_t operator()(const TL1Word& w) const {
        uint64_t h = (uint64_t(uint32_t(w.base)) << 32) ^ w.support;
        h = h * 0x9e3779b97f4a7c15ull ^ w.flags;
        return std::hash<uint64_t>{}(h * 0xff51afd7ed558ccdull);
    }
};

/// Canonical TL1 form, or nullopt when some index repeats.
std::optional<TL1Word> canonical_tl1(const GeneralWord& word);

WordParams params(const TL1Word& word);

TL1Word translate(const TL1Word& word, int shift);

/// Spatial reflection i -> pivot - i.
TL1Word reflect(const TL1Word& word, int pivot);

/// Reversal of the application order: every adjacent-pair flag negates.
TL1Word time_reverse(const TL1Word& word);

/// One representative (min index 0) per translation class with w+v+g <= k.
std::vector<TL1Word> enumerate_candidates(int k);

/// Product sequence realizing the class, indices increasing where the
/// algebra allows (the display convention of the tables).
GeneralWord to_sequence(const TL1Word& word);

/// "[2 1 0 3 4 5]" notation; the last listed index is applied first.
std::string notation(const TL1Word& word);
std::string notation(const GeneralWord& word);
std::optional<TL1Word> parse_notation(const std::string& text);

// ---------------------------------------------------------------------------
// Environment codes of initial/final monoids (the 23 two-symbol codes).

enum class EnvCode : uint8_t {
    PL1, PL2, PL3, PR1, PR2, PR3, PP,
    FL1, FL2, FL3, FR1, FR2, FR3, FF,
    L1R1, L1R2, L1R3, L2R1, L2R2, L2R3, L3R1, L3R2, L3R3,
};

const char* env_code_name(EnvCode c);

/// Codes of all initial-or-final monoids of the word; monoids strictly
/// between their neighbours (PF/FP) are omitted.
std::vector<std::pair<int, EnvCode>> classify_environments(const TL1Word& word);

}  // namespace tlc
