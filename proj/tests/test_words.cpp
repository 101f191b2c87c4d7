#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "tlc/word.hpp"

using namespace tlc;

namespace {

TL1Word cls(std::initializer_list<int> seq) {
    auto w = canonical_tl1(GeneralWord(seq));
    REQUIRE(w.has_value());
    return *w;
}

// the word of figure 1
const GeneralWord kFig1 = {2, 1, 3, 4, 10, 9, 8, 7, 6, 11, 13, 12, 17, 20, 19};

}  // namespace

TEST_CASE("canonical form separates application orders") {
    TL1Word a = cls({0, 1});
    CHECK(a.support == 0b11u);
    CHECK(a.flags == 0u);  // e_1 applied first: no transposition
    TL1Word b = cls({1, 0});
    CHECK(b.flags == 1u);
    CHECK(a != b);
    CHECK_FALSE(canonical_tl1({0, 0}).has_value());
    CHECK_FALSE(canonical_tl1({}).has_value());
}

TEST_CASE("canonicalization is a congruence for commuting swaps") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + int(rng() % 6);
        std::vector<int> seq;
        std::set<int> used;
        while (static_cast<int>(seq.size()) < n) {
            int i = int(rng() % 8);
            if (used.insert(i).second) seq.push_back(i);
        }
        auto w1 = canonical_tl1(seq);
        // swap a random commuting adjacent pair
        for (size_t i = 0; i + 1 < seq.size(); ++i) {
            if (std::abs(seq[i] - seq[i + 1]) > 1) {
                auto seq2 = seq;
                std::swap(seq2[i], seq2[i + 1]);
                CHECK(canonical_tl1(seq2) == w1);
            }
        }
    }
}

TEST_CASE("parameters of the figure-1 word") {
    auto w = canonical_tl1(kFig1);
    REQUIRE(w.has_value());
    WordParams p = params(*w);
    CHECK(p.w == 20);
    CHECK(p.t == 7);
    CHECK(p.v == 5);
    CHECK(p.g == 3);
}

TEST_CASE("parameters of small words") {
    CHECK(params(cls({5})) == WordParams{1, 0, 0, 0});
    CHECK(params(cls({0, 2})) == WordParams{3, 0, 1, 1});
    CHECK(params(cls({2, 1, 0, 3, 4, 5})) == WordParams{6, 2, 0, 0});
}

TEST_CASE("translation invariance of params") {
    for (const TL1Word& w : enumerate_candidates(6)) {
        CHECK(params(translate(w, 11)) == params(w));
        CHECK(params(translate(w, -3)) == params(w));
    }
}

TEST_CASE("time reversal negates flags and is an involution") {
    TL1Word a = cls({0, 1});
    CHECK(time_reverse(a) == cls({1, 0}));
    for (const TL1Word& w : enumerate_candidates(6)) {
        CHECK(time_reverse(time_reverse(w)) == w);
        WordParams p = params(w), q = params(time_reverse(w));
        int pairs = std::popcount(w.adjacent_pairs());
        CHECK(q.t == pairs - p.t);
        // the connected-word rule t -> w - t - 1
        if (p.v == 0) CHECK(q.t == p.w - p.t - 1);
    }
}

TEST_CASE("reflection mirrors the product") {
    CHECK(reflect(cls({0, 1}), 1) == cls({1, 0}));
    CHECK(reflect(cls({0}), 0) == cls({0}));
    for (const TL1Word& w : enumerate_candidates(6)) {
        CHECK(reflect(reflect(w, 9), 9) == w);
        CHECK(params(reflect(w, 4)).t == params(time_reverse(w)).t);
    }
}

TEST_CASE("candidate enumeration") {
    auto c1 = enumerate_candidates(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0] == cls({0}));

    auto c2 = enumerate_candidates(2);
    std::set<TL1Word> s2(c2.begin(), c2.end());
    CHECK(s2 == std::set<TL1Word>{cls({0}), cls({0, 1}), cls({1, 0})});

    auto c5 = enumerate_candidates(5);
    std::set<TL1Word> s5(c5.begin(), c5.end());
    CHECK(s5.size() == c5.size());  // no duplicates
    CHECK(s5.count(cls({0, 2})) == 1);
    int len5 = 0;
    for (const auto& w : c5) {
        WordParams p = params(w);
        CHECK(p.w + p.v + p.g <= 5);
        CHECK(w.min_index() == 0);
        if (w.length() == 5) ++len5;
    }
    CHECK(len5 == 16);  // 2^{k-1} full-length words
}

TEST_CASE("full-length candidate count is 2^(k-1)") {
    for (int k = 1; k <= 9; ++k) {
        int n = 0;
        for (const auto& w : enumerate_candidates(k))
            if (w.length() == k) ++n;
        CHECK(n == 1 << (k - 1));
    }
}

TEST_CASE("notation round trip and display convention") {
    CHECK(notation(cls({2, 1, 0, 3, 4, 5})) == "[2 1 0 3 4 5]");
    CHECK(notation(cls({1, 0, 2})) == "[1 0 2]");
    CHECK(notation(cls({0, 2, 1})) == "[0 2 1]");
    CHECK(notation(cls({1, 0, 3, 2, 4, 5})) == "[1 0 3 2 4 5]");
    for (const TL1Word& w : enumerate_candidates(6)) {
        auto back = parse_notation(notation(w));
        REQUIRE(back.has_value());
        CHECK(*back == w);
    }
}

TEST_CASE("environment codes of the figure-1 word") {
    auto w = canonical_tl1(kFig1);
    REQUIRE(w.has_value());
    auto codes = classify_environments(translate(*w, -w->min_index() + 1));
    // translate back to the figure's numbering (support starts at 1)
    std::vector<std::pair<int, EnvCode>> expect = {
        {1, EnvCode::PL3},  {2, EnvCode::FF},   {4, EnvCode::PR1},
        {6, EnvCode::PL1},  {10, EnvCode::FF},  {12, EnvCode::PP},
        {13, EnvCode::FR2}, {17, EnvCode::L2R1}, {19, EnvCode::PL1},
        {20, EnvCode::FR3},
    };
    CHECK(codes == expect);
}

TEST_CASE("environment codes of tiny words") {
    auto single = classify_environments(cls({0}));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == std::pair<int, EnvCode>{0, EnvCode::L3R3});

    auto two = classify_environments(cls({0, 1}));
    REQUIRE(two.size() == 2);
    CHECK(two[0] == std::pair<int, EnvCode>{0, EnvCode::FL3});
    CHECK(two[1] == std::pair<int, EnvCode>{1, EnvCode::PR3});
}

TEST_CASE("environment code bookkeeping counts") {
    for (const TL1Word& w : enumerate_candidates(7)) {
        int nP = 0, nF = 0, nL[4] = {0, 0, 0, 0}, nR[4] = {0, 0, 0, 0};
        for (auto [site, code] : classify_environments(w)) {
            std::string name = env_code_name(code);
            for (size_t i = 0; i < name.size(); ++i) {
                if (name[i] == 'P') ++nP;
                else if (name[i] == 'F') ++nF;
                else if (name[i] == 'L') ++nL[name[i + 1] - '0'];
                else if (name[i] == 'R') ++nR[name[i + 1] - '0'];
            }
        }
        // interior monoids (PF/FP) carry one P and one F as well
        WordParams p = params(w);
        int interior = 0;
        for (int i = 0; i < p.w; ++i) {
            if (!w.contains(i)) continue;
            bool lp = i > 0 && w.contains(i - 1), rp = w.contains(i + 1);
            if (lp && rp) {
                bool lf = w.flags >> (i - 1) & 1, rplus = w.flags >> i & 1;
                if (lf != rplus) ++interior;   // PF or FP
            }
        }
        CHECK(nP + interior == nF + interior);
        CHECK(nP == nF);
        CHECK(nL[3] == 1);
        CHECK(nR[3] == 1);
        CHECK(nL[1] == nR[1]);
        CHECK(nL[2] == nR[2]);
    }
}
