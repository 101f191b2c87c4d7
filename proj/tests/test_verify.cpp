#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlc/verify.hpp"

using namespace tlc;

namespace {
TL1Word cls(std::initializer_list<int> seq) { return *canonical_tl1(GeneralWord(seq)); }
}  // namespace

TEST_CASE("commutator density vanishes") {
    for (int k = 1; k <= 6; ++k) {
        CommutatorDensity cd = commutator_density(k);
        INFO("k=", k, " first terms: ",
         cd.terms.empty() ? "" : cd.terms.begin()->first.str());
        CHECK(cd.empty());
    }
}

TEST_CASE("a perturbed charge fails the commutator check") {
    ChargeDensity q = build_charge(3);
    auto it = q.terms.find(cls({0, 1}));
    REQUIRE(it != q.terms.end());
    it->second = -it->second;
    CHECK_FALSE(commutator_density(q).empty());
}

TEST_CASE("any triangle solution conserves") {
    auto alt = [](int k, int w, int t) -> Frac {
        if (w > k) return Frac(0);
        std::function<Frac(int, int)> z = [&](int ww, int tt) -> Frac {
            if (ww > k) return Frac(0);
            if (ww == k) return Frac((tt % 2) ? -1 : 1);
            if (tt == 0) return Frac(2 + ww);  // arbitrary seeds
            return -z(ww, tt - 1) - z(ww + 1, tt);
        };
        return z(w, t);
    };
    for (int k = 2; k <= 5; ++k) {
        REQUIRE(triangle_check(k, k + 1, alt));
        CHECK(commutator_density(k, alt).empty());
    }
}

TEST_CASE("s_direct vanishes on doubled-monoid words") {
    // e_sigma appearing twice: the reduced word e_1 e_0 e_2 e_1
    auto [d, loops] = word_diagram({1, 0, 2, 1});
    REQUIRE(loops == 0);
    for (int k = 2; k <= 5; ++k) CHECK(s_direct(k, d).is_zero());
}

TEST_CASE("s_env equals s_direct and vanishes on the reachable set") {
    for (int k = 2; k <= 5; ++k) {
        ReachableSet rs = reachable_words(k);
        REQUIRE(!rs.tl1.empty());
        for (const TL1Word& p : rs.tl1) {
            TauPoly direct = s_direct(k, p);
            TauPoly env = s_env(k, p);
            INFO("k=", k, " p=", notation(p), " direct=", direct.str(),
                 " env=", env.str());
            CHECK(direct.is_zero());
            CHECK(env == direct);
        }
        for (const Diagram& d : rs.all) CHECK(s_direct(k, d).is_zero());
    }
}

TEST_CASE("out-of-reach words have empty contribution sets") {
    for (int k = 2; k <= 4; ++k) {
        // width k+2 connected word cannot be reached from TL1 x e products
        GeneralWord seq;
        for (int i = 0; i < k + 2; ++i) seq.push_back(i);
        CHECK(s_direct(k, cls({0, 1, 2, 3, 4, 5})).is_zero());
        (void)seq;
    }
}

TEST_CASE("isolated monoid codes cancel pairwise") {
    WordParams p{5, 1, 2, 2};
    for (int k = 3; k <= 8; ++k) {
        CHECK(env_contribution(EnvCode::L1R1, k, p).is_zero());
        CHECK(env_contribution(EnvCode::L2R2, k, p).is_zero());
        CHECK(env_contribution(EnvCode::L3R3, k, p).is_zero());
        CHECK((env_contribution(EnvCode::L1R2, k, p) +
               env_contribution(EnvCode::L2R1, k, p))
                  .is_zero());
    }
}

TEST_CASE("identities and the four-parameter solution") {
    for (int k = 2; k <= 8; ++k) {
        IdentityReport rep = check_identities(k);
        INFO("k=", k, " violation: ", rep.first_violation);
        CHECK(rep.passed);
        CHECK(rep.tuples_checked > 0);
    }
}

TEST_CASE("a patched Z violates the in-range identities") {
    auto bad = [](int k, int w, int t) -> Frac {
        Frac v = z_value(k, w, t);
        if (w == k && t == 1) v += Frac(1);  // break the triangle equation
        return v;
    };
    REQUIRE_FALSE(triangle_check(5, 6, bad));
    IdentityReport rep = check_identities(5, bad);
    CHECK_FALSE(rep.passed);
    CHECK_FALSE(rep.first_violation.empty());
}
