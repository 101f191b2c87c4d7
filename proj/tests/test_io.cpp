#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "tlc/fixtures.hpp"
#include "tlc/io.hpp"

using namespace tlc;

TEST_CASE("polynomial grammar round trip") {
    for (const char* s : {"0", "2", "-2", "tau", "-tau", "2*tau", "2-2*tau^2",
                          "1+3*tau^2+3*tau^4", "-1/2+3/4*tau", "16+22*tau^2+tau^4"}) {
        TauPoly p = TauPoly::parse(s);
        CHECK(TauPoly::parse(p.str()) == p);
    }
    CHECK(TauPoly::parse("2-2*tau^2").str() == "2-2*tau^2");
    CHECK_THROWS(TauPoly::parse(""));
    CHECK_THROWS(TauPoly::parse("2+bogus"));
}

TEST_CASE("json export carries words, parameters and coefficients") {
    auto j = nlohmann::json::parse(charge_to_json(build_charge(4)));
    CHECK(j["k"] == 4);
    REQUIRE(j["terms"].size() == 12);
    // canonical order: by length, then notation; first term is [0 1]
    auto& first = j["terms"][0];
    CHECK(first["word"] == nlohmann::json::array({0, 1}));
    CHECK(first["w"] == 2);
    CHECK(first["t"] == 0);
    CHECK(first["v"] == 0);
    CHECK(first["g"] == 0);
    CHECK(first["coeff"] == nlohmann::json::array({{"-2", 0}}));
}

TEST_CASE("csv export matches the fixture rows") {
    std::string csv = charge_to_csv(build_charge(4));
    Fixture fix = load_fixture('Q', 4);
    size_t rows = 0;
    for (const auto& [word, poly] : fix.rows) {
        CHECK(csv.find(word + "\t" + poly.str() + "\n") != std::string::npos);
        ++rows;
    }
    CHECK(rows == 12);
}

TEST_CASE("tex export contains the table skeleton") {
    std::string tex = charge_to_tex(build_charge(2));
    CHECK(tex.find("\\begin{tabular}") != std::string::npos);
    CHECK(tex.find("[0 1] & $2$") != std::string::npos);
    CHECK(tex.find("[1 0] & $-2$") != std::string::npos);
}

TEST_CASE("all shipped fixtures parse and diff cleanly against themselves") {
    auto all = load_fixtures();
    CHECK(all.size() == 18);
    for (const Fixture& f : all) {
        ChargeDensity d = f.density();
        // invert the normalization so diff re-applies it
        for (auto& [cls, poly] : d.terms) poly *= Frac(1) / f.norm;
        CHECK(diff(f, d).clean());
    }
}

TEST_CASE("fixture parse errors carry a location") {
    try {
        load_fixture("/nonexistent/q0.tsv");
        FAIL("expected a throw");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("q0.tsv") != std::string::npos);
    }
}
