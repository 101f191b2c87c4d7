#include "tlc/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef TLC_FIXTURE_DIR
#define TLC_FIXTURE_DIR "fixtures"
#endif

namespace tlc {

ChargeDensity Fixture::density() const {
    ChargeDensity d;
    d.k = k;
    for (const auto& [word, poly] : rows) {
        auto cls = parse_notation(word);
        if (!cls) throw std::runtime_error("unparsable fixture word: " + word);
        if (!d.terms.emplace(*cls, poly).second)
            throw std::runtime_error("duplicate fixture class: " + word);
    }
    return d;
}

Fixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture: " + path);
    Fixture f;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string tok;
            while (hs >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) continue;
                std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
                if (key == "series") f.series = val.empty() ? 'Q' : val[0];
                else if (key == "k") f.k = std::stoi(val);
                else if (key == "norm") f.norm = Frac::parse(val);
            }
            continue;
        }
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected word<TAB>coefficient");
        try {
            f.rows.emplace_back(line.substr(0, tab), TauPoly::parse(line.substr(tab + 1)));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (f.k == 0) throw std::runtime_error(path + ": missing k header");
    return f;
}

std::string fixture_dir() {
    if (const char* env = std::getenv("TLCHARGES_FIXTURES")) return env;
    return TLC_FIXTURE_DIR;
}

Fixture load_fixture(char series, int k) {
    std::string name(1, static_cast<char>(std::tolower(series)));
    return load_fixture(fixture_dir() + "/" + name + std::to_string(k) + ".tsv");
}

std::vector<Fixture> load_fixtures() {
    std::vector<Fixture> all;
    for (char series : {'Q', 'A', 'G'})
        for (int k = 2; k <= 7; ++k) all.push_back(load_fixture(series, k));
    return all;
}

DiffReport diff(const Fixture& fixture, const ChargeDensity& computed) {
    DiffReport rep;
    ChargeDensity want = fixture.density();
    for (const auto& [cls, expect] : want.terms) {
        auto it = computed.terms.find(cls);
        TauPoly actual = it == computed.terms.end() ? TauPoly() : it->second * fixture.norm;
        if (actual != expect) rep.entries.push_back({notation(cls), expect, actual});
    }
    for (const auto& [cls, poly] : computed.terms) {
        if (want.terms.count(cls)) continue;
        TauPoly actual = poly * fixture.norm;
        if (!actual.is_zero()) rep.entries.push_back({notation(cls), TauPoly(), actual});
    }
    std::sort(rep.entries.begin(), rep.entries.end(),
              [](const DiffEntry& a, const DiffEntry& b) {
                  return std::make_pair(a.word.size(), a.word) <
                         std::make_pair(b.word.size(), b.word);
              });
    return rep;
}

std::string DiffReport::str() const {
    if (clean()) return "identical";
    std::string s;
    for (const auto& e : entries) {
        s += e.word + ": expected " + e.expected.str() + ", got " + e.actual.str() + "\n";
    }
    return s;
}

}  // namespace tlc
