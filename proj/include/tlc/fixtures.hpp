#pragma once

#include <string>
#include <vector>

#include "tlc/charges.hpp"

namespace tlc {

/// A golden table: one (series, k) pair from the appendix tables.
/// The stored coefficients include the table normalization (e.g. the
/// A columns are printed as norm * A_k to avoid fractions).
struct Fixture {
    char series = 'Q';  ///< 'Q', 'A' or 'G'
    int k = 0;
    Frac norm = Frac(1);
    std::vector<std::pair<std::string, TauPoly>> rows;  ///< notation -> value

    ChargeDensity density() const;
};

Fixture load_fixture(const std::string& path);

/// directory containing q2.tsv ... g7.tsv; the built-in default can be
/// overridden with the TLCHARGES_FIXTURES environment variable
std::string fixture_dir();
Fixture load_fixture(char series, int k);

/// every golden table shipped with the build (Q/A/G, k = 2..7)
std::vector<Fixture> load_fixtures();

struct DiffEntry {
    std::string word;
    TauPoly expected;  ///< zero when the word is extra
    TauPoly actual;    ///< zero when the word is missing
};

struct DiffReport {
    std::vector<DiffEntry> entries;
    bool clean() const { return entries.empty(); }
    std::string str() const;
};

/// exact comparison of a computed density against a fixture after applying
/// the fixture normalization to the computed values
DiffReport diff(const Fixture& fixture, const ChargeDensity& computed);

}  // namespace tlc
