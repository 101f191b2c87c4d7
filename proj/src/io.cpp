#include "tlc/io.hpp"

#include <algorithm>

#include <json.hpp>

namespace tlc {

std::vector<std::pair<TL1Word, TauPoly>> sorted_terms(const ChargeDensity& d) {
    std::vector<std::pair<TL1Word, TauPoly>> rows(d.terms.begin(), d.terms.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        int la = a.first.length(), lb = b.first.length();
        if (la != lb) return la < lb;
        return notation(a.first) < notation(b.first);
    });
    return rows;
}

std::string charge_to_json(const ChargeDensity& d) {
    nlohmann::json j;
    j["k"] = d.k;
    j["terms"] = nlohmann::json::array();
    for (const auto& [cls, poly] : sorted_terms(d)) {
        nlohmann::json term;
        term["word"] = to_sequence(cls);
        WordParams p = params(cls);
        term["w"] = p.w;
        term["t"] = p.t;
        term["v"] = p.v;
        term["g"] = p.g;
        auto coeff = nlohmann::json::array();
        for (int e = 0; e <= poly.degree(); ++e)
            if (!poly[e].is_zero()) coeff.push_back({poly[e].str(), e});
        term["coeff"] = coeff;
        j["terms"].push_back(term);
    }
    return j.dump(2);
}

std::string charge_to_csv(const ChargeDensity& d) {
    std::string out;
    for (const auto& [cls, poly] : sorted_terms(d))
        out += notation(cls) + "\t" + poly.str() + "\n";
    return out;
}

std::string charge_to_tex(const ChargeDensity& d) {
    std::string out = "\\begin{tabular}{|c|r|}\\hline\n";
    out += "indices & $Q_" + std::to_string(d.k) + "$\\\\\\hline\n";
    for (const auto& [cls, poly] : sorted_terms(d)) {
        std::string c = poly.str();
        // tau -> \tau, * dropped
        std::string tex;
        for (size_t i = 0; i < c.size(); ++i) {
            if (c.compare(i, 3, "tau") == 0) { tex += "\\tau"; i += 2; }
            else if (c[i] != '*') tex += c[i];
        }
        out += notation(cls) + " & $" + tex + "$\\\\\n";
    }
    return out + "\\hline\\end{tabular}\n";
}

}  // namespace tlc
