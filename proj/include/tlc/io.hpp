#pragma once

#include <string>
#include <vector>

#include "tlc/charges.hpp"

namespace tlc {

/// rows sorted by length then lexicographic notation (stable output order)
std::vector<std::pair<TL1Word, TauPoly>> sorted_terms(const ChargeDensity& d);

/// {"k": 4, "terms": [{"word": [0,1], "w":2,...,"coeff": [["-2",0]]}, ...]}
std::string charge_to_json(const ChargeDensity& d);

/// word<TAB>coefficient lines, same grammar as the fixtures
std::string charge_to_csv(const ChargeDensity& d);

/// a tabular mirroring the appendix layout
std::string charge_to_tex(const ChargeDensity& d);

}  // namespace tlc
