#include "tlc/tau_poly.hpp"

#include <cctype>
#include <stdexcept>

namespace tlc {

std::string TauPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = 0; e <= degree(); ++e) {
        const Coeff& c = coef_[e];
        if (c.is_zero()) continue;
        Coeff a = c < Coeff(0) ? -c : c;
        out += (c < Coeff(0)) ? "-" : (out.empty() ? "" : "+");
        if (e == 0) {
            out += a.str();
        } else {
            if (a != Coeff(1)) out += a.str() + "*";
            out += e == 1 ? "tau" : "tau^" + std::to_string(e);
        }
    }
    return out;
}

TauPoly TauPoly::parse(const std::string& text) {
    TauPoly out;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i >= text.size()) throw std::invalid_argument("empty polynomial");
    while (i < text.size()) {
        skip_ws();
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        }
        Coeff c(1);
        bool have_num = false;
        size_t start = i;
        while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
            ++i;
        if (i > start) {
            c = Coeff::parse(text.substr(start, i - start));
            have_num = true;
        }
        skip_ws();
        if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
        int e = 0;
        if (text.compare(i, 3, "tau") == 0) {
            i += 3;
            e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                size_t es = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (i == es) throw std::invalid_argument("missing exponent: " + text);
                e = std::stoi(text.substr(es, i - es));
            }
        } else if (!have_num) {
            throw std::invalid_argument("bad term in polynomial: " + text);
        }
        if (sign < 0) c = -c;
        out += TauPoly::tau(e, c);
        skip_ws();
    }
    return out;
}

}  // namespace tlc
