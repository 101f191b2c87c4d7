#pragma once

#include <string>
#include <vector>

#include "tlc/frac.hpp"

namespace tlc {

/// Polynomial in the loop weight tau with exact rational coefficients.
/// Dense storage by exponent; degrees stay small (<= order of the charge).
class TauPoly {
  public:
    using Coeff = Frac;

    TauPoly() = default;
    explicit TauPoly(Coeff c) {
        if (!c.is_zero()) coef_.push_back(c);
    }
    static TauPoly tau(int power, Coeff c = Coeff(1)) {
        TauPoly p;
        if (c.is_zero()) return p;
        p.coef_.assign(power + 1, Coeff(0));
        p.coef_[power] = c;
        return p;
    }

    bool is_zero() const { return coef_.empty(); }
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    const Coeff& operator[](int e) const {
        static const Coeff zero(0);
        return e >= 0 && e <= degree() ? coef_[e] : zero;
    }

    TauPoly& operator+=(const TauPoly& o) {
        if (o.coef_.size() > coef_.size()) coef_.resize(o.coef_.size());
        for (size_t i = 0; i < o.coef_.size(); ++i) coef_[i] += o.coef_[i];
        trim();
        return *this;
    }
    /// *this += o * tau^shift, without temporaries
    TauPoly& add_shifted(const TauPoly& o, int shift) {
        if (o.coef_.empty()) return *this;
        if (o.coef_.size() + shift > coef_.size()) coef_.resize(o.coef_.size() + shift);
        for (size_t i = 0; i < o.coef_.size(); ++i) coef_[i + shift] += o.coef_[i];
        trim();
        return *this;
    }
    bool is_one() const { return coef_.size() == 1 && coef_[0] == Coeff(1); }
    TauPoly& operator-=(const TauPoly& o) {
        if (o.coef_.size() > coef_.size()) coef_.resize(o.coef_.size());
        for (size_t i = 0; i < o.coef_.size(); ++i) coef_[i] -= o.coef_[i];
        trim();
        return *this;
    }
    friend TauPoly operator+(TauPoly a, const TauPoly& b) { return a += b; }
    friend TauPoly operator-(TauPoly a, const TauPoly& b) { return a -= b; }

    friend TauPoly operator*(const TauPoly& a, const TauPoly& b) {
        TauPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.coef_.assign(a.coef_.size() + b.coef_.size() - 1, Coeff(0));
        for (size_t i = 0; i < a.coef_.size(); ++i) {
            if (a.coef_[i].is_zero()) continue;
            for (size_t j = 0; j < b.coef_.size(); ++j)
                if (!b.coef_[j].is_zero()) r.coef_[i + j] += a.coef_[i] * b.coef_[j];
        }
        r.trim();
        return r;
    }
    TauPoly& operator*=(const TauPoly& o) { return *this = *this * o; }
    TauPoly& operator*=(const Coeff& c) {
        if (c.is_zero()) { coef_.clear(); return *this; }
        for (auto& x : coef_) x *= c;
        return *this;
    }
    friend TauPoly operator*(TauPoly a, const Coeff& c) { return a *= c; }
    TauPoly operator-() const {
        TauPoly r = *this;
        for (auto& x : r.coef_) x = -x;
        return r;
    }
    /// Multiply by tau^n (n >= 0).
    TauPoly& shift(int n) {
        if (!coef_.empty() && n > 0) coef_.insert(coef_.begin(), n, Coeff(0));
        return *this;
    }

    bool operator==(const TauPoly& o) const { return coef_ == o.coef_; }
    bool operator!=(const TauPoly& o) const { return coef_ != o.coef_; }

    template <typename Scalar>
    Scalar eval(const Scalar& tau_value) const {
        Scalar acc{};
        for (size_t i = coef_.size(); i-- > 0;) {
            if constexpr (std::is_constructible_v<Scalar, long long>)
                acc = acc * tau_value +
                      Scalar(coef_[i].num()) / Scalar(coef_[i].den());
            else
                acc = acc * tau_value + Scalar(coef_[i].to_double());
        }
        return acc;
    }

    /// "2-2*tau^2" style rendering; matches the fixture grammar.
    std::string str() const;
    static TauPoly parse(const std::string& text);

  private:
    void trim() {
        while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
    }
    std::vector<Coeff> coef_;
};

}  // namespace tlc
