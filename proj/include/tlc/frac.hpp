#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tlc {

/// Exact rational on 64-bit components, always normalized (d > 0, gcd = 1).
/// Intermediate products use 128-bit arithmetic and any result that does not
/// fit 64 bits throws; exactness is never silently lost.
class Frac {
  public:
    constexpr Frac() = default;
    constexpr Frac(long long n) : n_(n) {}
    Frac(long long n, long long d) : n_(n), d_(d) { normalize(); }

    long long num() const { return n_; }
    long long den() const { return d_; }
    bool is_zero() const { return n_ == 0; }
    bool is_integer() const { return d_ == 1; }

    friend Frac operator+(const Frac& a, const Frac& b) {
        __int128 n = i128(a.n_) * b.d_ + i128(b.n_) * a.d_;
        return make(n, i128(a.d_) * b.d_);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        __int128 n = i128(a.n_) * b.d_ - i128(b.n_) * a.d_;
        return make(n, i128(a.d_) * b.d_);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return make(i128(a.n_) * b.n_, i128(a.d_) * b.d_);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.n_ == 0) throw std::domain_error("rational division by zero");
        return make(i128(a.n_) * b.d_, i128(a.d_) * b.n_);
    }
    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }
    Frac& operator/=(const Frac& o) { return *this = *this / o; }
    Frac operator-() const {
        Frac f;
        f.n_ = -n_;
        f.d_ = d_;
        return f;
    }

    friend bool operator==(const Frac& a, const Frac& b) {
        return a.n_ == b.n_ && a.d_ == b.d_;
    }
    friend std::strong_ordering operator<=>(const Frac& a, const Frac& b) {
        __int128 l = i128(a.n_) * b.d_, r = i128(b.n_) * a.d_;
        return l < r ? std::strong_ordering::less
               : l > r ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    double to_double() const { return double(n_) / double(d_); }
    std::string str() const {
        std::string s = std::to_string(n_);
        if (d_ != 1) s += "/" + std::to_string(d_);
        return s;
    }
    static Frac parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Frac(std::stoll(s));
        return Frac(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }

    /// generalized binomial n(n-1)...(n-m+1)/m!; 1 at m = 0 for every n
    static Frac binomial(long long n, long long m) {
        if (m < 0) return Frac(0);
        Frac r(1);
        for (long long i = 0; i < m; ++i) r *= Frac(n - i, i + 1);
        return r;
    }

  private:
    using i128 = __int128;
    static Frac make(i128 n, i128 d) {
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        Frac f;
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        f.n_ = static_cast<long long>(n);
        f.d_ = static_cast<long long>(d);
        return f;
    }
    static i128 gcd128(i128 a, i128 b) {
        while (b) { i128 t = a % b; a = b; b = t; }
        return a ? a : 1;
    }
    void normalize() {
        if (d_ == 0) throw std::domain_error("zero denominator");
        *this = make(n_, d_);
    }
    long long n_ = 0;
    long long d_ = 1;
};

inline std::string to_string(const Frac& f) { return f.str(); }

/// spec-facing name for the generalized binomial
inline Frac binom_gen(long long n, long long m) { return Frac::binomial(n, m); }

}  // namespace tlc
