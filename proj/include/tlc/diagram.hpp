#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "tlc/tau_poly.hpp"
#include "tlc/word.hpp"

namespace tlc {

/// Open-chain Temperley-Lieb diagram: a planar perfect matching of the
/// 2n boundary points of a window of n strands starting at strand `lo`.
/// Points 0..n-1 are the bottom row, n..2n-1 the top row, both left to
/// right. Strands outside the window are implicit through-strands, and the
/// window is minimal (its edge strands are not plain through-strands).
/// The identity is the empty window.
class Diagram {
  public:
    static constexpr int kMaxStrands = 40;

    Diagram() : lo_(0), n_(0) { pair_.fill(0); }

    /// cup-cap diagram of the generator e_i
    static Diagram generator(int i) {
        Diagram d;
        d.lo_ = static_cast<int16_t>(i);
        d.n_ = 2;
        d.pair_[0] = 1; d.pair_[1] = 0;   // bottom cup
        d.pair_[2] = 3; d.pair_[3] = 2;   // top cap
        return d;
    }

    bool is_identity() const { return n_ == 0; }
    int lo() const { return lo_; }
    int strands() const { return n_; }
    int hi() const { return lo_ + n_; }
    int partner(int p) const { return pair_[p]; }

    Diagram translated(int shift) const {
        Diagram d = *this;
        if (d.n_) d.lo_ = static_cast<int16_t>(d.lo_ + shift);
        return d;
    }

    bool operator==(const Diagram& o) const {
        return lo_ == o.lo_ && n_ == o.n_ &&
               std::equal(pair_.begin(), pair_.begin() + 2 * n_, o.pair_.begin());
    }
    bool operator<(const Diagram& o) const;

    /// planarity of the pairing (interval nesting on the boundary circle)
    bool is_planar() const;

    std::string str() const;

  private:
    friend struct DiagramHash;
    friend Diagram compose(const Diagram&, const Diagram&, int&);
    int16_t lo_;
    uint8_t n_;
    std::array<uint8_t, 2 * kMaxStrands> pair_;
};

struct DiagramHash {
    size_t operator()(const Diagram& d) const;
};

/// Stack `a` on top of `b` (a applied after b); closed loops are removed
/// and counted in `loops`.
Diagram compose(const Diagram& a, const Diagram& b, int& loops);

/// Shift a non-identity diagram to lo = 0; returns the applied shift.
/// Throws for the identity diagram.
std::pair<Diagram, int> normalize_translation(const Diagram& d);

/// Finite linear combination of diagrams over tau-polynomials.
class LinComb {
  public:
    using Map = std::unordered_map<Diagram, TauPoly, DiagramHash>;

    LinComb() = default;
    static LinComb unit() { return single(Diagram(), TauPoly(Frac(1))); }
    static LinComb single(const Diagram& d, TauPoly c) {
        LinComb l;
        if (!c.is_zero()) l.terms_.emplace(d, std::move(c));
        return l;
    }

    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }

    void add_term(const Diagram& d, const TauPoly& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(d, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    /// accumulate c * tau^shift on d
    void add_term_shifted(const Diagram& d, const TauPoly& c, int shift) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(d);
        it->second.add_shifted(c, shift);
        if (it->second.is_zero()) terms_.erase(it);
    }
    void reserve(size_t n) { terms_.reserve(n); }
    LinComb& operator+=(const LinComb& o) {
        for (auto& [d, c] : o.terms_) add_term(d, c);
        return *this;
    }
    LinComb& scale(const TauPoly& c);
    LinComb& scale(const Frac& c);

    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }

  private:
    Map terms_;
};

LinComb add(LinComb a, const LinComb& b);
LinComb scale(LinComb a, const TauPoly& c);
LinComb mul(const LinComb& a, const LinComb& b);

/// Diagram of a word with the tau^loops factor from its reduction.
LinComb embed_word(const GeneralWord& word);
std::pair<Diagram, int> word_diagram(const GeneralWord& word);

/// Diagram of a TL1 class representative (never produces loops).
Diagram tl1_diagram(const TL1Word& word);

/// Recognition table diagram -> TL1 class for all classes of width <= maxw
/// (any support, any flags), translation-normalized to lo = 0.
class TL1DiagramIndex {
  public:
    explicit TL1DiagramIndex(int maxw);
    /// class of a lo=0 diagram, or nullopt when the diagram is not a
    /// single-occurrence word
    std::optional<TL1Word> lookup(const Diagram& d) const;

  private:
    std::unordered_map<Diagram, TL1Word, DiagramHash> map_;
};

}  // namespace tlc
