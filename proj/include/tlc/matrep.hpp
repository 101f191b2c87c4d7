#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <boost/multiprecision/eigen.hpp>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tlc/charges.hpp"
#include "tlc/rational.hpp"
#include "tlc/word.hpp"

namespace tlc {

using Cplx = std::complex<double>;

enum class TwistKind { None, Diagonal, General };

/// Chain parameters over the chosen scalar field (exact rationals or
/// complex doubles). The diagonal twist T = diag(t, 1/t) is the true twist
/// exp(f S^z) with t = e^f; a general twist is any det-1 matrix.
template <typename Scalar>
struct ChainParams {
    int L = 4;
    Scalar q{};
    TwistKind twist = TwistKind::None;
    Eigen::Matrix<Scalar, 2, 2> twist_matrix = Eigen::Matrix<Scalar, 2, 2>::Identity();

    Scalar tau() const { return -q - Scalar(1) / q; }

    static ChainParams untwisted(int L, Scalar q) { return {L, q, TwistKind::None, {}}; }
    static ChainParams diagonal(int L, Scalar q, Scalar t) {
        ChainParams p{L, q, TwistKind::Diagonal, {}};
        p.twist_matrix.setZero();
        p.twist_matrix(0, 0) = t;
        p.twist_matrix(1, 1) = Scalar(1) / t;
        return p;
    }
    static ChainParams general(int L, Scalar q, Eigen::Matrix<Scalar, 2, 2> T) {
        ChainParams p{L, q, TwistKind::General, std::move(T)};
        return p;
    }
};

template <typename Scalar>
using SpinOperator = Eigen::SparseMatrix<Scalar>;

namespace detail {

/// basis: site 0 is the most significant bit; bit 0 means spin up (Sz = +1)
inline int bit_of(int state, int site, int L) { return state >> (L - 1 - site) & 1; }
inline int flip2(int state, int a, int b, int L) {
    return state ^ (1 << (L - 1 - a)) ^ (1 << (L - 1 - b));
}

}  // namespace detail

/// e(a, b): the monoid gate coupling sites a and b (not necessarily adjacent).
/// On the |s_a s_b> block: diag(0, -1/q, -q, 0) plus the off-diagonal swap.
template <typename Scalar>
SpinOperator<Scalar> pair_monoid(int a, int b, const ChainParams<Scalar>& p) {
    const int dim = 1 << p.L;
    std::vector<Eigen::Triplet<Scalar>> trip;
    trip.reserve(2 * dim);
    const Scalar mq = -p.q, mqi = Scalar(-1) / p.q;
    for (int s = 0; s < dim; ++s) {
        int sa = detail::bit_of(s, a, p.L), sb = detail::bit_of(s, b, p.L);
        if (sa == sb) continue;
        trip.emplace_back(s, s, sa == 0 ? mqi : mq);
        trip.emplace_back(detail::flip2(s, a, b, p.L), s, Scalar(1));
    }
    SpinOperator<Scalar> m(dim, dim);
    m.setFromTriplets(trip.begin(), trip.end());
    return m;
}

/// S^z at one site, and the one-site twist operator.
template <typename Scalar>
SpinOperator<Scalar> sz_site(int site, const ChainParams<Scalar>& p) {
    const int dim = 1 << p.L;
    std::vector<Eigen::Triplet<Scalar>> trip;
    trip.reserve(dim);
    for (int s = 0; s < dim; ++s)
        trip.emplace_back(s, s, detail::bit_of(s, site, p.L) == 0 ? Scalar(1) : Scalar(-1));
    SpinOperator<Scalar> m(dim, dim);
    m.setFromTriplets(trip.begin(), trip.end());
    return m;
}

template <typename Scalar>
SpinOperator<Scalar> one_site_operator(int site, const Eigen::Matrix<Scalar, 2, 2>& op,
                                       int L) {
    const int dim = 1 << L;
    std::vector<Eigen::Triplet<Scalar>> trip;
    trip.reserve(2 * dim);
    for (int s = 0; s < dim; ++s) {
        int b = detail::bit_of(s, site, L);
        for (int b2 = 0; b2 < 2; ++b2) {
            if (op(b2, b) == Scalar(0)) continue;
            int s2 = b2 == b ? s : s ^ (1 << (L - 1 - site));
            trip.emplace_back(s2, s, op(b2, b));
        }
    }
    SpinOperator<Scalar> m(dim, dim);
    m.setFromTriplets(trip.begin(), trip.end());
    return m;
}

/// e_j for j in [0, L): e_j = e(j, j+1); the boundary monoid e_{L-1} is
/// conjugated by the twist on site 0.
template <typename Scalar>
SpinOperator<Scalar> monoid_matrix(int j, const ChainParams<Scalar>& p) {
    if (j < 0 || j >= p.L) throw std::invalid_argument("monoid index out of range");
    if (j < p.L - 1) return pair_monoid(j, j + 1, p);
    SpinOperator<Scalar> e = pair_monoid(p.L - 1, 0, p);
    if (p.twist == TwistKind::None) return e;
    Eigen::Matrix<Scalar, 2, 2> Tinv;
    Scalar det = p.twist_matrix(0, 0) * p.twist_matrix(1, 1) -
                 p.twist_matrix(0, 1) * p.twist_matrix(1, 0);
    Tinv << p.twist_matrix(1, 1), -p.twist_matrix(0, 1),
            -p.twist_matrix(1, 0), p.twist_matrix(0, 0);
    Tinv /= det;
    SpinOperator<Scalar> T0 = one_site_operator(0, p.twist_matrix, p.L);
    SpinOperator<Scalar> T0i = one_site_operator(0, Tinv, p.L);
    SpinOperator<Scalar> out = T0 * e * T0i;
    out.prune(Scalar(0));
    return out;
}

template <typename Scalar>
std::vector<SpinOperator<Scalar>> all_monoids(const ChainParams<Scalar>& p) {
    std::vector<SpinOperator<Scalar>> es;
    es.reserve(p.L);
    for (int j = 0; j < p.L; ++j) es.push_back(monoid_matrix(j, p));
    return es;
}

/// H = -sum_j e_j
template <typename Scalar>
SpinOperator<Scalar> tl_hamiltonian(const ChainParams<Scalar>& p) {
    SpinOperator<Scalar> h(1 << p.L, 1 << p.L);
    for (int j = 0; j < p.L; ++j) h -= monoid_matrix(j, p);
    return h;
}

/// The explicit spin form: like the monoid gate but without the
/// (q - 1/q)(S^z_a - S^z_b)/4 term; the boundary pair is twist-conjugated.
template <typename Scalar>
SpinOperator<Scalar> xxz_hamiltonian(const ChainParams<Scalar>& p) {
    const int dim = 1 << p.L;
    auto gate = [&](int a, int b) {
        std::vector<Eigen::Triplet<Scalar>> trip;
        const Scalar d = -(p.q + Scalar(1) / p.q) / Scalar(2);
        for (int s = 0; s < dim; ++s) {
            int sa = detail::bit_of(s, a, p.L), sb = detail::bit_of(s, b, p.L);
            if (sa == sb) continue;
            trip.emplace_back(s, s, d);
            trip.emplace_back(detail::flip2(s, a, b, p.L), s, Scalar(1));
        }
        SpinOperator<Scalar> m(dim, dim);
        m.setFromTriplets(trip.begin(), trip.end());
        return m;
    };
    SpinOperator<Scalar> h(dim, dim);
    for (int j = 0; j + 1 < p.L; ++j) h -= gate(j, j + 1);
    SpinOperator<Scalar> hb = gate(p.L - 1, 0);
    if (p.twist != TwistKind::None) {
        Eigen::Matrix<Scalar, 2, 2> Tinv;
        Scalar det = p.twist_matrix(0, 0) * p.twist_matrix(1, 1) -
                     p.twist_matrix(0, 1) * p.twist_matrix(1, 0);
        Tinv << p.twist_matrix(1, 1), -p.twist_matrix(0, 1),
                -p.twist_matrix(1, 0), p.twist_matrix(0, 0);
        Tinv /= det;
        SpinOperator<Scalar> T0 = one_site_operator(0, p.twist_matrix, p.L);
        SpinOperator<Scalar> T0i = one_site_operator(0, Tinv, p.L);
        hb = T0 * hb * T0i;
    }
    h -= hb;
    h.prune(Scalar(0));
    return h;
}

/// exact squared Frobenius norm of a sparse operator
template <typename Scalar>
Scalar frobenius_sq(const SpinOperator<Scalar>& m) {
    Scalar acc{};
    for (int k = 0; k < m.outerSize(); ++k)
        for (typename SpinOperator<Scalar>::InnerIterator it(m, k); it; ++it)
            acc += it.value() * it.value();
    return acc;
}
inline double frobenius_sq(const SpinOperator<std::complex<double>>& m) {
    double acc = 0;
    for (int k = 0; k < m.outerSize(); ++k)
        for (SpinOperator<std::complex<double>>::InnerIterator it(m, k); it; ++it)
            acc += std::norm(it.value());
    return acc;
}

/// squared Frobenius norm of ab - ba (exact in rational mode)
template <typename Scalar>
Scalar commutator_norm_sq(const SpinOperator<Scalar>& a, const SpinOperator<Scalar>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("dimension mismatch");
    SpinOperator<Scalar> c = a * b - b * a;
    return frobenius_sq(c);
}

/// Q_k instantiated on the chain: sum over classes and the L translations.
template <typename Scalar>
SpinOperator<Scalar> charge_matrix(const ChargeDensity& density,
                                   const ChainParams<Scalar>& p) {
    if (p.L < density.k + 2) throw std::invalid_argument("chain too short for charge");
    const int dim = 1 << p.L;
    auto es = all_monoids(p);
    SpinOperator<Scalar> total(dim, dim);
    const Scalar tau = p.tau();
    for (const auto& [cls, poly] : density.terms) {
        GeneralWord seq = to_sequence(cls);
        Scalar c = poly.eval(tau);
        if (c == Scalar(0)) continue;
        for (int x = 0; x < p.L; ++x) {
            SpinOperator<Scalar> m = es[((seq.back() + x) % p.L + p.L) % p.L];
            for (int i = static_cast<int>(seq.size()) - 2; i >= 0; --i)
                m = es[((seq[i] + x) % p.L + p.L) % p.L] * m;
            total += m * c;
        }
    }
    total.prune(Scalar(0));
    return total;
}

template <typename Scalar>
SpinOperator<Scalar> charge_matrix(int k, const ChainParams<Scalar>& p) {
    return charge_matrix(build_charge(k), p);
}

/// cyclic shift with rho e_j rho^{-1} = e_{j+1}
template <typename Scalar>
SpinOperator<Scalar> shift_operator(const ChainParams<Scalar>& p) {
    const int dim = 1 << p.L;
    std::vector<Eigen::Triplet<Scalar>> trip;
    trip.reserve(dim);
    for (int s = 0; s < dim; ++s) {
        // state permutation with rho e(j,j+1) rho^{-1} = e(j+1,j+2)
        int lead = s >> (p.L - 1) & 1;
        int rotated = ((s << 1) & ((1 << p.L) - 1)) | lead;
        trip.emplace_back(rotated, s, Scalar(1));
    }
    SpinOperator<Scalar> m(dim, dim);
    m.setFromTriplets(trip.begin(), trip.end());
    return m;
}

struct RelationsReport {
    bool tl_rules = false;       ///< e^2, eee, distant commutation
    bool extended_rule = false;  ///< E rho E = 2 E (untwisted, even L)
    std::string detail;
};

namespace detail {
inline double as_double(const Rational& r) { return static_cast<double>(r); }
inline double as_double(double r) { return r; }
inline double as_double(Cplx c) { return std::abs(c); }
}  // namespace detail

/// tol = 0 demands bit-exact zeros (rational mode); otherwise squared
/// Frobenius norms are compared against tol^2.
template <typename Scalar>
RelationsReport relations_check(const ChainParams<Scalar>& p, double tol = 0.0) {
    RelationsReport rep;
    auto es = all_monoids(p);
    const Scalar tau = p.tau();
    auto zero = [&](auto n2) {
        return tol == 0.0 ? detail::as_double(n2) == 0.0
                          : detail::as_double(n2) <= tol * tol;
    };
    rep.tl_rules = true;
    for (int j = 0; j < p.L; ++j) {
        int jn = (j + 1) % p.L;
        if (!zero(frobenius_sq(SpinOperator<Scalar>(es[j] * es[j] - es[j] * tau)))) {
            rep.tl_rules = false;
            rep.detail += "e^2 != tau e at j=" + std::to_string(j) + "; ";
        }
        if (!zero(frobenius_sq(SpinOperator<Scalar>(es[j] * es[jn] * es[j] - es[j])))) {
            rep.tl_rules = false;
            rep.detail += "e e' e != e at j=" + std::to_string(j) + "; ";
        }
        for (int m = j + 1; m < p.L; ++m) {
            int dist = std::min((m - j + p.L) % p.L, (j - m + p.L) % p.L);
            if (dist <= 1) continue;
            if (!zero(commutator_norm_sq(es[j], es[m]))) {
                rep.tl_rules = false;
                rep.detail += "[e_j,e_m] != 0 at (" + std::to_string(j) + "," +
                              std::to_string(m) + "); ";
            }
        }
    }
    if (p.twist == TwistKind::None && p.L % 2 == 0) {
        SpinOperator<Scalar> rho = shift_operator(p);
        if (!zero(frobenius_sq(SpinOperator<Scalar>(rho * es[0] - es[1] * rho))))
            rep.detail += "rho e_0 != e_1 rho; ";
        SpinOperator<Scalar> E = es[0];
        for (int j = 2; j < p.L; j += 2) E = SpinOperator<Scalar>(E * es[j]);
        SpinOperator<Scalar> lhs = E * rho * E;
        rep.extended_rule = zero(frobenius_sq(SpinOperator<Scalar>(lhs - E * Scalar(2))));
        if (!rep.extended_rule) rep.detail += "E rho E != 2E; ";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Numerical transfer matrix (complex scalars).

using MatrixXc = Eigen::MatrixXcd;

/// T_L(z) = Tr_a prod_j R_{a,j}(z) with the standard R-matrix.
MatrixXc transfer_matrix(Cplx z, const ChainParams<Cplx>& p);

struct LogDerivReport {
    double commutator_norm = 0;   ///< ||[T(z), T(z')]|| (relative)
    double logderiv_residual = 0; ///< finite-difference Eq.-(6) check (relative)
    bool singular = false;
};

/// Checks [T(z), T(z')] = 0 at sampled points and that the central finite
/// difference of log T at z = 1 reproduces the TL Hamiltonian. With the
/// standard R normalization the exact relation is
///   H = -([q]/2) dlogT/dlogz|_{z=1} + (L/2)(q + 1/q) Id,   [q] = q - 1/q.
LogDerivReport logderiv_check(const ChainParams<Cplx>& p, double h = 1e-4);

/// Numeric transfer b-series charges on the closed chain: k! [b^k] log
/// prod_j (1 + b e_j), as dense matrices.
std::vector<MatrixXc> atilde_matrices(int kmax, const ChainParams<Cplx>& p);

/// Relative least-squares residual of Q_k in span{Atilde_1..Atilde_k, Id}.
double span_residual(int k, const ChainParams<Cplx>& p);

}  // namespace tlc
