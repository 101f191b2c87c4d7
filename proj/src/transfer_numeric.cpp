#include "tlc/matrep.hpp"

namespace tlc {

namespace {

Cplx bracket(Cplx x) { return x - Cplx(1) / x; }

}  // namespace

MatrixXc transfer_matrix(Cplx z, const ChainParams<Cplx>& p) {
    const int dim = 1 << p.L;
    // R_{a,j} as a 2x2 block (auxiliary indices) of one-site operators
    Cplx cq = bracket(p.q * z), cz = bracket(z), cqq = bracket(p.q);
    Eigen::Matrix2cd su, sd, flip_up, flip_dn;
    // blocks W[a'][a], each acting on one chain site (s' x s)
    // diagonal aux: 1/2(cq+cz) + 1/2(cq-cz) * (+-Sz)
    su << cq, 0, 0, cz;       // a'=a=up:  diag over s = (cq, cz)
    sd << cz, 0, 0, cq;       // a'=a=down
    flip_up << 0, cqq, 0, 0;  // a'=up, a=down: s: down->up
    flip_dn << 0, 0, cqq, 0;  // a'=down, a=up: s: up->down
    const Eigen::Matrix2cd* W[2][2] = {{&su, &flip_up}, {&flip_dn, &sd}};

    // contract site by site; each step adds the next site as the high bits,
    // so the loop runs from the last site down to site 0 (site 0 is the most
    // significant bit in the basis convention)
    MatrixXc M[2][2];
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            M[a][b] = MatrixXc::Zero(1, 1);
            if (a == b) M[a][b](0, 0) = 1;
        }
    for (int j = p.L - 1; j >= 0; --j) {
        MatrixXc N[2][2];
        const int d = static_cast<int>(M[0][0].rows());
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                N[a][b] = MatrixXc::Zero(2 * d, 2 * d);
                for (int c = 0; c < 2; ++c) {
                    const MatrixXc& left = M[a][c];
                    const Eigen::Matrix2cd& w = *W[c][b];
                    for (int r = 0; r < 2; ++r)
                        for (int s = 0; s < 2; ++s)
                            if (w(r, s) != Cplx(0))
                                N[a][b].block(r * d, s * d, d, d) += w(r, s) * left;
                }
            }
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) M[a][b] = std::move(N[a][b]);
    }
    if (p.twist != TwistKind::None) {
        // twist in the auxiliary trace: Tr_a(T_a prod R)
        MatrixXc t00 = p.twist_matrix(0, 0) * M[0][0] + p.twist_matrix(0, 1) * M[1][0];
        MatrixXc t11 = p.twist_matrix(1, 0) * M[0][1] + p.twist_matrix(1, 1) * M[1][1];
        return t00 + t11;
    }
    (void)dim;
    return M[0][0] + M[1][1];
}

LogDerivReport logderiv_check(const ChainParams<Cplx>& p, double h) {
    LogDerivReport rep;
    Cplx z1 = std::exp(Cplx(0, 0.23)), z2 = std::exp(Cplx(0, -0.41));
    MatrixXc t1 = transfer_matrix(z1, p), t2 = transfer_matrix(z2, p);
    rep.commutator_norm = (t1 * t2 - t2 * t1).norm() / (t1.norm() * t2.norm());

    MatrixXc t0 = transfer_matrix(1.0, p);
    Eigen::FullPivLU<MatrixXc> lu(t0);
    if (!lu.isInvertible()) {
        rep.singular = true;
        return rep;
    }
    MatrixXc tp = transfer_matrix(std::exp(Cplx(h, 0)), p);
    MatrixXc tm = transfer_matrix(std::exp(Cplx(-h, 0)), p);
    MatrixXc d = lu.solve((tp - tm) / (2 * h));
    // H = -([q]/2) dlogT + (L/2)(q + 1/q) Id with the standard R normalization
    Cplx qb = bracket(p.q);
    MatrixXc recon = -(qb / 2.0) * d;
    recon += (double(p.L) / 2.0) * (p.q + Cplx(1) / p.q) *
             MatrixXc::Identity(d.rows(), d.cols());
    MatrixXc htl = MatrixXc(tl_hamiltonian(p));
    rep.logderiv_residual = (recon - htl).norm() / htl.norm();
    return rep;
}

std::vector<MatrixXc> atilde_matrices(int kmax, const ChainParams<Cplx>& p) {
    // derivatives of log T(e^u) at u = 0. T(z) is a Laurent polynomial of
    // degree <= L, so unit-circle sampling recovers its coefficients T_c
    // exactly up to roundoff, and d^m/du^m T(e^u)|_0 = sum_c c^m T_c.
    // All T(z) commute, so the scalar moment-cumulant formulas apply to
    // W(u) = T(1)^{-1} T(e^u).
    const int dim = 1 << p.L;
    const int N = 2 * p.L + 2;
    MatrixXc t0 = transfer_matrix(1.0, p);
    Eigen::PartialPivLU<MatrixXc> lu(t0);
    std::vector<MatrixXc> moments(kmax + 1, MatrixXc::Zero(dim, dim));
    for (int j = 0; j < N; ++j) {
        double th = 2 * M_PI * j / N;
        MatrixXc w = lu.solve(transfer_matrix(std::polar(1.0, th), p));
        // sum over Laurent powers c of c^m e^{ic th}/N collapses to a scalar
        // weight per sample: sum_c c^m T_c = sum_j weight_m(j) T(z_j)
        for (int m = 1; m <= kmax; ++m) {
            Cplx weight = 0;
            for (int c = -p.L; c <= p.L; ++c)
                weight += std::pow(double(c), m) * std::polar(1.0 / N, -c * th);
            moments[m] += weight * w;
        }
    }
    // cumulants from moments (everything commutes)
    std::vector<MatrixXc> cum(kmax + 1, MatrixXc::Zero(dim, dim));
    for (int n = 1; n <= kmax; ++n) {
        cum[n] = moments[n];
        for (int m = 1; m < n; ++m) {
            double binom = Frac::binomial(n - 1, m - 1).to_double();
            cum[n] -= binom * cum[m] * moments[n - m];
        }
    }
    return std::vector<MatrixXc>(cum.begin() + 1, cum.end());
}

double span_residual(int k, const ChainParams<Cplx>& p) {
    const int dim = 1 << p.L;
    std::vector<MatrixXc> basis = atilde_matrices(k, p);
    basis.push_back(MatrixXc::Identity(dim, dim));
    MatrixXc qk = MatrixXc(charge_matrix<Cplx>(k, p));
    const int nb = static_cast<int>(basis.size());
    Eigen::MatrixXcd gram(nb, nb);
    Eigen::VectorXcd rhs(nb);
    auto dot = [](const MatrixXc& a, const MatrixXc& b) {
        return (a.adjoint() * b).trace();
    };
    for (int i = 0; i < nb; ++i) {
        for (int j = 0; j < nb; ++j) gram(i, j) = dot(basis[i], basis[j]);
        rhs(i) = dot(basis[i], qk);
    }
    Eigen::VectorXcd coef = gram.fullPivLu().solve(rhs);
    MatrixXc resid = qk;
    for (int i = 0; i < nb; ++i) resid -= coef(i) * basis[i];
    return resid.norm() / qk.norm();
}

}  // namespace tlc
