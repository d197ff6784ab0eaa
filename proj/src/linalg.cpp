// SPDX-License-Identifier: Apache-2.0

#include "coopcap/linalg.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace coopcap {

namespace {

bool fin(const cxd& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

bool Complex2x2::finite() const { return fin(e00) && fin(e01) && fin(e10) && fin(e11); }

Complex2x2 operator+(const Complex2x2& a, const Complex2x2& b) {
    return {a.e00 + b.e00, a.e01 + b.e01, a.e10 + b.e10, a.e11 + b.e11};
}

Complex2x2 operator-(const Complex2x2& a, const Complex2x2& b) {
    return {a.e00 - b.e00, a.e01 - b.e01, a.e10 - b.e10, a.e11 - b.e11};
}

Complex2x2 operator*(const Complex2x2& a, const Complex2x2& b) {
    return {a.e00 * b.e00 + a.e01 * b.e10, a.e00 * b.e01 + a.e01 * b.e11,
            a.e10 * b.e00 + a.e11 * b.e10, a.e10 * b.e01 + a.e11 * b.e11};
}

Complex2x2 operator*(const cxd& s, const Complex2x2& a) {
    return {s * a.e00, s * a.e01, s * a.e10, s * a.e11};
}

Complex2x2 operator*(double s, const Complex2x2& a) { return cxd{s} * a; }

Hermitian2x2 operator+(const Hermitian2x2& a, const Hermitian2x2& b) {
    return {a.d0 + b.d0, a.d1 + b.d1, a.off + b.off};
}

Hermitian2x2 operator-(const Hermitian2x2& a, const Hermitian2x2& b) {
    return {a.d0 - b.d0, a.d1 - b.d1, a.off - b.off};
}

Hermitian2x2 hermitian_part(const Complex2x2& a) {
    return {a.e00.real(), a.e11.real(), 0.5 * (a.e01 + std::conj(a.e10))};
}

Hermitian2x2 congruence(const Complex2x2& a, const Hermitian2x2& m) {
    return hermitian_part(a * m.full() * a.adjoint());
}

Hermitian2x2 rank_one(const std::array<cxd, 2>& v, double p) {
    return {p * std::norm(v[0]), p * std::norm(v[1]), p * v[0] * std::conj(v[1])};
}

double logdet_i_plus(const Hermitian2x2& m) {
    const auto [lam0, lam1] = eig_hermitian(m);
    if (lam1 <= -1.0 + 1e-12) {
        std::ostringstream os;
        os << "logdet_i_plus: I + m not positive definite, eigenvalue " << lam1;
        throw std::domain_error(os.str());
    }
    // det(I + m) = 1 + tr(m) + det(m) for 2x2; log1p keeps precision near 0.
    return std::log1p(m.trace() + m.det()) / std::numbers::ln2;
}

std::pair<double, double> eig_hermitian(const Hermitian2x2& m) {
    const double mid = 0.5 * (m.d0 + m.d1);
    const double half_gap = 0.5 * (m.d0 - m.d1);
    const double r = std::sqrt(half_gap * half_gap + std::norm(m.off));
    return {mid + r, mid - r};
}

double quad_form(const std::array<cxd, 2>& row, const Hermitian2x2& m) {
    return std::norm(row[0]) * m.d0 + std::norm(row[1]) * m.d1 +
           2.0 * (row[0] * m.off * std::conj(row[1])).real();
}

EigenPair eig_vectors(const Hermitian2x2& m) {
    const auto [lam0, lam1] = eig_hermitian(m);
    EigenPair out;
    out.lam0 = lam0;
    out.lam1 = lam1;

    if (std::abs(m.off) == 0.0) {
        out.vectors = (m.d0 >= m.d1) ? Complex2x2::identity()
                                     : Complex2x2{cxd{0.0}, cxd{1.0}, cxd{1.0}, cxd{0.0}};
        return out;
    }

    // Two algebraic eigenvector candidates for lam0; take the better conditioned.
    const std::array<cxd, 2> ca{m.off, cxd{lam0 - m.d0}};
    const std::array<cxd, 2> cb{cxd{lam0 - m.d1}, std::conj(m.off)};
    const double na = std::sqrt(std::norm(ca[0]) + std::norm(ca[1]));
    const double nb = std::sqrt(std::norm(cb[0]) + std::norm(cb[1]));
    std::array<cxd, 2> v0 = (na >= nb) ? ca : cb;
    const double nv = (na >= nb) ? na : nb;
    v0 = {v0[0] / nv, v0[1] / nv};

    // Orthonormal complement is the second eigenvector.
    const std::array<cxd, 2> v1{-std::conj(v0[1]), std::conj(v0[0])};
    out.vectors = {v0[0], v1[0], v0[1], v1[1]};
    return out;
}

Hermitian2x2 hermitian_inverse(const Hermitian2x2& m) {
    const double d = m.det();
    if (d == 0.0 || !std::isfinite(d)) {
        throw std::domain_error("hermitian_inverse: singular matrix");
    }
    return {m.d1 / d, m.d0 / d, -m.off / d};
}

Hermitian2x2 hermitian_sqrt(const Hermitian2x2& m) {
    const double s = std::sqrt(std::max(m.det(), 0.0));
    const double t2 = m.trace() + 2.0 * s;
    if (t2 <= 0.0) {
        return Hermitian2x2::zero();
    }
    const double t = std::sqrt(t2);
    return {(m.d0 + s) / t, (m.d1 + s) / t, m.off / t};
}

Hermitian2x2 hermitian_inv_sqrt(const Hermitian2x2& m) {
    return hermitian_inverse(hermitian_sqrt(m));
}

}  // namespace coopcap
