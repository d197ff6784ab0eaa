// SPDX-License-Identifier: Apache-2.0
//
// Exact-size complex 2x2 matrix arithmetic: products, Hermitian forms,
// determinants, log-det and eigenvalues in closed form. No general
// linear-algebra backend; every operation here is a handful of flops.

#pragma once

#include <array>
#include <complex>
#include <utility>

namespace coopcap {

using cxd = std::complex<double>;

/// Dense complex 2x2 matrix, row-major.
struct Complex2x2 {
    cxd e00{}, e01{}, e10{}, e11{};

    static Complex2x2 identity() { return {cxd{1.0}, cxd{0.0}, cxd{0.0}, cxd{1.0}}; }

    static Complex2x2 from_rows(const std::array<cxd, 2>& r0, const std::array<cxd, 2>& r1) {
        return {r0[0], r0[1], r1[0], r1[1]};
    }

    std::array<cxd, 2> row(int i) const { return i == 0 ? std::array<cxd, 2>{e00, e01} : std::array<cxd, 2>{e10, e11}; }
    std::array<cxd, 2> col(int j) const { return j == 0 ? std::array<cxd, 2>{e00, e10} : std::array<cxd, 2>{e01, e11}; }

    Complex2x2 adjoint() const {
        return {std::conj(e00), std::conj(e10), std::conj(e01), std::conj(e11)};
    }

    cxd det() const { return e00 * e11 - e01 * e10; }

    bool finite() const;
};

Complex2x2 operator+(const Complex2x2& a, const Complex2x2& b);
Complex2x2 operator-(const Complex2x2& a, const Complex2x2& b);
Complex2x2 operator*(const Complex2x2& a, const Complex2x2& b);
Complex2x2 operator*(const cxd& s, const Complex2x2& a);
Complex2x2 operator*(double s, const Complex2x2& a);

/// Hermitian 2x2 matrix stored as two real diagonal entries plus the (0,1)
/// entry; the (1,0) entry is its conjugate by construction.
struct Hermitian2x2 {
    double d0{}, d1{};
    cxd off{};

    static Hermitian2x2 zero() { return {}; }
    static Hermitian2x2 diag(double a, double b) { return {a, b, cxd{0.0}}; }
    static Hermitian2x2 scaled_identity(double a) { return {a, a, cxd{0.0}}; }

    Complex2x2 full() const { return {cxd{d0}, off, std::conj(off), cxd{d1}}; }

    double trace() const { return d0 + d1; }
    double det() const { return d0 * d1 - std::norm(off); }
    Hermitian2x2 scaled(double s) const { return {d0 * s, d1 * s, off * s}; }
};

Hermitian2x2 operator+(const Hermitian2x2& a, const Hermitian2x2& b);
Hermitian2x2 operator-(const Hermitian2x2& a, const Hermitian2x2& b);

/// Hermitian part of a (numerically almost-Hermitian) complex matrix.
Hermitian2x2 hermitian_part(const Complex2x2& a);

/// a * m * a^H, exactly Hermitian by construction.
Hermitian2x2 congruence(const Complex2x2& a, const Hermitian2x2& m);

/// p * v v^H for a column vector v.
Hermitian2x2 rank_one(const std::array<cxd, 2>& v, double p);

/// log2 det(I + m). Requires I + m positive definite; throws std::domain_error
/// naming the offending eigenvalue otherwise.
double logdet_i_plus(const Hermitian2x2& m);

/// Eigenvalues of a Hermitian 2x2 matrix via the closed-form quadratic,
/// returned in descending order.
std::pair<double, double> eig_hermitian(const Hermitian2x2& m);

/// row * m * row^H as a real number (exact for Hermitian m).
double quad_form(const std::array<cxd, 2>& row, const Hermitian2x2& m);

/// Eigenvalues (descending) together with a unitary matrix whose columns are
/// the matching eigenvectors.
struct EigenPair {
    double lam0{}, lam1{};
    Complex2x2 vectors;
};

EigenPair eig_vectors(const Hermitian2x2& m);

/// Closed-form inverse; requires nonzero determinant.
Hermitian2x2 hermitian_inverse(const Hermitian2x2& m);

/// Principal square root of a PSD matrix: (m + sqrt(det) I) / sqrt(tr + 2 sqrt(det)).
Hermitian2x2 hermitian_sqrt(const Hermitian2x2& m);

/// Inverse of the principal square root; requires positive definite input.
Hermitian2x2 hermitian_inv_sqrt(const Hermitian2x2& m);

}  // namespace coopcap
