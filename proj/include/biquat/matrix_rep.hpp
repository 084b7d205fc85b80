#pragma once

#include <array>

#include "biquat/biquaternion.hpp"
#include "biquat/convention.hpp"
#include "biquat/rng.hpp"

namespace biquat {

/// 2x2 complex matrix, row-major; the image of a biquaternion under the
/// standard representation 1 -> I, ek -> -i sigma_k.
struct Matrix2c {
    std::array<cplx, 4> m{};  // (0,0) (0,1) (1,0) (1,1)

    cplx& operator()(int r, int c) { return m[2 * r + c]; }
    cplx operator()(int r, int c) const { return m[2 * r + c]; }

    static Matrix2c identity() { return {{cplx(1.0), cplx(0.0), cplx(0.0), cplx(1.0)}}; }

    friend Matrix2c operator+(const Matrix2c& a, const Matrix2c& b) {
        Matrix2c r;
        for (int i = 0; i < 4; ++i) r.m[i] = a.m[i] + b.m[i];
        return r;
    }
    friend Matrix2c operator-(const Matrix2c& a, const Matrix2c& b) {
        Matrix2c r;
        for (int i = 0; i < 4; ++i) r.m[i] = a.m[i] - b.m[i];
        return r;
    }
    friend Matrix2c operator*(cplx s, const Matrix2c& a) {
        Matrix2c r;
        for (int i = 0; i < 4; ++i) r.m[i] = s * a.m[i];
        return r;
    }
    friend Matrix2c operator*(const Matrix2c& a, const Matrix2c& b) {
        Matrix2c r;
        r(0, 0) = a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0);
        r(0, 1) = a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1);
        r(1, 0) = a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0);
        r(1, 1) = a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1);
        return r;
    }

    cplx det() const { return m[0] * m[3] - m[1] * m[2]; }
    cplx trace() const { return m[0] + m[3]; }

    Matrix2c adjoint() const {
        return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
    }
    Matrix2c transpose() const { return {{m[0], m[2], m[1], m[3]}}; }
};

double frobenius_norm(const Matrix2c& a);
double distance(const Matrix2c& a, const Matrix2c& b);

/// Algebra isomorphism onto M2(C). rep_sign = -1 selects the conjugate
/// representation (e1 -> +i sigma_1, e2 -> -i sigma_2, e3 -> +i sigma_3).
Matrix2c to_matrix(const Biquaternion& a, int rep_sign = +1);
Biquaternion from_matrix(const Matrix2c& m, int rep_sign = +1);

/// Unit-determinant biquaternion realizing SL(2,C). Three actions:
/// spinor D -> L D, 4-vector X -> L X dagger(L), 6-vector f -> L f bar(L).
class LorentzElement {
public:
    /// Requires quaternion_norm(L) = 1 to within tol; throws otherwise.
    explicit LorentzElement(const Biquaternion& value, double tol = 1e-10);

    const Biquaternion& value() const { return value_; }
    Biquaternion inverse() const { return bar(value_); }

    Biquaternion spinor_action(const Biquaternion& d) const { return value_ * d; }
    Biquaternion fourvector_action(const Biquaternion& x) const {
        return value_ * x * dagger(value_);
    }
    Biquaternion sixvector_action(const Biquaternion& f) const {
        return value_ * f * bar(value_);
    }
    /// The action carried by the second field of the coupled first-order
    /// systems: B -> star(L) B dagger(L).
    Biquaternion conjugate_action(const Biquaternion& b) const {
        return star(value_) * b * dagger(value_);
    }

    /// Element with star(L) as value; pairs with the 4-vector action on the
    /// spinor slots of transported solutions.
    LorentzElement conjugate_element() const { return LorentzElement(star(value_)); }

    /// The induced 4x4 real Lorentz matrix (rows/cols ordered t,x,y,z).
    std::array<std::array<double, 4>, 4> minkowski_matrix() const;

private:
    Biquaternion value_;
};

/// exp of xi/2 along the axis; X -> L X dagger(L) maps [m,0] to
/// [m cosh xi, m sinh xi * axis].
LorentzElement boost(const std::array<double, 3>& axis, double rapidity);
/// exp of angle/2 about the axis; fixes the scalar part of 4-vectors.
LorentzElement rotation(const std::array<double, 3>& axis, double angle);

/// Deterministic random element via the exponential map; rapidity content
/// bounded by max_rapidity (keeps test conditioning sane; require <= 3).
LorentzElement random_lorentz(Rng& rng, double max_rapidity);

/// Real unit quaternion realizing SU(2); acts by right multiplication in the
/// gauge transformations.
class GaugeElement {
public:
    explicit GaugeElement(const Biquaternion& value, double tol = 1e-10);

    const Biquaternion& value() const { return value_; }
    Biquaternion inverse() const { return bar(value_); }

private:
    Biquaternion value_;
};

GaugeElement random_gauge(Rng& rng);

/// Four complex components in the chiral basis: (L1, L2, R1, R2).
using Bispinor = std::array<cplx, 4>;

/// Real-linear bijection between the 8 real dimensions of a biquaternion D and
/// a chiral-basis bispinor, chosen so the Dirac-Lanczos residual of D vanishes
/// exactly when the chiral Dirac residual of the image vanishes.
Bispinor to_bispinor(const Biquaternion& d);
Biquaternion from_bispinor(const Bispinor& psi);

}  // namespace biquat
