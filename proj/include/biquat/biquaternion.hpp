#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <iosfwd>

namespace biquat {

using cplx = std::complex<double>;

/// Element of the complexified quaternions C (x) H: four complex coefficients
/// over the basis (1, e1, e2, e3) with e1*e2 = e3 (cyclic), ek*ek = -1, and the
/// complex unit i commuting with everything. Isomorphic to the Pauli algebra
/// M2(C) ~ Cl(3,0).
struct Biquaternion {
    cplx w{0.0, 0.0};  // coefficient of 1
    cplx x{0.0, 0.0};  // coefficient of e1
    cplx y{0.0, 0.0};  // coefficient of e2
    cplx z{0.0, 0.0};  // coefficient of e3

    constexpr Biquaternion() = default;
    constexpr Biquaternion(cplx w_, cplx x_, cplx y_, cplx z_) : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Biquaternion zero() { return {}; }
    static constexpr Biquaternion one() { return {cplx(1.0), cplx(0.0), cplx(0.0), cplx(0.0)}; }
    static constexpr Biquaternion e1() { return {cplx(0.0), cplx(1.0), cplx(0.0), cplx(0.0)}; }
    static constexpr Biquaternion e2() { return {cplx(0.0), cplx(0.0), cplx(1.0), cplx(0.0)}; }
    static constexpr Biquaternion e3() { return {cplx(0.0), cplx(0.0), cplx(0.0), cplx(1.0)}; }

    /// 4-vector constructor: real scalar s plus i*(real 3-vector v), the
    /// Hermitian ("minquat") form used for Lorentz 4-vectors.
    static Biquaternion minquat(double s, double v1, double v2, double v3) {
        return {cplx(s, 0.0), cplx(0.0, v1), cplx(0.0, v2), cplx(0.0, v3)};
    }

    /// Scalar-free complex 3-vector (6-vector form, e.g. E + iB).
    static Biquaternion six_vector(cplx f1, cplx f2, cplx f3) {
        return {cplx(0.0), f1, f2, f3};
    }

    cplx coeff(int k) const {
        switch (k) {
            case 0: return w;
            case 1: return x;
            case 2: return y;
            default: return z;
        }
    }
    cplx& coeff(int k) {
        switch (k) {
            case 0: return w;
            case 1: return x;
            case 2: return y;
            default: return z;
        }
    }

    friend constexpr Biquaternion operator+(const Biquaternion& a, const Biquaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend constexpr Biquaternion operator-(const Biquaternion& a, const Biquaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    constexpr Biquaternion operator-() const { return {-w, -x, -y, -z}; }

    friend constexpr Biquaternion operator*(cplx s, const Biquaternion& a) {
        return {s * a.w, s * a.x, s * a.y, s * a.z};
    }
    friend constexpr Biquaternion operator*(const Biquaternion& a, cplx s) { return s * a; }
    friend constexpr Biquaternion operator*(double s, const Biquaternion& a) { return cplx(s) * a; }
    friend constexpr Biquaternion operator*(const Biquaternion& a, double s) { return cplx(s) * a; }

    // Hamilton product extended bilinearly over complex scalars.
    friend constexpr Biquaternion operator*(const Biquaternion& a, const Biquaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }

    Biquaternion& operator+=(const Biquaternion& o) { return *this = *this + o; }
    Biquaternion& operator-=(const Biquaternion& o) { return *this = *this - o; }
    Biquaternion& operator*=(const Biquaternion& o) { return *this = *this * o; }

    std::array<double, 8> components() const {
        return {w.real(), w.imag(), x.real(), x.imag(), y.real(), y.imag(), z.real(), z.imag()};
    }
    static Biquaternion from_components(const std::array<double, 8>& c) {
        return {cplx(c[0], c[1]), cplx(c[2], c[3]), cplx(c[4], c[5]), cplx(c[6], c[7])};
    }
};

/// Quaternion conjugation: negates the vector part. Anti-automorphism,
/// complex-linear.
constexpr Biquaternion bar(const Biquaternion& a) { return {a.w, -a.x, -a.y, -a.z}; }

/// Complex conjugation of all four coefficients. Automorphism, antilinear.
inline Biquaternion star(const Biquaternion& a) {
    return {std::conj(a.w), std::conj(a.x), std::conj(a.y), std::conj(a.z)};
}

/// Biconjugation bar(star(a)); Hermitian conjugation of the matrix image.
inline Biquaternion dagger(const Biquaternion& a) {
    return {std::conj(a.w), -std::conj(a.x), -std::conj(a.y), -std::conj(a.z)};
}

/// Complex "determinant" scalar a*bar(a). Multiplicative; vanishes exactly on
/// zero divisors such as 1 + i e3.
constexpr cplx quaternion_norm(const Biquaternion& a) {
    return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z;
}

constexpr cplx scalar_part(const Biquaternion& a) { return a.w; }

/// The scalar-free remainder; houses 6-vectors like E + iB.
constexpr Biquaternion vector_part(const Biquaternion& a) { return {cplx(0.0), a.x, a.y, a.z}; }

/// Euclidean norm of the 8 real coefficients; the test metric everywhere.
inline double frobenius_norm(const Biquaternion& a) {
    return std::sqrt(std::norm(a.w) + std::norm(a.x) + std::norm(a.y) + std::norm(a.z));
}

inline double distance(const Biquaternion& a, const Biquaternion& b) {
    return frobenius_norm(a - b);
}

/// Constant idempotent sigma = (1 + i e3)/2; projects onto a spinor ideal.
inline Biquaternion sigma() { return {cplx(0.5), cplx(0.0), cplx(0.0), cplx(0.0, 0.5)}; }

/// bar-conjugate idempotent (1 - i e3)/2.
inline Biquaternion sigma_bar() { return {cplx(0.5), cplx(0.0), cplx(0.0), cplx(0.0, -0.5)}; }

/// Hermiticity defect: zero iff a is a 4-vector (real scalar, imaginary vector).
inline double minquat_defect(const Biquaternion& a) { return distance(a, dagger(a)); }

inline bool is_minquat(const Biquaternion& a, double tol = 1e-12) {
    return minquat_defect(a) <= tol;
}

inline bool is_six_vector(const Biquaternion& a, double tol = 1e-12) {
    return std::abs(a.w) <= tol;
}

/// 4-vector components (s, v) of a minquat; meaningful only when is_minquat.
inline std::array<double, 4> minquat_components(const Biquaternion& a) {
    return {a.w.real(), a.x.imag(), a.y.imag(), a.z.imag()};
}

/// Minkowski inner product of two 4-vectors, signature (+,-,-,-).
inline double minkowski_inner(const Biquaternion& a, const Biquaternion& b) {
    const auto u = minquat_components(a);
    const auto v = minquat_components(b);
    return u[0] * v[0] - u[1] * v[1] - u[2] * v[2] - u[3] * v[3];
}

std::ostream& operator<<(std::ostream& os, const Biquaternion& a);

}  // namespace biquat
