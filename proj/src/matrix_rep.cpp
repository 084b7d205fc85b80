#include "biquat/matrix_rep.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace biquat {

std::ostream& operator<<(std::ostream& os, const Biquaternion& a) {
    os << "(" << a.w << " + " << a.x << " e1 + " << a.y << " e2 + " << a.z << " e3)";
    return os;
}

double frobenius_norm(const Matrix2c& a) {
    double s = 0.0;
    for (const auto& e : a.m) s += std::norm(e);
    return std::sqrt(s);
}

double distance(const Matrix2c& a, const Matrix2c& b) { return frobenius_norm(a - b); }

Matrix2c to_matrix(const Biquaternion& a, int rep_sign) {
    // 1 -> I, e1 -> -i s sigma1, e2 -> -i sigma2, e3 -> -i s sigma3 with
    // s = rep_sign; both signs satisfy the multiplication table.
    const cplx i(0.0, 1.0);
    const double s = rep_sign >= 0 ? 1.0 : -1.0;
    Matrix2c r;
    r(0, 0) = a.w - i * s * a.z;
    r(0, 1) = -i * s * a.x - a.y;
    r(1, 0) = -i * s * a.x + a.y;
    r(1, 1) = a.w + i * s * a.z;
    return r;
}

Biquaternion from_matrix(const Matrix2c& m, int rep_sign) {
    const cplx i(0.0, 1.0);
    const double s = rep_sign >= 0 ? 1.0 : -1.0;
    Biquaternion a;
    a.w = (m(0, 0) + m(1, 1)) * 0.5;
    a.z = (m(1, 1) - m(0, 0)) * 0.5 / (i * s);
    a.x = (m(0, 1) + m(1, 0)) * 0.5 / (-i * s);
    a.y = (m(1, 0) - m(0, 1)) * 0.5;
    return a;
}

LorentzElement::LorentzElement(const Biquaternion& value, double tol) : value_(value) {
    if (std::abs(quaternion_norm(value) - cplx(1.0)) > tol)
        throw std::invalid_argument("LorentzElement: quaternion norm must be 1");
}

std::array<std::array<double, 4>, 4> LorentzElement::minkowski_matrix() const {
    const Biquaternion basis[4] = {Biquaternion::one(), Biquaternion::minquat(0, 1, 0, 0),
                                   Biquaternion::minquat(0, 0, 1, 0),
                                   Biquaternion::minquat(0, 0, 0, 1)};
    std::array<std::array<double, 4>, 4> lambda{};
    for (int nu = 0; nu < 4; ++nu) {
        const auto col = minquat_components(fourvector_action(basis[nu]));
        for (int mu = 0; mu < 4; ++mu) lambda[mu][nu] = col[mu];
    }
    return lambda;
}

namespace {

void require_unit_axis(const std::array<double, 3>& axis) {
    const double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (std::abs(n - 1.0) > 1e-9) throw std::invalid_argument("axis must be a unit 3-vector");
}

/// exp(W) for a scalar-free W, via W*W = -(w.w) and cos/sinc in the complex
/// angle; quaternion_norm of the result is exactly 1.
Biquaternion exp_pure(const Biquaternion& w) {
    const cplx angle2 = w.x * w.x + w.y * w.y + w.z * w.z;
    const cplx angle = std::sqrt(angle2);
    cplx c, sinc;
    if (std::abs(angle) < 1e-8) {
        c = 1.0 - angle2 / 2.0 + angle2 * angle2 / 24.0;
        sinc = 1.0 - angle2 / 6.0 + angle2 * angle2 / 120.0;
    } else {
        c = std::cos(angle);
        sinc = std::sin(angle) / angle;
    }
    Biquaternion r = sinc * w;
    r.w += c;
    return r;
}

}  // namespace

LorentzElement boost(const std::array<double, 3>& axis, double rapidity) {
    require_unit_axis(axis);
    const cplx i(0.0, 1.0);
    Biquaternion w = Biquaternion::six_vector(i * axis[0], i * axis[1], i * axis[2]);
    return LorentzElement(exp_pure(0.5 * rapidity * w));
}

LorentzElement rotation(const std::array<double, 3>& axis, double angle) {
    require_unit_axis(axis);
    Biquaternion w = Biquaternion::six_vector(axis[0], axis[1], axis[2]);
    return LorentzElement(exp_pure(0.5 * angle * w));
}

LorentzElement random_lorentz(Rng& rng, double max_rapidity) {
    if (max_rapidity > 3.0)
        throw std::invalid_argument("random_lorentz: max_rapidity must be <= 3");
    const auto r_axis = rng.unit3();
    const auto b_axis = rng.unit3();
    const double angle = rng.uniform(0.0, 2.0 * M_PI);
    const double xi = rng.uniform(0.0, max_rapidity);
    const cplx i(0.0, 1.0);
    Biquaternion w;
    for (int k = 0; k < 3; ++k)
        w.coeff(k + 1) = 0.5 * angle * r_axis[k] + 0.5 * xi * i * b_axis[k];
    return LorentzElement(exp_pure(w));
}

GaugeElement::GaugeElement(const Biquaternion& value, double tol) : value_(value) {
    const Biquaternion defect = bar(value) - dagger(value);
    if (frobenius_norm(defect) > tol)
        throw std::invalid_argument("GaugeElement: coefficients must be real");
    if (std::abs(quaternion_norm(value) - cplx(1.0)) > tol)
        throw std::invalid_argument("GaugeElement: norm must be 1");
}

GaugeElement random_gauge(Rng& rng) {
    // Uniform on S^3 via four normals.
    double c[4];
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (double& v : c) {
            v = rng.normal();
            n2 += v * v;
        }
    } while (n2 < 1e-12);
    const double n = std::sqrt(n2);
    return GaugeElement({cplx(c[0] / n), cplx(c[1] / n), cplx(c[2] / n), cplx(c[3] / n)});
}

// Bispinor bridge. With M = to_matrix(D), the Dirac-Lanczos equation
// grad_bar D = m star(D) i e3 splits over the matrix columns into the two
// chiral Weyl equations for
//   psi_L = (M00, M10),  psi_R = (-conj(M11), conj(M01)),
// satisfying i sigma_bar.d psi_L = m psi_R and i sigma.d psi_R = m psi_L.
Bispinor to_bispinor(const Biquaternion& d) {
    const Matrix2c m = to_matrix(d);
    return {m(0, 0), m(1, 0), -std::conj(m(1, 1)), std::conj(m(0, 1))};
}

Biquaternion from_bispinor(const Bispinor& psi) {
    Matrix2c m;
    m(0, 0) = psi[0];
    m(1, 0) = psi[1];
    m(1, 1) = -std::conj(psi[2]);
    m(0, 1) = std::conj(psi[3]);
    return from_matrix(m);
}

}  // namespace biquat
