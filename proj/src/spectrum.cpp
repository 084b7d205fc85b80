#include "biquat/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace biquat {

std::string to_string(DoubletClass c) {
    switch (c) {
        case DoubletClass::degenerate: return "degenerate-doublet";
        case DoubletClass::null_doublet: return "null-doublet";
        case DoubletClass::generic: return "generic";
    }
    return "?";
}

Matrix2c mass_operator(const Biquaternion& coupling) {
    const Matrix2c m = to_matrix(coupling);
    return m * m.adjoint();
}

MassSpectrum mass_spectrum(const Biquaternion& coupling) {
    const Matrix2c op = mass_operator(coupling);
    // Hermitian PSD 2x2: eigenvalues (tr/2) -+ sqrt((tr/2)^2 - det).
    const double tr = op.trace().real();
    const double det = op.det().real();
    const double half = 0.5 * tr;
    const double disc = std::sqrt(std::max(0.0, half * half - det));
    MassSpectrum s;
    s.eigenvalues = {half - disc, half + disc};
    s.m1 = std::sqrt(std::max(0.0, s.eigenvalues[0]));
    s.m2 = std::sqrt(std::max(0.0, s.eigenvalues[1]));

    const double scale = std::max(1.0, s.eigenvalues[1]);
    if (std::abs(s.eigenvalues[1] - s.eigenvalues[0]) <= 1e-9 * scale)
        s.classification = DoubletClass::degenerate;  // takes precedence (E = 0 lands here)
    else if (std::abs(quaternion_norm(coupling)) <= 1e-10)
        s.classification = DoubletClass::null_doublet;
    else
        s.classification = DoubletClass::generic;
    return s;
}

EinsteinMayerSystem solve_einstein_mayer_mode(const Biquaternion& coupling, int which,
                                              const std::array<double, 3>& momentum, Rng& rng,
                                              const ConventionAssignment& c) {
    if (which != 1 && which != 2) throw std::invalid_argument("branch must be 1 or 2");
    const MassSpectrum s = mass_spectrum(coupling);
    const double mass = which == 1 ? s.m1 : s.m2;
    const double p2 =
        momentum[0] * momentum[0] + momentum[1] * momentum[1] + momentum[2] * momentum[2];
    if (mass <= 1e-9 && p2 <= 1e-12)
        throw NoSolutionError("massless branch requires nonzero momentum");
    WaveVector k;
    k.p = momentum;
    k.omega = std::sqrt(p2 + mass * mass);
    return solve_einstein_mayer_momentum(coupling, k, rng, c);
}

}  // namespace biquat
