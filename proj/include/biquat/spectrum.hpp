#pragma once

#include <string>

#include "biquat/equations.hpp"
#include "biquat/matrix_rep.hpp"

namespace biquat {

enum class DoubletClass { degenerate, null_doublet, generic };

std::string to_string(DoubletClass c);

/// Mass content of the quaternionic coupling E: the square roots of the two
/// eigenvalues of E dagger(E), plus the doublet classification.
struct MassSpectrum {
    double m1 = 0.0;  // m1 <= m2
    double m2 = 0.0;
    DoubletClass classification = DoubletClass::generic;
    std::array<double, 2> eigenvalues{0.0, 0.0};  // of E dagger(E), ascending
};

/// Matrix image of E dagger(E); Hermitian and positive semidefinite.
Matrix2c mass_operator(const Biquaternion& coupling);

/// Eigenvalues by the closed 2x2 Hermitian formula. Classification:
/// degenerate when the eigenvalues agree to 1e-9 relative (checked first, so
/// E = 0 lands here), null doublet when quaternion_norm(E) vanishes to 1e-10.
MassSpectrum mass_spectrum(const Biquaternion& coupling);

/// Plane-wave witness for the selected branch (1 = lighter, 2 = heavier):
/// K is put on shell at the branch mass with the requested 3-momentum.
/// Throws NoSolutionError when the branch admits no such mode.
EinsteinMayerSystem solve_einstein_mayer_mode(const Biquaternion& coupling, int which,
                                              const std::array<double, 3>& momentum, Rng& rng,
                                              const ConventionAssignment& c = {});

}  // namespace biquat
