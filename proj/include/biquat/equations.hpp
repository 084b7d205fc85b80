#pragma once

#include <utility>

#include "biquat/field.hpp"
#include "biquat/matrix_rep.hpp"

namespace biquat {

/// (A, B) fields coupled by the fundamental first-order system
/// nabla_bar A = m B, nabla B = m A.
struct LanczosPair {
    FieldPtr A;
    FieldPtr B;
    double mass = 0.0;
};

/// Spin-0 sector: nabla_bar . A0 = b, nabla b = m^2 A0.
struct ScalarSector {
    FieldPtr A0;    // minquat-valued potential
    FieldPtr b;     // complex-scalar field (scalar slot only)
    double mass = 0.0;
};

/// Spin-1 sector: nabla_bar ^ A1 = b_vec, nabla b_vec + b_vec~ nabla = 2 m^2 A1.
struct ProcaSector {
    FieldPtr A1;     // minquat-valued potential
    FieldPtr b_vec;  // 6-vector field
    double mass = 0.0;
};

/// Massless sector with source: nabla_bar ^ phi = f_vec,
/// nabla f_vec + f_vec~ nabla = -8 pi J.
struct MaxwellSector {
    FieldPtr phi;    // minquat potential
    FieldPtr f_vec;  // 6-vector E + iB
    FieldPtr J;      // minquat source current
};

/// Coupled system with quaternionic mass: nabla_bar A = B dagger(E),
/// nabla B = A E, for constant coupling E.
struct EinsteinMayerSystem {
    FieldPtr A;
    FieldPtr B;
    Biquaternion E;
};

struct HiggsParams {
    double mu = 1.0;      // > 0
    double lambda = 1.0;  // > 0
};

/// Sign of the reversed term in the spin-1 equation: the tilde-symmetric
/// branch carries +, the tilde-antisymmetric (pseudovector) branch -.
enum class ParityBranch { vector_type, pseudo };

using ResidualPair = std::pair<Biquaternion, Biquaternion>;

inline double residual_norm(const ResidualPair& r) {
    return std::max(frobenius_norm(r.first), frobenius_norm(r.second));
}

// ---- residual operators ("plug the fields in, return what should be zero") --

/// (nabla_bar A - m B, nabla B - m A).
ResidualPair lanczos_residual(const LanczosPair& p, const Event& e,
                              const ConventionAssignment& c = {});

/// (A~ nabla_bar - m B~, B~ nabla - m A~) with right-acting gradients.
ResidualPair reversed_lanczos_residual(const LanczosPair& p, const Event& e,
                                       const ConventionAssignment& c);

/// nabla_bar D - m star(D) i e3; real-linear in D because of the star.
Biquaternion dirac_lanczos_residual(const Field& d, double mass, const Event& e,
                                    const ConventionAssignment& c = {});

/// (scalar(nabla_bar A0) - b, nabla b - m^2 A0).
ResidualPair scalar_sector_residual(const ScalarSector& s, const Event& e,
                                    const ConventionAssignment& c = {});

/// (vector(nabla_bar A1) - b_vec, nabla b_vec +/- b_vec~ nabla - 2 m^2 A1).
ResidualPair proca_residual(const ProcaSector& s, const Event& e,
                            const ConventionAssignment& c = {},
                            ParityBranch branch = ParityBranch::vector_type);

/// (vector(nabla_bar phi) - f, nabla f + f~ nabla + 8 pi J).
ResidualPair maxwell_residual(const MaxwellSector& s, const Event& e,
                              const ConventionAssignment& c = {});

/// The one-sided form: (vector(nabla_bar phi) - f, nabla f + 4 pi J).
ResidualPair usual_maxwell_residual(const MaxwellSector& s, const Event& e,
                                    const ConventionAssignment& c = {});

/// Left side of nabla f - f~ nabla = 0; zero iff the field carries no
/// magnetic-type source under the chosen reversion.
Biquaternion magnetic_source(const Field& f_vec, const Event& e,
                             const ConventionAssignment& c = {});

/// 2 F(X) = X f + f~ X; linear in the direction X.
Biquaternion field_tensor(const Biquaternion& f, const Biquaternion& x,
                          const ConventionAssignment& c = {});

/// Minkowski component matrix F_mu_nu of the induced rank-2 tensor.
std::array<std::array<cplx, 4>, 4> field_tensor_matrix(const Biquaternion& f,
                                                       const ConventionAssignment& c = {});

/// (nabla_bar A - B dagger(E), nabla B - A E).
ResidualPair einstein_mayer_residual(const EinsteinMayerSystem& s, const Event& e,
                                     const ConventionAssignment& c = {});

/// nabla nabla_bar E + mu E - lambda E dagger(E) E.
Biquaternion higgs_residual(const Field& e_field, const HiggsParams& p, const Event& e,
                            const ConventionAssignment& c = {});

/// nabla E - A bar(B): the derivative coupling closing the nonlinear system.
Biquaternion petiau_coupling_residual(const Field& e_field, const Field& a_field,
                                      const Field& b_field, const Event& e,
                                      const ConventionAssignment& c = {});

// ---- derived objects ---------------------------------------------------------

/// D+ = A sigma + star(B) sigma_bar, D- = (A sigma_bar - star(B) sigma) i e1.
std::pair<FieldPtr, FieldPtr> superpose_dirac(const LanczosPair& p);

/// Inverts the superposition: recovers (A, B) from (D+, D-).
std::pair<FieldPtr, FieldPtr> recover_from_dirac(FieldPtr d_plus, FieldPtr d_minus);

/// Conserved current C = dagger(A1) b + dagger(b) A1 + (...)~.
Biquaternion proca_current(const ProcaSector& s, const Event& e,
                           const ConventionAssignment& c = {});
FieldPtr proca_current_field(const ProcaSector& s, const ConventionAssignment& c = {});

/// 8 pi T(X) = dagger(b) X b + m^2 dagger(A1) X A1 + (...)~, returned as T(X).
Biquaternion proca_stress(const ProcaSector& s, const Biquaternion& x, const Event& e,
                          const ConventionAssignment& c = {});
FieldPtr proca_stress_field(const ProcaSector& s, const Biquaternion& x,
                            const ConventionAssignment& c = {});

// ---- symmetry transforms ------------------------------------------------------

/// A -> A G, B -> B G; leaves the residual norm invariant.
LanczosPair su2_gauge_transform(const LanczosPair& p, const GaugeElement& g);

/// A -> A G, B -> B, E -> dagger(G) E.
EinsteinMayerSystem em_gauge_transform(const EinsteinMayerSystem& s, const GaugeElement& g);

/// E -> dagger(G) E H.
FieldPtr higgs_gauge_transform(FieldPtr e_field, const GaugeElement& g, const GaugeElement& h);

/// (even, odd) with even~ = even, odd~ = -odd, even + odd = A.
std::pair<FieldPtr, FieldPtr> parity_project(FieldPtr a, const ConventionAssignment& c);

/// Transports a plane-wave solution pair: K -> L K dagger(L) with the
/// matching first/second-slot actions star(L)(.) and L(.). Requires plane-wave
/// fields.
LanczosPair lorentz_transform(const LanczosPair& p, const LorentzElement& l);
EinsteinMayerSystem lorentz_transform(const EinsteinMayerSystem& s, const LorentzElement& l);

// ---- momentum-space solvers -----------------------------------------------------

struct NoSolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Right-phase plane-wave ansatz reduced to a real-linear 16x16 system on the
/// amplitude pair; returns a seeded random null-space element. Throws
/// NoSolutionError off shell.
LanczosPair solve_lanczos_momentum(const WaveVector& k, double mass, Rng& rng,
                                   const ConventionAssignment& c = {});

/// Real dimension of the momentum-space solution space (8 on shell).
int lanczos_nullspace_dimension(const WaveVector& k, double mass,
                                const ConventionAssignment& c = {});

/// Solutions of the reversed (right-acting) system, built from left-phase waves.
LanczosPair solve_reversed_lanczos_momentum(const WaveVector& k, double mass, Rng& rng,
                                            const ConventionAssignment& c);

ScalarSector solve_scalar_momentum(const WaveVector& k, double mass, Rng& rng,
                                   const ConventionAssignment& c = {});

ProcaSector solve_proca_momentum(const WaveVector& k, double mass, Rng& rng,
                                 const ConventionAssignment& c = {},
                                 ParityBranch branch = ParityBranch::vector_type);

/// Source-free massless sector: potential plus 6-vector with J = 0.
MaxwellSector solve_maxwell_vacuum(const WaveVector& k, Rng& rng,
                                   const ConventionAssignment& c = {});

/// Plane-wave modes of the quaternionic-mass system at on-shell K; used by the
/// spectrum module for its constructive witnesses.
EinsteinMayerSystem solve_einstein_mayer_momentum(const Biquaternion& coupling,
                                                  const WaveVector& k, Rng& rng,
                                                  const ConventionAssignment& c = {});

}  // namespace biquat
