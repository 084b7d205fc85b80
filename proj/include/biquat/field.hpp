#pragma once

#include <array>
#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include "biquat/biquaternion.hpp"
#include "biquat/convention.hpp"
#include "biquat/rng.hpp"

namespace biquat {

/// Spacetime event in natural units (c = hbar = 1).
struct Event {
    double t = 0.0, x = 0.0, y = 0.0, z = 0.0;

    double coord(int mu) const {
        switch (mu) {
            case 0: return t;
            case 1: return x;
            case 2: return y;
            default: return z;
        }
    }
    double& coord(int mu) {
        switch (mu) {
            case 0: return t;
            case 1: return x;
            case 2: return y;
            default: return z;
        }
    }
};

/// Wave 4-vector: real frequency plus real 3-momentum.
struct WaveVector {
    double omega = 0.0;
    std::array<double, 3> p{0.0, 0.0, 0.0};

    /// phi(x) = omega t - p.x
    double phase(const Event& e) const {
        return omega * e.t - p[0] * e.x - p[1] * e.y - p[2] * e.z;
    }
    double phase_gradient(int mu) const {
        return mu == 0 ? omega : -p[mu - 1];
    }
    Biquaternion minquat() const { return Biquaternion::minquat(omega, p[0], p[1], p[2]); }

    double on_shell_defect(double mass) const {
        return std::abs(omega * omega - p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - mass * mass);
    }
    bool on_shell(double mass, double tol = 1e-10) const { return on_shell_defect(mass) <= tol; }
};

/// omega = +sqrt(|p|^2 + m^2) with |p| <= 2m + 1; deterministic per stream.
WaveVector sample_on_shell(double mass, Rng& rng);

/// Biquaternion-valued spacetime field with evaluable first (and where
/// supported, pure second) partial derivatives.
class Field {
public:
    virtual ~Field() = default;
    virtual Biquaternion value(const Event& e) const = 0;
    virtual Biquaternion derivative(int mu, const Event& e) const = 0;
    /// d^2/dx_mu^2; combinators propagate it, oracles override it.
    virtual Biquaternion second_derivative(int mu, const Event& e) const = 0;
};

using FieldPtr = std::shared_ptr<const Field>;

enum class PhaseSide { left, right };

/// amplitude * exp(g phi) for right-side phase (exp(g phi) * amplitude for
/// left), with exp(g phi) = cos phi + g sin phi. The generator must satisfy
/// g^2 = -1, which makes the factor a genuine one-parameter phase commuting
/// with g.
class PlaneWaveField final : public Field {
public:
    PlaneWaveField(Biquaternion amplitude, WaveVector k,
                   Biquaternion generator = Biquaternion::e3(),
                   PhaseSide side = PhaseSide::right, int phase_sign = +1);

    Biquaternion value(const Event& e) const override;
    Biquaternion derivative(int mu, const Event& e) const override;
    Biquaternion second_derivative(int mu, const Event& e) const override;

    const Biquaternion& amplitude() const { return amplitude_; }
    const WaveVector& wave_vector() const { return k_; }
    const Biquaternion& generator() const { return generator_; }
    PhaseSide side() const { return side_; }
    int phase_sign() const { return phase_sign_; }

private:
    Biquaternion phase_factor(const Event& e) const;

    Biquaternion amplitude_;
    WaveVector k_;
    Biquaternion generator_;
    PhaseSide side_;
    int phase_sign_;
};

// ---- combinators (all derivative-exact) ------------------------------------

FieldPtr constant_field(const Biquaternion& q);
FieldPtr plane_wave(const Biquaternion& amplitude, const WaveVector& k,
                    const Biquaternion& generator = Biquaternion::e3(),
                    PhaseSide side = PhaseSide::right, int phase_sign = +1);
FieldPtr add(FieldPtr a, FieldPtr b);
FieldPtr subtract(FieldPtr a, FieldPtr b);
FieldPtr scale(cplx s, FieldPtr f);
FieldPtr multiply_left(const Biquaternion& c, FieldPtr f);
FieldPtr multiply_right(FieldPtr f, const Biquaternion& c);
/// Pointwise product with Leibniz derivatives.
FieldPtr product(FieldPtr a, FieldPtr b);
/// Pointwise application of a constant real-linear map (star, bar, dagger,
/// reverse, grade projections, ...); derivatives commute with the map.
FieldPtr mapped(FieldPtr f, std::function<Biquaternion(const Biquaternion&)> map);

FieldPtr star_field(FieldPtr f);
FieldPtr bar_field(FieldPtr f);
FieldPtr dagger_field(FieldPtr f);
FieldPtr reverse_field(FieldPtr f, ReversionKind kind);
FieldPtr scalar_part_field(FieldPtr f);
FieldPtr vector_part_field(FieldPtr f);

/// Field from closures; second derivatives optional (throws if requested but
/// absent).
using EventFn = std::function<Biquaternion(const Event&)>;
FieldPtr analytic_field(EventFn value, std::array<EventFn, 4> derivatives,
                        std::array<EventFn, 4> second_derivatives = {});

// ---- the quaternion 4-gradient ---------------------------------------------

/// Coefficients of the 4-gradient: scalar slot d/d(it) = -i d/dt carrying the
/// conventional sign, vector slots +ek d/dk.
struct GradientConvention {
    cplx ct{0.0, -1.0};

    static GradientConvention from(const ConventionAssignment& c) {
        return {cplx(0.0, c.grad_scalar_sign > 0 ? -1.0 : 1.0)};
    }
};

/// nabla F = ct dF/dt + sum_k ek dF/dk, applied from the left.
Biquaternion gradient_left(const Field& f, const Event& e,
                           const GradientConvention& g = {});
/// nabla_bar F (vector slots negated), from the left.
Biquaternion gradient_left_bar(const Field& f, const Event& e,
                               const GradientConvention& g = {});
/// F nabla: coefficients applied from the right.
Biquaternion gradient_right(const Field& f, const Event& e,
                            const GradientConvention& g = {});
Biquaternion gradient_right_bar(const Field& f, const Event& e,
                                const GradientConvention& g = {});

/// The composite nabla nabla_bar = -d^2/dt^2 + laplacian (a scalar operator,
/// independent of the scalar-slot sign).
Biquaternion nabla_nabla_bar(const Field& f, const Event& e);

/// d/dt(scalar) + div(3-vector) of a minquat-valued field.
cplx four_divergence(const Field& f, const Event& e);

}  // namespace biquat
