#include "biquat/equations.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace biquat {

namespace {

const cplx kI(0.0, 1.0);

GradientConvention grad_of(const ConventionAssignment& c) {
    return GradientConvention::from(c);
}

/// Scalar cos/sin factors of the single-phase ansatz, with exact derivatives.
FieldPtr cos_phase(const WaveVector& k) {
    auto val = [k](const Event& e) {
        return Biquaternion{cplx(std::cos(k.phase(e))), {}, {}, {}};
    };
    std::array<EventFn, 4> d1, d2;
    for (int mu = 0; mu < 4; ++mu) {
        const double g = k.phase_gradient(mu);
        d1[mu] = [k, g](const Event& e) {
            return Biquaternion{cplx(-g * std::sin(k.phase(e))), {}, {}, {}};
        };
        d2[mu] = [k, g](const Event& e) {
            return Biquaternion{cplx(-g * g * std::cos(k.phase(e))), {}, {}, {}};
        };
    }
    return analytic_field(val, d1, d2);
}

FieldPtr sin_phase(const WaveVector& k) {
    auto val = [k](const Event& e) {
        return Biquaternion{cplx(std::sin(k.phase(e))), {}, {}, {}};
    };
    std::array<EventFn, 4> d1, d2;
    for (int mu = 0; mu < 4; ++mu) {
        const double g = k.phase_gradient(mu);
        d1[mu] = [k, g](const Event& e) {
            return Biquaternion{cplx(g * std::cos(k.phase(e))), {}, {}, {}};
        };
        d2[mu] = [k, g](const Event& e) {
            return Biquaternion{cplx(-g * g * std::sin(k.phase(e))), {}, {}, {}};
        };
    }
    return analytic_field(val, d1, d2);
}

/// Two events at which cos(phase) and sin(phase) take the values (1,0) and
/// (0,+-1); sampling any single-phase linear residual there captures both
/// coefficient components exactly.
std::array<Event, 2> probe_events(const WaveVector& k) {
    Event e0{};
    Event e1{};
    for (int mu = 0; mu < 4; ++mu) {
        const double g = k.phase_gradient(mu);
        if (std::abs(g) > 1e-9) {
            e1.coord(mu) = 0.5 * M_PI / g;
            return {e0, e1};
        }
    }
    throw NoSolutionError("degenerate wave vector (all components zero)");
}

// ---- generic real-linear null-space machinery -------------------------------

using ResidualFn = std::function<std::vector<Biquaternion>(const Eigen::VectorXd&)>;

Eigen::MatrixXd build_matrix(int dim, const ResidualFn& fn) {
    Eigen::VectorXd probe = Eigen::VectorXd::Zero(dim);
    probe(0) = 1.0;
    const auto first = fn(probe);
    const int rows = static_cast<int>(first.size()) * 8;
    Eigen::MatrixXd m(rows, dim);
    auto fill = [&m](int col, const std::vector<Biquaternion>& res) {
        int r = 0;
        for (const auto& q : res)
            for (double v : q.components()) m(r++, col) = v;
    };
    fill(0, first);
    for (int j = 1; j < dim; ++j) {
        probe.setZero();
        probe(j) = 1.0;
        fill(j, fn(probe));
    }
    return m;
}

struct NullSpace {
    Eigen::MatrixXd basis;  // columns form an orthonormal basis
    int dimension = 0;
};

NullSpace nullspace_of(const Eigen::MatrixXd& m, double threshold = 1e-9) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cut = threshold * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++rank;
    NullSpace ns;
    ns.dimension = static_cast<int>(m.cols()) - rank;
    ns.basis = svd.matrixV().rightCols(ns.dimension);
    return ns;
}

Eigen::VectorXd random_element(const NullSpace& ns, Rng& rng) {
    Eigen::VectorXd coeffs(ns.dimension);
    for (int i = 0; i < ns.dimension; ++i) coeffs(i) = rng.normal();
    Eigen::VectorXd v = ns.basis * coeffs;
    const double n = v.norm();
    if (n < 1e-12) {
        v = ns.basis.col(0);
        return v;
    }
    return v / n;
}

Biquaternion slice8(const Eigen::VectorXd& v, int offset) {
    std::array<double, 8> c{};
    for (int i = 0; i < 8; ++i) c[i] = v(offset + i);
    return Biquaternion::from_components(c);
}

Biquaternion slice_minquat(const Eigen::VectorXd& v, int offset) {
    return Biquaternion::minquat(v(offset), v(offset + 1), v(offset + 2), v(offset + 3));
}

Biquaternion slice_sixvector(const Eigen::VectorXd& v, int offset) {
    return Biquaternion::six_vector({v(offset), v(offset + 1)}, {v(offset + 2), v(offset + 3)},
                                    {v(offset + 4), v(offset + 5)});
}

/// C cos(phi) + S sin(phi) as a field.
FieldPtr phase_pair(const Biquaternion& c_amp, const Biquaternion& s_amp, const WaveVector& k) {
    return add(product(constant_field(c_amp), cos_phase(k)),
               product(constant_field(s_amp), sin_phase(k)));
}

}  // namespace

// ---- residual operators -------------------------------------------------------

ResidualPair lanczos_residual(const LanczosPair& p, const Event& e,
                              const ConventionAssignment& c) {
    const auto g = grad_of(c);
    return {gradient_left_bar(*p.A, e, g) - p.mass * p.B->value(e),
            gradient_left(*p.B, e, g) - p.mass * p.A->value(e)};
}

ResidualPair reversed_lanczos_residual(const LanczosPair& p, const Event& e,
                                       const ConventionAssignment& c) {
    const auto g = grad_of(c);
    const FieldPtr ra = reverse_field(p.A, c.reversion);
    const FieldPtr rb = reverse_field(p.B, c.reversion);
    return {gradient_right_bar(*ra, e, g) - p.mass * rb->value(e),
            gradient_right(*rb, e, g) - p.mass * ra->value(e)};
}

Biquaternion dirac_lanczos_residual(const Field& d, double mass, const Event& e,
                                    const ConventionAssignment& c) {
    const Biquaternion ie3 = kI * Biquaternion::e3();
    return gradient_left_bar(d, e, grad_of(c)) - mass * (star(d.value(e)) * ie3);
}

ResidualPair scalar_sector_residual(const ScalarSector& s, const Event& e,
                                    const ConventionAssignment& c) {
    const auto g = grad_of(c);
    Biquaternion first{scalar_part(gradient_left_bar(*s.A0, e, g)), {}, {}, {}};
    first -= s.b->value(e);
    const Biquaternion second =
        gradient_left(*s.b, e, g) - (s.mass * s.mass) * s.A0->value(e);
    return {first, second};
}

ResidualPair proca_residual(const ProcaSector& s, const Event& e, const ConventionAssignment& c,
                            ParityBranch branch) {
    const auto g = grad_of(c);
    const double sign = branch == ParityBranch::vector_type ? 1.0 : -1.0;
    const Biquaternion first =
        vector_part(gradient_left_bar(*s.A1, e, g)) - s.b_vec->value(e);
    const FieldPtr rb = reverse_field(s.b_vec, c.reversion);
    const Biquaternion second = gradient_left(*s.b_vec, e, g) +
                                sign * gradient_right(*rb, e, g) -
                                (2.0 * s.mass * s.mass) * s.A1->value(e);
    return {first, second};
}

ResidualPair maxwell_residual(const MaxwellSector& s, const Event& e,
                              const ConventionAssignment& c) {
    const auto g = grad_of(c);
    const Biquaternion first = vector_part(gradient_left_bar(*s.phi, e, g)) - s.f_vec->value(e);
    const FieldPtr rf = reverse_field(s.f_vec, c.reversion);
    const Biquaternion second = gradient_left(*s.f_vec, e, g) + gradient_right(*rf, e, g) +
                                (8.0 * M_PI) * s.J->value(e);
    return {first, second};
}

ResidualPair usual_maxwell_residual(const MaxwellSector& s, const Event& e,
                                    const ConventionAssignment& c) {
    const auto g = grad_of(c);
    const Biquaternion first = vector_part(gradient_left_bar(*s.phi, e, g)) - s.f_vec->value(e);
    const Biquaternion second = gradient_left(*s.f_vec, e, g) + (4.0 * M_PI) * s.J->value(e);
    return {first, second};
}

Biquaternion magnetic_source(const Field& f_vec, const Event& e, const ConventionAssignment& c) {
    const auto g = grad_of(c);
    // f~ nabla, with the derivative pushed through the constant real-linear
    // reversion map.
    const Biquaternion ek[3] = {Biquaternion::e1(), Biquaternion::e2(), Biquaternion::e3()};
    Biquaternion right = g.ct * reverse(f_vec.derivative(0, e), c.reversion);
    for (int k = 0; k < 3; ++k)
        right += reverse(f_vec.derivative(k + 1, e), c.reversion) * ek[k];
    return gradient_left(f_vec, e, g) - right;
}

Biquaternion field_tensor(const Biquaternion& f, const Biquaternion& x,
                          const ConventionAssignment& c) {
    return 0.5 * (x * f + reverse(f, c.reversion) * x);
}

std::array<std::array<cplx, 4>, 4> field_tensor_matrix(const Biquaternion& f,
                                                       const ConventionAssignment& c) {
    const Biquaternion basis[4] = {Biquaternion::one(), Biquaternion::minquat(0, 1, 0, 0),
                                   Biquaternion::minquat(0, 0, 1, 0),
                                   Biquaternion::minquat(0, 0, 0, 1)};
    auto inner = [](const Biquaternion& a, const Biquaternion& b) {
        // Minkowski pairing extended complex-bilinearly.
        return scalar_part(0.5 * (a * bar(b) + b * bar(a)));
    };
    std::array<std::array<cplx, 4>, 4> m{};
    for (int nu = 0; nu < 4; ++nu) {
        const Biquaternion col = field_tensor(f, basis[nu], c);
        for (int mu = 0; mu < 4; ++mu) m[mu][nu] = inner(basis[mu], col);
    }
    return m;
}

ResidualPair einstein_mayer_residual(const EinsteinMayerSystem& s, const Event& e,
                                     const ConventionAssignment& c) {
    const auto g = grad_of(c);
    return {gradient_left_bar(*s.A, e, g) - s.B->value(e) * dagger(s.E),
            gradient_left(*s.B, e, g) - s.A->value(e) * s.E};
}

Biquaternion higgs_residual(const Field& e_field, const HiggsParams& p, const Event& e,
                            const ConventionAssignment&) {
    const Biquaternion v = e_field.value(e);
    return nabla_nabla_bar(e_field, e) + p.mu * v - p.lambda * (v * dagger(v) * v);
}

Biquaternion petiau_coupling_residual(const Field& e_field, const Field& a_field,
                                      const Field& b_field, const Event& e,
                                      const ConventionAssignment& c) {
    return gradient_left(e_field, e, grad_of(c)) - a_field.value(e) * bar(b_field.value(e));
}

// ---- derived objects ------------------------------------------------------------

std::pair<FieldPtr, FieldPtr> superpose_dirac(const LanczosPair& p) {
    const Biquaternion s = sigma(), sb = sigma_bar();
    const Biquaternion ie1 = kI * Biquaternion::e1();
    FieldPtr bs = star_field(p.B);
    FieldPtr d_plus = add(multiply_right(p.A, s), multiply_right(bs, sb));
    FieldPtr d_minus =
        multiply_right(subtract(multiply_right(p.A, sb), multiply_right(bs, s)), ie1);
    return {d_plus, d_minus};
}

std::pair<FieldPtr, FieldPtr> recover_from_dirac(FieldPtr d_plus, FieldPtr d_minus) {
    const Biquaternion s = sigma(), sb = sigma_bar();
    const Biquaternion ie1 = kI * Biquaternion::e1();  // (i e1)^-1 = i e1
    FieldPtr unrot = multiply_right(std::move(d_minus), ie1);
    FieldPtr a = add(multiply_right(d_plus, s), multiply_right(unrot, sb));
    FieldPtr b_star = subtract(multiply_right(std::move(d_plus), sb), multiply_right(unrot, s));
    return {a, star_field(b_star)};
}

namespace {

FieldPtr current_sum_field(const ProcaSector& s, const ConventionAssignment& c) {
    FieldPtr sum = add(product(dagger_field(s.A1), s.b_vec), product(dagger_field(s.b_vec), s.A1));
    return add(sum, reverse_field(sum, c.reversion));
}

FieldPtr stress_sum_field(const ProcaSector& s, const Biquaternion& x,
                          const ConventionAssignment& c) {
    FieldPtr xf = constant_field(x);
    FieldPtr t1 = product(dagger_field(s.b_vec), product(xf, s.b_vec));
    FieldPtr t2 = scale(s.mass * s.mass, product(dagger_field(s.A1), product(xf, s.A1)));
    FieldPtr sum = add(t1, t2);
    return scale(1.0 / (8.0 * M_PI), add(sum, reverse_field(sum, c.reversion)));
}

}  // namespace

Biquaternion proca_current(const ProcaSector& s, const Event& e, const ConventionAssignment& c) {
    return current_sum_field(s, c)->value(e);
}

FieldPtr proca_current_field(const ProcaSector& s, const ConventionAssignment& c) {
    return current_sum_field(s, c);
}

Biquaternion proca_stress(const ProcaSector& s, const Biquaternion& x, const Event& e,
                          const ConventionAssignment& c) {
    return stress_sum_field(s, x, c)->value(e);
}

FieldPtr proca_stress_field(const ProcaSector& s, const Biquaternion& x,
                            const ConventionAssignment& c) {
    return stress_sum_field(s, x, c);
}

// ---- symmetry transforms ----------------------------------------------------------

LanczosPair su2_gauge_transform(const LanczosPair& p, const GaugeElement& g) {
    return {multiply_right(p.A, g.value()), multiply_right(p.B, g.value()), p.mass};
}

EinsteinMayerSystem em_gauge_transform(const EinsteinMayerSystem& s, const GaugeElement& g) {
    return {multiply_right(s.A, g.value()), s.B, dagger(g.value()) * s.E};
}

FieldPtr higgs_gauge_transform(FieldPtr e_field, const GaugeElement& g, const GaugeElement& h) {
    return multiply_right(multiply_left(dagger(g.value()), std::move(e_field)), h.value());
}

std::pair<FieldPtr, FieldPtr> parity_project(FieldPtr a, const ConventionAssignment& c) {
    FieldPtr rev = reverse_field(a, c.reversion);
    FieldPtr even = scale(0.5, add(a, rev));
    FieldPtr odd = scale(0.5, subtract(a, rev));
    return {even, odd};
}

namespace {

WaveVector transformed_wave_vector(const WaveVector& k, const LorentzElement& l) {
    const auto comps = minquat_components(l.fourvector_action(k.minquat()));
    WaveVector out;
    out.omega = comps[0];
    out.p = {comps[1], comps[2], comps[3]};
    return out;
}

const PlaneWaveField& as_plane_wave(const Field& f) {
    const auto* pw = dynamic_cast<const PlaneWaveField*>(&f);
    if (!pw) throw std::invalid_argument("lorentz_transform requires plane-wave fields");
    return *pw;
}

}  // namespace

LanczosPair lorentz_transform(const LanczosPair& p, const LorentzElement& l) {
    const auto& a = as_plane_wave(*p.A);
    const auto& b = as_plane_wave(*p.B);
    const WaveVector k2 = transformed_wave_vector(a.wave_vector(), l);
    const Biquaternion ls = star(l.value());
    return {plane_wave(ls * a.amplitude(), k2, a.generator(), a.side(), a.phase_sign()),
            plane_wave(l.value() * b.amplitude(), k2, b.generator(), b.side(), b.phase_sign()),
            p.mass};
}

EinsteinMayerSystem lorentz_transform(const EinsteinMayerSystem& s, const LorentzElement& l) {
    const auto& a = as_plane_wave(*s.A);
    const auto& b = as_plane_wave(*s.B);
    const WaveVector k2 = transformed_wave_vector(a.wave_vector(), l);
    const Biquaternion ls = star(l.value());
    return {plane_wave(ls * a.amplitude(), k2, a.generator(), a.side(), a.phase_sign()),
            plane_wave(l.value() * b.amplitude(), k2, b.generator(), b.side(), b.phase_sign()),
            s.E};
}

// ---- momentum-space solvers ---------------------------------------------------------

namespace {

struct LanczosAnsatz {
    WaveVector k;
    ConventionAssignment c;

    LanczosPair fields(const Biquaternion& a, const Biquaternion& b, double mass) const {
        return {plane_wave(a, k, Biquaternion::e3(), PhaseSide::right, c.phase_sign),
                plane_wave(b, k, Biquaternion::e3(), PhaseSide::right, c.phase_sign), mass};
    }
};

NullSpace lanczos_nullspace(const WaveVector& k, double mass, const ConventionAssignment& c) {
    const LanczosAnsatz ansatz{k, c};
    const auto events = probe_events(k);
    ResidualFn fn = [&](const Eigen::VectorXd& v) {
        const LanczosPair p = ansatz.fields(slice8(v, 0), slice8(v, 8), mass);
        std::vector<Biquaternion> out;
        for (const Event& e : events) {
            const auto r = lanczos_residual(p, e, c);
            out.push_back(r.first);
            out.push_back(r.second);
        }
        return out;
    };
    return nullspace_of(build_matrix(16, fn));
}

}  // namespace

int lanczos_nullspace_dimension(const WaveVector& k, double mass, const ConventionAssignment& c) {
    return lanczos_nullspace(k, mass, c).dimension;
}

LanczosPair solve_lanczos_momentum(const WaveVector& k, double mass, Rng& rng,
                                   const ConventionAssignment& c) {
    const NullSpace ns = lanczos_nullspace(k, mass, c);
    if (ns.dimension == 0)
        throw NoSolutionError("no plane-wave solution: wave vector off shell");
    // Keep both amplitudes well away from zero so perturbation tests see O(1)
    // fields.
    for (int attempt = 0; attempt < 64; ++attempt) {
        const Eigen::VectorXd v = random_element(ns, rng);
        Biquaternion a = slice8(v, 0), b = slice8(v, 8);
        const double na = frobenius_norm(a), nb = frobenius_norm(b);
        if (na < 0.05 || (mass == 0.0 && nb < 0.05)) continue;
        a = (1.0 / na) * a;
        b = mass == 0.0 ? (1.0 / nb) * b : (1.0 / na) * b;
        return LanczosAnsatz{k, c}.fields(a, b, mass);
    }
    throw NoSolutionError("degenerate null space sampling");
}

LanczosPair solve_reversed_lanczos_momentum(const WaveVector& k, double mass, Rng& rng,
                                            const ConventionAssignment& c) {
    const auto events = probe_events(k);
    auto make_pair = [&](const Biquaternion& at, const Biquaternion& bt) {
        FieldPtr a = reverse_field(
            plane_wave(at, k, Biquaternion::e3(), PhaseSide::left, c.phase_sign), c.reversion);
        FieldPtr b = reverse_field(
            plane_wave(bt, k, Biquaternion::e3(), PhaseSide::left, c.phase_sign), c.reversion);
        return LanczosPair{a, b, mass};
    };
    ResidualFn fn = [&](const Eigen::VectorXd& v) {
        const LanczosPair p = make_pair(slice8(v, 0), slice8(v, 8));
        std::vector<Biquaternion> out;
        for (const Event& e : events) {
            const auto r = reversed_lanczos_residual(p, e, c);
            out.push_back(r.first);
            out.push_back(r.second);
        }
        return out;
    };
    const NullSpace ns = nullspace_of(build_matrix(16, fn));
    if (ns.dimension == 0)
        throw NoSolutionError("no plane-wave solution of the reversed system");
    const Eigen::VectorXd v = random_element(ns, rng);
    return make_pair(slice8(v, 0), slice8(v, 8));
}

ScalarSector solve_scalar_momentum(const WaveVector& k, double mass, Rng& rng,
                                   const ConventionAssignment& c) {
    const auto events = probe_events(k);
    auto make = [&](const Eigen::VectorXd& v) {
        FieldPtr a0 = phase_pair(slice_minquat(v, 0), slice_minquat(v, 4), k);
        const Biquaternion bc{cplx(v(8), v(9)), {}, {}, {}};
        const Biquaternion bs{cplx(v(10), v(11)), {}, {}, {}};
        FieldPtr b = phase_pair(bc, bs, k);
        return ScalarSector{a0, b, mass};
    };
    ResidualFn fn = [&](const Eigen::VectorXd& v) {
        const ScalarSector s = make(v);
        std::vector<Biquaternion> out;
        for (const Event& e : events) {
            const auto r = scalar_sector_residual(s, e, c);
            out.push_back(r.first);
            out.push_back(r.second);
        }
        return out;
    };
    const NullSpace ns = nullspace_of(build_matrix(12, fn));
    if (ns.dimension == 0) throw NoSolutionError("no scalar-sector plane wave at this K");
    return make(random_element(ns, rng));
}

ProcaSector solve_proca_momentum(const WaveVector& k, double mass, Rng& rng,
                                 const ConventionAssignment& c, ParityBranch branch) {
    const auto events = probe_events(k);
    auto make = [&](const Eigen::VectorXd& v) {
        FieldPtr a1 = phase_pair(slice_minquat(v, 0), slice_minquat(v, 4), k);
        FieldPtr b = phase_pair(slice_sixvector(v, 8), slice_sixvector(v, 14), k);
        return ProcaSector{a1, b, mass};
    };
    const auto g = grad_of(c);
    ResidualFn fn = [&](const Eigen::VectorXd& v) {
        const ProcaSector s = make(v);
        std::vector<Biquaternion> out;
        for (const Event& e : events) {
            const auto r = proca_residual(s, e, c, branch);
            out.push_back(r.first);
            out.push_back(r.second);
            // Exclude spin-0 admixtures: the scalar slot of nabla_bar A1.
            out.push_back({scalar_part(gradient_left_bar(*s.A1, e, g)), {}, {}, {}});
        }
        return out;
    };
    const NullSpace ns = nullspace_of(build_matrix(20, fn));
    if (ns.dimension == 0) throw NoSolutionError("no spin-1 plane wave at this K");
    return make(random_element(ns, rng));
}

MaxwellSector solve_maxwell_vacuum(const WaveVector& k, Rng& rng,
                                   const ConventionAssignment& c) {
    const auto events = probe_events(k);
    FieldPtr zero = constant_field(Biquaternion::zero());
    auto make = [&](const Eigen::VectorXd& v) {
        FieldPtr phi = phase_pair(slice_minquat(v, 0), slice_minquat(v, 4), k);
        FieldPtr f = phase_pair(slice_sixvector(v, 8), slice_sixvector(v, 14), k);
        return MaxwellSector{phi, f, zero};
    };
    const auto g = grad_of(c);
    ResidualFn fn = [&](const Eigen::VectorXd& v) {
        const MaxwellSector s = make(v);
        std::vector<Biquaternion> out;
        for (const Event& e : events) {
            const auto r = maxwell_residual(s, e, c);
            const auto u = usual_maxwell_residual(s, e, c);
            out.push_back(r.first);
            out.push_back(r.second);
            out.push_back(u.second);
            out.push_back({scalar_part(gradient_left_bar(*s.phi, e, g)), {}, {}, {}});
        }
        return out;
    };
    const NullSpace ns = nullspace_of(build_matrix(20, fn));
    if (ns.dimension == 0) throw NoSolutionError("no vacuum wave at this K");
    return make(random_element(ns, rng));
}

EinsteinMayerSystem solve_einstein_mayer_momentum(const Biquaternion& coupling,
                                                  const WaveVector& k, Rng& rng,
                                                  const ConventionAssignment& c) {
    const auto events = probe_events(k);
    auto make = [&](const Biquaternion& a, const Biquaternion& b) {
        return EinsteinMayerSystem{
            plane_wave(a, k, Biquaternion::e3(), PhaseSide::right, c.phase_sign),
            plane_wave(b, k, Biquaternion::e3(), PhaseSide::right, c.phase_sign), coupling};
    };
    ResidualFn fn = [&](const Eigen::VectorXd& v) {
        const EinsteinMayerSystem s = make(slice8(v, 0), slice8(v, 8));
        std::vector<Biquaternion> out;
        for (const Event& e : events) {
            const auto r = einstein_mayer_residual(s, e, c);
            out.push_back(r.first);
            out.push_back(r.second);
        }
        return out;
    };
    const NullSpace ns = nullspace_of(build_matrix(16, fn));
    if (ns.dimension == 0)
        throw NoSolutionError("wave vector off shell for both mass eigenvalues");
    const Eigen::VectorXd v = random_element(ns, rng);
    return make(slice8(v, 0), slice8(v, 8));
}

}  // namespace biquat
