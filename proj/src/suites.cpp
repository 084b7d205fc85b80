#include "biquat/suites.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "biquat/dynamics.hpp"
#include "biquat/equations.hpp"
#include "biquat/lattice.hpp"
#include "biquat/rng.hpp"
#include "biquat/spectrum.hpp"

namespace biquat {

void SuiteResult::add(std::string name, double value, double tolerance, bool at_least) {
    CheckResult c;
    c.name = std::move(name);
    c.value = value;
    c.tolerance = tolerance;
    c.at_least = at_least;
    c.pass = at_least ? value >= tolerance : value <= tolerance;
    checks.push_back(std::move(c));
}

void SuiteResult::finalize() {
    pass = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "lanczos", "dirac",  "proca",      "scalar",       "maxwell",
        "einstein-mayer", "higgs", "covariance", "conservation"};
    return names;
}

namespace {

const cplx kI(0.0, 1.0);

Event random_event(Rng& rng, double radius = 1.5) {
    return {rng.uniform(-radius, radius), rng.uniform(-radius, radius),
            rng.uniform(-radius, radius), rng.uniform(-radius, radius)};
}

/// On-shell K restricted to the frame compatible with the selected reversion:
/// the reversion acts as a spatial reflection and the sector equations close
/// only where the wave respects it (transpose mirrors the y-axis, bar mirrors
/// all of space).
WaveVector sample_compatible(double mass, Rng& rng, const ConventionAssignment& c) {
    WaveVector k = sample_on_shell(mass, rng);
    switch (c.reversion) {
        case ReversionKind::transpose:
            k.p[1] = 0.0;
            break;
        case ReversionKind::bar:
            k.p = {0.0, 0.0, 0.0};
            break;
        default:
            break;
    }
    k.omega = std::sqrt(mass * mass + k.p[0] * k.p[0] + k.p[1] * k.p[1] + k.p[2] * k.p[2]);
    return k;
}

double max_residual_at_events(const std::function<double(const Event&)>& f, Rng& rng, int n) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) worst = std::max(worst, f(random_event(rng)));
    return worst;
}

// ---- individual suites -------------------------------------------------------

SuiteResult suite_lanczos(const SuiteConfig& cfg) {
    SuiteResult r{"lanczos", cfg.seed, cfg.convention, {}, false};
    const auto& c = cfg.convention;
    Rng root(cfg.seed, "suite/lanczos");

    double on_shell = 0.0, off_shell_min = 1e30, kg = 0.0, su2_drift = 0.0;
    int dim_defect = 0;
    const double masses[4] = {0.0, 0.5, 1.0, 2.0};
    for (double m : masses) {
        for (int i = 0; i < cfg.samples; ++i) {
            auto rng = root.split("m" + std::to_string(m) + "/" + std::to_string(i));
            const WaveVector k = sample_on_shell(m, rng);
            const LanczosPair sol = solve_lanczos_momentum(k, m, rng, c);
            on_shell = std::max(on_shell, max_residual_at_events(
                [&](const Event& e) { return residual_norm(lanczos_residual(sol, e, c)); }, rng, 3));

            // Dispersion sensitivity: shift the frequency off shell.
            WaveVector ko = k;
            ko.omega += 0.1;
            const auto& a = dynamic_cast<const PlaneWaveField&>(*sol.A);
            const auto& b = dynamic_cast<const PlaneWaveField&>(*sol.B);
            const LanczosPair off{plane_wave(a.amplitude(), ko, a.generator(), a.side(), a.phase_sign()),
                                  plane_wave(b.amplitude(), ko, b.generator(), b.side(), b.phase_sign()),
                                  m};
            off_shell_min = std::min(off_shell_min,
                                     residual_norm(lanczos_residual(off, Event{}, c)));

            // Klein-Gordon composite on both slots.
            kg = std::max(kg, max_residual_at_events(
                [&](const Event& e) {
                    const double d1 = distance(nabla_nabla_bar(*sol.A, e), m * m * sol.A->value(e));
                    const double d2 = distance(nabla_nabla_bar(*sol.B, e), m * m * sol.B->value(e));
                    return std::max(d1, d2);
                },
                rng, 2));

            // Right SU(2) factors leave the residual norm unchanged, checked on
            // an off-shell pair where the residual is O(1).
            const GaugeElement g = random_gauge(rng);
            const LanczosPair off_g = su2_gauge_transform(off, g);
            const Event e0 = random_event(rng);
            su2_drift = std::max(su2_drift,
                                 std::abs(residual_norm(lanczos_residual(off_g, e0, c)) -
                                          residual_norm(lanczos_residual(off, e0, c))));
        }
        auto rng = root.split("dim" + std::to_string(m));
        const WaveVector k = sample_on_shell(m, rng);
        dim_defect = std::max(dim_defect, std::abs(lanczos_nullspace_dimension(k, m, c) - 8));
    }
    r.add("on-shell-residual", on_shell, 1e-12);
    r.add("off-shell-sensitivity", off_shell_min, 1e-2, true);
    r.add("solution-space-dimension-8", dim_defect, 0.0);
    r.add("klein-gordon-identity", kg, 1e-11);
    r.add("su2-right-invariance", su2_drift, 1e-12);
    r.finalize();
    return r;
}

SuiteResult suite_dirac(const SuiteConfig& cfg) {
    SuiteResult r{"dirac", cfg.seed, cfg.convention, {}, false};
    const auto& c = cfg.convention;
    Rng root(cfg.seed, "suite/dirac");

    double superpos = 0.0, recomb = 0.0, roundtrip = 0.0, kg = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
        auto rng = root.split(std::to_string(i));
        const double m = rng.uniform(0.3, 2.0);
        const WaveVector k = sample_on_shell(m, rng);
        const LanczosPair sol = solve_lanczos_momentum(k, m, rng, c);
        const auto [dp, dm] = superpose_dirac(sol);
        superpos = std::max(superpos, max_residual_at_events(
            [&](const Event& e) {
                return std::max(frobenius_norm(dirac_lanczos_residual(*dp, m, e, c)),
                                frobenius_norm(dirac_lanczos_residual(*dm, m, e, c)));
            },
            rng, 3));
        kg = std::max(kg, max_residual_at_events(
            [&](const Event& e) {
                return distance(nabla_nabla_bar(*dp, e), m * m * dp->value(e));
            },
            rng, 2));
        const auto [ar, br] = recover_from_dirac(dp, dm);
        recomb = std::max(recomb, max_residual_at_events(
            [&](const Event& e) {
                return std::max(distance(ar->value(e), sol.A->value(e)),
                                distance(br->value(e), sol.B->value(e)));
            },
            rng, 3));
        const Biquaternion d = rng.biquaternion();
        roundtrip = std::max(roundtrip, distance(from_bispinor(to_bispinor(d)), d));
    }
    r.add("superposition-residual", superpos, 1e-12);
    r.add("superposition-klein-gordon", kg, 1e-11);
    r.add("recombination-identity", recomb, 1e-13);
    r.add("bispinor-roundtrip", roundtrip, 1e-15);
    r.finalize();
    return r;
}

SuiteResult suite_proca(const SuiteConfig& cfg) {
    SuiteResult r{"proca", cfg.seed, cfg.convention, {}, false};
    const auto& c = cfg.convention;
    Rng root(cfg.seed, "suite/proca");

    double solver = 0.0, pseudo = 0.0, minquat = 0.0, energy_violation = 0.0, linearity = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
        auto rng = root.split(std::to_string(i));
        const double m = rng.uniform(0.4, 1.8);
        const WaveVector k = sample_compatible(m, rng, c);
        const ProcaSector sol = solve_proca_momentum(k, m, rng, c);
        solver = std::max(solver, max_residual_at_events(
            [&](const Event& e) { return residual_norm(proca_residual(sol, e, c)); }, rng, 3));

        const ProcaSector ps = solve_proca_momentum(k, m, rng, c, ParityBranch::pseudo);
        pseudo = std::max(pseudo, max_residual_at_events(
            [&](const Event& e) {
                return residual_norm(proca_residual(ps, e, c, ParityBranch::pseudo));
            },
            rng, 3));

        const Event e0 = random_event(rng);
        minquat = std::max(minquat, minquat_defect(proca_current(sol, e0, c)));

        const Biquaternion t_time = proca_stress(sol, Biquaternion::one(), e0, c);
        energy_violation = std::max(energy_violation, std::max(0.0, -t_time.w.real()));

        const Biquaternion x1 = Biquaternion::minquat(0.3, 0.1, -0.4, 0.2);
        const Biquaternion x2 = Biquaternion::minquat(-0.7, 0.5, 0.0, 0.9);
        linearity = std::max(linearity, distance(proca_stress(sol, x1 + x2, e0, c),
                                                 proca_stress(sol, x1, e0, c) +
                                                     proca_stress(sol, x2, e0, c)));
    }
    r.add("solver-residual", solver, 1e-12);
    r.add("pseudovector-branch-residual", pseudo, 1e-12);
    r.add("current-minquat", minquat, 1e-12);
    r.add("energy-density-nonnegative", energy_violation, 1e-12);
    r.add("stress-linearity", linearity, 1e-12);
    r.finalize();
    return r;
}

SuiteResult suite_scalar(const SuiteConfig& cfg) {
    SuiteResult r{"scalar", cfg.seed, cfg.convention, {}, false};
    const auto& c = cfg.convention;
    Rng root(cfg.seed, "suite/scalar");

    double solver = 0.0, symmetry = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
        auto rng = root.split(std::to_string(i));
        const double m = rng.uniform(0.4, 1.8);
        const WaveVector k = sample_compatible(m, rng, c);
        const ScalarSector sol = solve_scalar_momentum(k, m, rng, c);
        solver = std::max(solver, max_residual_at_events(
            [&](const Event& e) { return residual_norm(scalar_sector_residual(sol, e, c)); },
            rng, 3));
        // b inherits definite reversion symmetry from the 4-vector sector.
        const Event e0 = random_event(rng);
        const Biquaternion b = sol.b->value(e0);
        symmetry = std::max(symmetry, distance(b, reverse(b, c.reversion)));
    }
    // Massless degenerate case: constant potential, b = 0.
    const ScalarSector constant{constant_field(Biquaternion::minquat(0.4, -0.3, 0.2, 0.8)),
                                constant_field(Biquaternion::zero()), 0.0};
    const double const_res = residual_norm(scalar_sector_residual(constant, Event{0.2, 0.1, 0, 0}, c));

    r.add("solver-residual", solver, 1e-12);
    r.add("b-reversion-symmetric", symmetry, 1e-12);
    r.add("massless-constant-solution", const_res, 1e-15);
    r.finalize();
    return r;
}

SuiteResult suite_maxwell(const SuiteConfig& cfg) {
    SuiteResult r{"maxwell", cfg.seed, cfg.convention, {}, false};
    const auto& c = cfg.convention;
    Rng root(cfg.seed, "suite/maxwell");

    // Vacuum waves along z: the sector of the canonical transverse wave
    // E = x cos(z-t), B = y cos(z-t).
    WaveVector k;
    k.omega = 1.0;
    k.p = {0.0, 0.0, 1.0};

    double vac11 = 0.0, vac13 = 0.0, combo = 0.0, monopole_min = 1e30, potential_source = 0.0;
    for (int i = 0; i < std::max(1, cfg.samples / 5); ++i) {
        auto rng = root.split("vac" + std::to_string(i));
        MaxwellSector vac = solve_maxwell_vacuum(k, rng, c);
        for (int j = 0; j < 4; ++j) {
            const Event e = random_event(rng);
            vac11 = std::max(vac11, residual_norm(maxwell_residual(vac, e, c)));
            vac13 = std::max(vac13, residual_norm(usual_maxwell_residual(vac, e, c)));
        }
    }

    // Combination identity on random (non-solution) fields.
    for (int i = 0; i < cfg.samples; ++i) {
        auto rng = root.split("combo" + std::to_string(i));
        const WaveVector kr = sample_on_shell(rng.uniform(0.2, 1.5), rng);
        const MaxwellSector s{plane_wave(rng.biquaternion(), kr, Biquaternion::e3()),
                              plane_wave(rng.biquaternion(), kr, Biquaternion::e3()),
                              plane_wave(rng.biquaternion(), kr, Biquaternion::e3())};
        const Event e = random_event(rng);
        const Biquaternion lhs = maxwell_residual(s, e, c).second;
        const Biquaternion rhs =
            2.0 * usual_maxwell_residual(s, e, c).second - magnetic_source(*s.f_vec, e, c);
        combo = std::max(combo, distance(lhs, rhs));
    }

    // Monopole witness: B = r/|r|^3 violates the no-magnetic-source form.
    {
        auto b_field = [](const Event& e) {
            const double r2 = e.x * e.x + e.y * e.y + e.z * e.z;
            const double r3 = std::pow(r2, 1.5);
            return Biquaternion::six_vector(kI * (e.x / r3), kI * (e.y / r3), kI * (e.z / r3));
        };
        std::array<EventFn, 4> d1;
        d1[0] = [](const Event&) { return Biquaternion(); };
        for (int kk = 1; kk < 4; ++kk)
            d1[kk] = [kk](const Event& e) {
                const double xs[3] = {e.x, e.y, e.z};
                const double r2 = e.x * e.x + e.y * e.y + e.z * e.z;
                const double r3 = std::pow(r2, 1.5), r5 = std::pow(r2, 2.5);
                cplx comp[3];
                for (int j = 0; j < 3; ++j) {
                    double v = -3.0 * xs[j] * xs[kk - 1] / r5;
                    if (j == kk - 1) v += 1.0 / r3;
                    comp[j] = kI * v;
                }
                return Biquaternion::six_vector(comp[0], comp[1], comp[2]);
            };
        const FieldPtr monopole = analytic_field(b_field, d1);
        Rng rng = root.split("monopole");
        for (int i = 0; i < 10; ++i) {
            Event e{0.0, rng.uniform(0.3, 1.0), rng.uniform(0.3, 1.0), rng.uniform(0.3, 1.0)};
            monopole_min = std::min(monopole_min, frobenius_norm(magnetic_source(*monopole, e, c)));
        }
    }

    // Fields derived from compatible potentials carry no magnetic source.
    for (int i = 0; i < std::max(1, cfg.samples / 5); ++i) {
        auto rng = root.split("pot" + std::to_string(i));
        MaxwellSector vac = solve_maxwell_vacuum(k, rng, c);
        for (int j = 0; j < 3; ++j) {
            const Event e = random_event(rng);
            potential_source =
                std::max(potential_source, frobenius_norm(magnetic_source(*vac.f_vec, e, c)));
        }
    }

    r.add("vacuum-wave-residual-symmetrized", vac11, 1e-12);
    r.add("vacuum-wave-residual-one-sided", vac13, 1e-12);
    r.add("form-combination-identity", combo, 1e-12);
    r.add("monopole-witness-violation", monopole_min, 1e-1, true);
    r.add("potential-field-no-magnetic-source", potential_source, 1e-11);
    r.finalize();
    return r;
}

SuiteResult suite_einstein_mayer(const SuiteConfig& cfg) {
    SuiteResult r{"einstein-mayer", cfg.seed, cfg.convention, {}, false};
    const auto& c = cfg.convention;
    Rng root(cfg.seed, "suite/em");

    double degen = 0.0, null_min_mass = 0.0, witness = 0.0, det_identity = 0.0, gauge_drift = 0.0,
           second_order = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
        auto rng = root.split(std::to_string(i));
        // Degenerate doublet: E = m 1.
        const double m = rng.uniform(0.3, 2.0);
        const MassSpectrum sm = mass_spectrum(m * Biquaternion::one());
        degen = std::max({degen, std::abs(sm.m1 - m), std::abs(sm.m2 - m)});

        // Null couplings q (1 + i n.e) force one massless branch.
        const auto n = rng.unit3();
        const Biquaternion null_e =
            rng.biquaternion() *
            (Biquaternion::one() + kI * Biquaternion::six_vector(n[0], n[1], n[2]));
        const MassSpectrum sn = mass_spectrum(null_e);
        null_min_mass = std::max(null_min_mass, sn.m1);

        // det(E dagger(E)) = |quaternion_norm(E)|^2.
        const Biquaternion e_rand = rng.biquaternion();
        const double lhs = mass_operator(e_rand).det().real();
        const double rhs = std::norm(quaternion_norm(e_rand));
        det_identity = std::max(det_identity, std::abs(lhs - rhs) / std::max(1.0, rhs));

        // Spectrum invariance under E -> dagger(G) E.
        const GaugeElement g = random_gauge(rng);
        const MassSpectrum sg = mass_spectrum(dagger(g.value()) * e_rand);
        const MassSpectrum s0 = mass_spectrum(e_rand);
        gauge_drift = std::max(gauge_drift, std::max(std::abs(sg.m1 - s0.m1),
                                                     std::abs(sg.m2 - s0.m2)));
    }

    // Constructive witnesses on both branches of a null coupling.
    {
        auto rng = root.split("witness");
        const Biquaternion null_e = Biquaternion::one() + kI * Biquaternion::e3();
        for (int branch : {1, 2}) {
            const std::array<double, 3> p = {0.4, -0.2, 0.7};
            const EinsteinMayerSystem sys = solve_einstein_mayer_mode(null_e, branch, p, rng, c);
            witness = std::max(witness, max_residual_at_events(
                [&](const Event& e) { return residual_norm(einstein_mayer_residual(sys, e, c)); },
                rng, 3));
            second_order = std::max(second_order, max_residual_at_events(
                [&](const Event& e) {
                    return distance(nabla_nabla_bar(*sys.A, e),
                                    sys.A->value(e) * (sys.E * dagger(sys.E)));
                },
                rng, 2));
        }
        // Reduction to the fundamental system at E = m 1.
        const double m = 1.3;
        const WaveVector k = sample_on_shell(m, rng);
        const LanczosPair lp = solve_lanczos_momentum(k, m, rng, c);
        const EinsteinMayerSystem as_em{lp.A, lp.B, m * Biquaternion::one()};
        witness = std::max(witness, max_residual_at_events(
            [&](const Event& e) { return residual_norm(einstein_mayer_residual(as_em, e, c)); },
            rng, 3));
    }

    r.add("degenerate-masses", degen, 1e-11);
    r.add("null-coupling-massless-branch", null_min_mass, 1e-9);
    r.add("witness-mode-residual", witness, 1e-11);
    r.add("determinant-norm-identity", det_identity, 1e-11);
    r.add("gauge-spectrum-invariance", gauge_drift, 1e-11);
    r.add("second-order-mass-eigenvalue", second_order, 1e-11);
    r.finalize();
    return r;
}

SuiteResult suite_higgs(const SuiteConfig& cfg) {
    SuiteResult r{"higgs", cfg.seed, cfg.convention, {}, false};
    const auto& c = cfg.convention;
    Rng root(cfg.seed, "suite/higgs");
    const HiggsParams hp{1.0, 0.7};

    double vacuum = 0.0, gauge = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
        auto rng = root.split(std::to_string(i));
        const GaugeElement gv = random_gauge(rng);
        const Biquaternion e0 = std::sqrt(hp.mu / hp.lambda) * gv.value();
        const FieldPtr ef = constant_field(e0);
        const Event e = random_event(rng);
        vacuum = std::max(vacuum, frobenius_norm(higgs_residual(*ef, hp, e, c)));

        // Residual-norm invariance under E -> dagger(G) E H on a non-solution.
        const WaveVector k = sample_on_shell(1.0, rng);
        const FieldPtr wild = plane_wave(rng.biquaternion(), k, Biquaternion::e3());
        const GaugeElement g = random_gauge(rng);
        const GaugeElement h = random_gauge(rng);
        const FieldPtr transformed = higgs_gauge_transform(wild, g, h);
        gauge = std::max(gauge, std::abs(frobenius_norm(higgs_residual(*transformed, hp, e, c)) -
                                         frobenius_norm(higgs_residual(*wild, hp, e, c))));
    }

    // Gradient flow pulls a perturbed vacuum back onto the manifold.
    auto rng = root.split("relax");
    const Biquaternion e0 = std::sqrt(hp.mu / hp.lambda) * Biquaternion::one();
    const LatticeField start = lattice_from_closure(
        [&](const Event& ev) {
            return e0 + 0.05 * std::sin(2.0 * M_PI * ev.z / (16 * 0.25)) * rng.biquaternion();
        },
        {1, 1, 1, 16}, {1.0, 1.0, 1.0, 0.25});
    const RelaxationResult relax = higgs_relax(start, hp, 1000);
    const double ratio = relax.defect_history.front() /
                         std::max(relax.defect_history.back(), 1e-300);
    // Zero is an exact (unstable) fixed point.
    const LatticeField zero_start = lattice_from_closure(
        [](const Event&) { return Biquaternion::zero(); }, {1, 1, 1, 8}, {1, 1, 1, 0.25});
    const RelaxationResult zero_relax = higgs_relax(zero_start, hp, 50);
    double zero_drift = 0.0;
    std::array<int, 4> idx{};
    for (idx[3] = 0; idx[3] < 8; ++idx[3])
        zero_drift = std::max(zero_drift, frobenius_norm(zero_relax.field.at(idx)));

    r.add("vacuum-manifold-residual", vacuum, 1e-13);
    r.add("gauge-invariance", gauge, 1e-12);
    r.add("relaxation-defect-reduction", ratio, 10.0, true);
    r.add("zero-fixed-point", zero_drift, 1e-15);
    r.finalize();
    return r;
}

SuiteResult suite_covariance(const SuiteConfig& cfg) {
    SuiteResult r{"covariance", cfg.seed, cfg.convention, {}, false};
    const auto& c = cfg.convention;
    Rng root(cfg.seed, "suite/covariance");

    double transported = 0.0, norm_pres = 0.0, six_scalar = 0.0, herm = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
        auto rng = root.split(std::to_string(i));
        const double m = rng.uniform(0.3, 2.0);
        const WaveVector k = sample_on_shell(m, rng);
        const LanczosPair sol = solve_lanczos_momentum(k, m, rng, c);
        const LorentzElement l = random_lorentz(rng, 3.0);
        const LanczosPair moved = lorentz_transform(sol, l);
        transported = std::max(transported, max_residual_at_events(
            [&](const Event& e) { return residual_norm(lanczos_residual(moved, e, c)); }, rng, 3));

        // Minkowski norm preservation on random 4-vectors.
        const Biquaternion x = Biquaternion::minquat(rng.uniform(-2, 2), rng.uniform(-2, 2),
                                                     rng.uniform(-2, 2), rng.uniform(-2, 2));
        const Biquaternion lx = l.fourvector_action(x);
        const double n0 = quaternion_norm(x).real();
        norm_pres = std::max(norm_pres, std::abs(quaternion_norm(lx).real() - n0) /
                                            std::max(1.0, std::abs(n0)));
        herm = std::max(herm, minquat_defect(lx));

        const Biquaternion f = Biquaternion::six_vector(
            rng.complex_unit_ball(), rng.complex_unit_ball(), rng.complex_unit_ball());
        six_scalar = std::max(six_scalar, std::abs(scalar_part(l.sixvector_action(f))));
    }

    // Double cover: a full turn is -1 yet acts as the identity on 4-vectors.
    const LorentzElement turn = rotation({0.0, 0.0, 1.0}, 2.0 * M_PI);
    const double center = distance(turn.value(), -Biquaternion::one());
    const Biquaternion probe = Biquaternion::minquat(0.3, -1.2, 0.4, 0.9);
    const double acts_trivially = distance(turn.fourvector_action(probe), probe);

    r.add("transported-solutions-residual", transported, 1e-10);
    r.add("minkowski-norm-preservation", norm_pres, 1e-11);
    r.add("sixvector-action-scalar-free", six_scalar, 1e-12);
    r.add("fourvector-action-hermitian", herm, 1e-12);
    r.add("double-cover-center", center, 1e-12);
    r.add("double-cover-trivial-action", acts_trivially, 1e-12);
    r.finalize();
    return r;
}

SuiteResult suite_conservation(const SuiteConfig& cfg) {
    SuiteResult r{"conservation", cfg.seed, cfg.convention, {}, false};
    const auto& c = cfg.convention;
    Rng root(cfg.seed, "suite/conservation");

    double current_div = 0.0, stress_div = 0.0, current_minquat = 0.0, scaling = 0.0;
    const Biquaternion slots[4] = {Biquaternion::one(), Biquaternion::minquat(0, 1, 0, 0),
                                   Biquaternion::minquat(0, 0, 1, 0),
                                   Biquaternion::minquat(0, 0, 0, 1)};
    for (int i = 0; i < cfg.samples; ++i) {
        auto rng = root.split(std::to_string(i));
        const double m = rng.uniform(0.4, 1.8);
        const WaveVector k = sample_compatible(m, rng, c);
        const ProcaSector sol = solve_proca_momentum(k, m, rng, c);
        const FieldPtr cf = proca_current_field(sol, c);
        for (int j = 0; j < 3; ++j) {
            const Event e = random_event(rng);
            current_div = std::max(current_div, std::abs(four_divergence(*cf, e)));
            current_minquat = std::max(current_minquat, minquat_defect(cf->value(e)));
        }
        for (const auto& slot : slots) {
            const FieldPtr tf = proca_stress_field(sol, slot, c);
            const Event e = random_event(rng);
            stress_div = std::max(stress_div, std::abs(four_divergence(*tf, e)));
        }
        // Bilinearity: scaling the fields by real lambda scales C by lambda^2.
        const double lam = rng.uniform(0.5, 2.0);
        const ProcaSector scaled{scale(lam, sol.A1), scale(lam, sol.b_vec), sol.mass};
        const Event e = random_event(rng);
        scaling = std::max(scaling, distance(proca_current(scaled, e, c),
                                             (lam * lam) * proca_current(sol, e, c)));
    }
    r.add("current-divergence", current_div, 1e-10);
    r.add("stress-divergence", stress_div, 1e-9);
    r.add("current-minquat", current_minquat, 1e-12);
    r.add("current-quadratic-scaling", scaling, 1e-12);
    r.finalize();
    return r;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
    if (name == "lanczos") return suite_lanczos(cfg);
    if (name == "dirac") return suite_dirac(cfg);
    if (name == "proca") return suite_proca(cfg);
    if (name == "scalar") return suite_scalar(cfg);
    if (name == "maxwell") return suite_maxwell(cfg);
    if (name == "einstein-mayer") return suite_einstein_mayer(cfg);
    if (name == "higgs") return suite_higgs(cfg);
    if (name == "covariance") return suite_covariance(cfg);
    if (name == "conservation") return suite_conservation(cfg);
    throw std::invalid_argument("unknown suite: " + name);
}

std::string suite_json(const SuiteResult& r) {
    nlohmann::ordered_json j;
    j["schema"] = "v1";
    j["kind"] = "suite";
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["convention"] = to_string(r.convention);
    auto& checks = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["value"] = c.value;
        cj["tolerance"] = c.tolerance;
        cj["comparison"] = c.at_least ? ">=" : "<=";
        cj["pass"] = c.pass;
        checks.push_back(std::move(cj));
    }
    j["pass"] = r.pass;
    return j.dump(2);
}

std::string summary_markdown(const std::vector<SuiteResult>& results) {
    std::ostringstream os;
    os << "# Verification summary\n\n";
    os << "| suite | checks | result |\n|---|---|---|\n";
    for (const auto& r : results) {
        int passed = 0;
        for (const auto& c : r.checks) passed += c.pass ? 1 : 0;
        os << "| " << r.suite << " | " << passed << "/" << r.checks.size() << " | "
           << (r.pass ? "pass" : "FAIL") << " |\n";
    }
    os << "\n";
    for (const auto& r : results) {
        os << "## " << r.suite << "\n\n";
        os << "- seed: " << r.seed << ", convention: " << to_string(r.convention) << "\n";
        for (const auto& c : r.checks) {
            os.precision(3);
            os << "- " << (c.pass ? "[ok] " : "[FAIL] ") << c.name << ": " << std::scientific
               << c.value << (c.at_least ? " >= " : " <= ") << c.tolerance << std::defaultfloat
               << "\n";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace biquat
