#include "biquat/audit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "biquat/equations.hpp"

namespace biquat {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::indeterminate: return "indeterminate";
    }
    return "?";
}

Verdict verdict_of(double residual) {
    if (residual <= 1e-9) return Verdict::pass;
    if (residual > 1e-3) return Verdict::fail;
    return Verdict::indeterminate;
}

const std::vector<AuditClaim>& registered_claims() {
    static const std::vector<AuditClaim> claims = {
        {"reversion-anti-automorphism",
         "reverse(ab) = reverse(b) reverse(a) and reverse is an involution"},
        {"reversed-system-compatibility",
         "some spacetime reflection carries fundamental-system solutions to the reversed "
         "(right-acting) system"},
        {"current-minquat-closure",
         "the reversion-completed bilinear current is a 4-vector (Hermitian)"},
        {"field-tensor-antisymmetry",
         "the induced Minkowski component matrix of the rank-2 field map is antisymmetric"},
        {"source-form-equivalence",
         "symmetrized and one-sided source forms agree algebraically, and transverse vacuum "
         "waves solve both"},
        {"reversion-parity-typing",
         "on 4-vectors the reversion acts as an improper spatial reflection"},
    };
    return claims;
}

namespace {

const cplx kI(0.0, 1.0);

std::string describe(const Biquaternion& q) {
    std::ostringstream os;
    os.precision(6);
    os << "(" << q.w.real();
    if (q.w.imag() != 0) os << (q.w.imag() > 0 ? "+" : "") << q.w.imag() << "i";
    auto comp = [&os](cplx c, const char* tag) {
        os << ", " << c.real();
        if (c.imag() != 0) os << (c.imag() > 0 ? "+" : "") << c.imag() << "i";
        os << tag;
    };
    comp(q.x, " e1");
    comp(q.y, " e2");
    comp(q.z, " e3");
    os << ")";
    return os.str();
}

// -- claim 1: anti-automorphism + involution ----------------------------------

double claim_anti_automorphism(const ConventionAssignment& c, Rng rng, std::string* witness) {
    const Biquaternion basis[4] = {Biquaternion::one(), Biquaternion::e1(), Biquaternion::e2(),
                                   Biquaternion::e3()};
    double worst = 0.0;
    std::string worst_case;
    auto check_pair = [&](const Biquaternion& a, const Biquaternion& b) {
        const double anti =
            distance(reverse(a * b, c.reversion), reverse(b, c.reversion) * reverse(a, c.reversion));
        const double invol = std::max(distance(reverse(reverse(a, c.reversion), c.reversion), a),
                                      distance(reverse(reverse(b, c.reversion), c.reversion), b));
        const double d = std::max(anti, invol);
        if (d > worst) {
            worst = d;
            worst_case = "pair " + describe(a) + " , " + describe(b);
        }
    };
    for (const auto& a : basis)
        for (const auto& b : basis) check_pair(a, b);
    for (int i = 0; i < 24; ++i) check_pair(rng.biquaternion(), rng.biquaternion());
    if (witness) *witness = worst_case;
    return worst;
}

// -- claim 2: reversed-system compatibility ------------------------------------

double claim_reversed_compat(const ConventionAssignment& c, Rng rng, std::string* witness) {
    const double mass = 1.0;
    std::vector<LanczosPair> solutions;
    for (int i = 0; i < 3; ++i) {
        auto stream = rng.split("k" + std::to_string(i));
        const WaveVector k = sample_on_shell(mass, stream);
        solutions.push_back(solve_lanczos_momentum(k, mass, stream, c));
    }
    const std::array<Event, 3> events = {Event{0.1, -0.2, 0.3, 0.05}, Event{0.7, 0.4, -0.6, 0.2},
                                         Event{-0.3, 0.9, 0.1, -0.5}};

    double best = 1e30;
    int best_pattern = -1;
    for (int pattern = 0; pattern < 16; ++pattern) {
        const double st = (pattern & 1) ? -1.0 : 1.0;
        const double sx = (pattern & 2) ? -1.0 : 1.0;
        const double sy = (pattern & 4) ? -1.0 : 1.0;
        const double sz = (pattern & 8) ? -1.0 : 1.0;
        double worst = 0.0;
        for (const auto& sol : solutions) {
            const auto& a = dynamic_cast<const PlaneWaveField&>(*sol.A);
            const auto& b = dynamic_cast<const PlaneWaveField&>(*sol.B);
            WaveVector kr = a.wave_vector();
            kr.omega *= st;
            kr.p[0] *= sx;
            kr.p[1] *= sy;
            kr.p[2] *= sz;
            const LanczosPair reflected{
                plane_wave(a.amplitude(), kr, a.generator(), a.side(), a.phase_sign()),
                plane_wave(b.amplitude(), kr, b.generator(), b.side(), b.phase_sign()), mass};
            for (const Event& e : events)
                worst = std::max(worst, residual_norm(reversed_lanczos_residual(reflected, e, c)));
        }
        if (worst < best) {
            best = worst;
            best_pattern = pattern;
        }
    }
    if (witness) {
        std::ostringstream os;
        os << "best reflection pattern (t,x,y,z signs) = " << ((best_pattern & 1) ? "-" : "+")
           << ((best_pattern & 2) ? "-" : "+") << ((best_pattern & 4) ? "-" : "+")
           << ((best_pattern & 8) ? "-" : "+") << ", residual " << best;
        *witness = os.str();
    }
    return best;
}

// -- claim 3: current closure ----------------------------------------------------

double claim_current_minquat(const ConventionAssignment& c, Rng rng, std::string* witness) {
    double worst = 0.0;
    std::string worst_case;
    for (int i = 0; i < 8; ++i) {
        auto stream = rng.split("s" + std::to_string(i));
        const WaveVector k = sample_on_shell(1.0, stream);
        // Random minquat potential and 6-vector field, not necessarily solutions:
        // closure is a property of the completed bilinear form alone.
        const Biquaternion a_c = Biquaternion::minquat(stream.uniform(-1, 1), stream.uniform(-1, 1),
                                                       stream.uniform(-1, 1), stream.uniform(-1, 1));
        const Biquaternion a_s = Biquaternion::minquat(stream.uniform(-1, 1), stream.uniform(-1, 1),
                                                       stream.uniform(-1, 1), stream.uniform(-1, 1));
        const Biquaternion b_c = Biquaternion::six_vector(stream.complex_unit_ball(),
                                                          stream.complex_unit_ball(),
                                                          stream.complex_unit_ball());
        const Biquaternion b_s = Biquaternion::six_vector(stream.complex_unit_ball(),
                                                          stream.complex_unit_ball(),
                                                          stream.complex_unit_ball());
        const Event e{0.3, -0.1, 0.25, 0.6};
        const double phi = k.phase(e);
        const Biquaternion a_val = std::cos(phi) * a_c + std::sin(phi) * a_s;
        const Biquaternion b_val = std::cos(phi) * b_c + std::sin(phi) * b_s;
        Biquaternion sum = dagger(a_val) * b_val + dagger(b_val) * a_val;
        const Biquaternion current = sum + reverse(sum, c.reversion);
        const double d = minquat_defect(current);
        if (d > worst) {
            worst = d;
            worst_case = "A1 " + describe(a_val) + ", b " + describe(b_val);
        }
    }
    if (witness) *witness = worst_case;
    return worst;
}

// -- claim 4: field-tensor antisymmetry ------------------------------------------

double claim_tensor_antisymmetry(const ConventionAssignment& c, Rng rng, std::string* witness) {
    double worst = 0.0;
    std::string worst_case;
    for (int i = 0; i < 16; ++i) {
        const Biquaternion f = Biquaternion::six_vector(
            rng.complex_unit_ball(), rng.complex_unit_ball(), rng.complex_unit_ball());
        const auto m = field_tensor_matrix(f, c);
        double d = 0.0;
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) d = std::max(d, std::abs(m[mu][nu] + m[nu][mu]));
        if (d > worst) {
            worst = d;
            worst_case = "f " + describe(f);
        }
    }
    if (witness) *witness = worst_case;
    return worst;
}

// -- claim 5: source-form equivalence ----------------------------------------------

double claim_source_equivalence(const ConventionAssignment& c, Rng rng, std::string* witness) {
    double worst = 0.0;
    std::string note;

    // Algebraic identity: the symmetrized residual equals twice the one-sided
    // residual minus the monopole form, for arbitrary fields.
    for (int i = 0; i < 6; ++i) {
        auto stream = rng.split("id" + std::to_string(i));
        const WaveVector k = sample_on_shell(0.8, stream);
        const FieldPtr phi = plane_wave(stream.biquaternion(), k, Biquaternion::e3());
        const FieldPtr f = plane_wave(stream.biquaternion(), k, Biquaternion::e3());
        const FieldPtr j = plane_wave(stream.biquaternion(), k, Biquaternion::e3());
        const MaxwellSector s{phi, f, j};
        const Event e{0.2, 0.5, -0.4, 0.3};
        const Biquaternion lhs = maxwell_residual(s, e, c).second;
        const Biquaternion rhs = 2.0 * usual_maxwell_residual(s, e, c).second -
                                 magnetic_source(*f, e, c) - 0.0 * Biquaternion::one();
        const double d = distance(lhs, rhs);
        if (d > worst) {
            worst = d;
            note = "identity defect on random fields";
        }
    }

    // Constructive: transverse vacuum waves along the canonical z-propagation
    // must solve the symmetrized and the one-sided forms simultaneously.
    try {
        auto stream = rng.split("vac");
        WaveVector k;
        k.omega = 1.0;
        k.p = {0.0, 0.0, 1.0};
        const MaxwellSector vac = solve_maxwell_vacuum(k, stream, c);
        const std::array<Event, 2> events = {Event{0.3, 0.1, -0.2, 0.6}, Event{1.1, -0.5, 0.4, 0.2}};
        for (const Event& e : events) {
            const double r = std::max({residual_norm(maxwell_residual(vac, e, c)),
                                       residual_norm(usual_maxwell_residual(vac, e, c)),
                                       frobenius_norm(magnetic_source(*vac.f_vec, e, c))});
            if (r > worst) {
                worst = r;
                note = "constructed vacuum wave residual";
            }
        }
    } catch (const NoSolutionError&) {
        worst = 1.0;
        note = "no transverse vacuum wave exists under this assignment";
    }
    if (witness) *witness = note;
    return worst;
}

// -- claim 6: parity typing ----------------------------------------------------------

double claim_parity_typing(const ConventionAssignment& c, Rng, std::string* witness) {
    // Extract the induced map on the spatial part of 4-vectors.
    double form_defect = 0.0;
    double m[3][3];
    for (int k = 0; k < 3; ++k) {
        Biquaternion u;
        u.coeff(k + 1) = kI;  // i e_k
        const Biquaternion r = reverse(u, c.reversion);
        form_defect = std::max(form_defect, std::abs(r.w));
        for (int j = 0; j < 3; ++j) {
            const cplx comp = r.coeff(j + 1);
            m[j][k] = comp.imag();
            form_defect = std::max(form_defect, std::abs(comp.real()));
        }
    }
    // Scalar slot must stay fixed.
    form_defect = std::max(form_defect, distance(reverse(Biquaternion::one(), c.reversion),
                                                 Biquaternion::one()));
    // Orthogonal and improper.
    double ortho = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double dot = 0.0;
            for (int k = 0; k < 3; ++k) dot += m[k][i] * m[k][j];
            ortho = std::max(ortho, std::abs(dot - (i == j ? 1.0 : 0.0)));
        }
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    const double improper = std::abs(det + 1.0);
    if (witness) {
        std::ostringstream os;
        os << "induced spatial map det = " << det;
        *witness = os.str();
    }
    return std::max({form_defect, ortho, improper});
}

}  // namespace

double evaluate_claim(const std::string& claim_id, const ConventionAssignment& a,
                      std::uint64_t seed, std::string* witness) {
    Rng rng(seed, "audit/" + claim_id + "/" + to_string(a));
    if (claim_id == "reversion-anti-automorphism") return claim_anti_automorphism(a, rng, witness);
    if (claim_id == "reversed-system-compatibility") return claim_reversed_compat(a, rng, witness);
    if (claim_id == "current-minquat-closure") return claim_current_minquat(a, rng, witness);
    if (claim_id == "field-tensor-antisymmetry")
        return claim_tensor_antisymmetry(a, rng, witness);
    if (claim_id == "source-form-equivalence") return claim_source_equivalence(a, rng, witness);
    if (claim_id == "reversion-parity-typing") return claim_parity_typing(a, rng, witness);
    throw std::invalid_argument("unknown claim id: " + claim_id);
}

const AuditCell& AuditReport::cell(const ConventionAssignment& a,
                                   const std::string& claim_id) const {
    const auto& claims = registered_claims();
    std::size_t cj = claims.size();
    for (std::size_t j = 0; j < claims.size(); ++j)
        if (claims[j].id == claim_id) cj = j;
    if (cj == claims.size()) throw std::out_of_range("unknown claim id: " + claim_id);
    for (std::size_t i = 0; i < assignments.size(); ++i)
        if (assignments[i] == a) return cells[i][cj];
    throw std::out_of_range("unknown assignment: " + to_string(a));
}

AuditReport run_audit(std::uint64_t seed) {
    AuditReport report;
    report.seed = seed;
    report.assignments = all_conventions();
    const auto& claims = registered_claims();

    std::size_t best_passes = 0;
    std::optional<std::size_t> best_index;
    for (std::size_t i = 0; i < report.assignments.size(); ++i) {
        std::vector<AuditCell> row;
        std::size_t passes = 0;
        for (const auto& claim : claims) {
            AuditCell cell;
            std::string witness;
            cell.residual = evaluate_claim(claim.id, report.assignments[i], seed, &witness);
            cell.verdict = verdict_of(cell.residual);
            if (cell.verdict == Verdict::pass)
                ++passes;
            else
                cell.witness = witness;
            row.push_back(std::move(cell));
        }
        if (passes == claims.size()) report.full_pass.push_back(i);
        if (passes > best_passes) {
            best_passes = passes;
            best_index = i;
        }
        report.cells.push_back(std::move(row));
    }
    if (!report.full_pass.empty()) {
        report.selected = report.assignments[report.full_pass.front()];
        report.partial = false;
    } else {
        if (best_index) report.selected = report.assignments[*best_index];
        report.partial = true;
    }
    return report;
}

std::string explain(const AuditReport& report, const ConventionAssignment& a,
                    const std::string& claim_id) {
    return report.cell(a, claim_id).witness;
}

std::string audit_report_json(const AuditReport& report) {
    nlohmann::ordered_json j;
    j["schema"] = "v1";
    j["kind"] = "audit";
    j["seed"] = report.seed;
    auto& claims = j["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : registered_claims())
        claims.push_back({{"id", c.id}, {"description", c.description}});
    auto& cells = j["cells"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < report.assignments.size(); ++i)
        for (std::size_t cj = 0; cj < registered_claims().size(); ++cj) {
            const auto& cell = report.cells[i][cj];
            nlohmann::ordered_json row;
            row["assignment"] = to_string(report.assignments[i]);
            row["claim"] = registered_claims()[cj].id;
            row["residual"] = cell.residual;
            row["verdict"] = to_string(cell.verdict);
            row["witness"] = cell.witness;
            cells.push_back(std::move(row));
        }
    auto& full = j["full_pass"] = nlohmann::ordered_json::array();
    for (std::size_t i : report.full_pass) full.push_back(to_string(report.assignments[i]));
    j["selected"] = report.selected ? to_string(*report.selected) : "";
    j["partial"] = report.partial;
    return j.dump(2);
}

}  // namespace biquat
