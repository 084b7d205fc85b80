#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biquat/equations.hpp"
#include "biquat/lattice.hpp"

namespace biquat {

/// State of the phase-reduced coupled system: all fields are functions of the
/// single phase s = K.X along a fixed timelike K.
struct PhaseReducedState {
    Biquaternion A, B, E;

    std::array<double, 24> pack() const;
    static PhaseReducedState unpack(const std::array<double, 24>& v);
};

/// Right-hand side of the reduction: with F(x) = F(s), the 4-gradients become
/// K-contracted s-derivatives and the coupled system rearranges to
///   A' = i bar(K) B dagger(E),  B' = i K A E,  E' = coupling * i K A bar(B).
class ReducedSystem {
public:
    /// Requires K timelike with unit Minkowski norm (rejects otherwise).
    explicit ReducedSystem(const WaveVector& k, double coupling = 1.0);

    PhaseReducedState rhs(const PhaseReducedState& s) const;
    const WaveVector& wave_vector() const { return k_; }
    double coupling() const { return coupling_; }

private:
    WaveVector k_;
    double coupling_;
};

struct PeriodEstimate {
    double period = 0.0;
    double confidence = 0.0;
};

struct TrajectoryRecord {
    std::vector<double> s;                        // monotone sample grid
    std::vector<std::array<double, 24>> states;   // one row per sample
    bool divergent = false;
    double step_halving_error = 0.0;              // max state distance vs. half step
    double invariant_drift = 0.0;                 // drift of |A|^2+|B|^2+|E|^2/coupling scale
    std::optional<PeriodEstimate> period1, period2;

    PhaseReducedState state_at(std::size_t i) const {
        return PhaseReducedState::unpack(states[i]);
    }
};

/// Classical fixed-step 4th-order integration; deterministic. Trajectories
/// whose norm blows past 1e3 x initial are flagged divergent and truncated.
TrajectoryRecord integrate(const ReducedSystem& sys, const PhaseReducedState& initial,
                           double s_span, double step);

struct PeriodReport {
    std::optional<PeriodEstimate> t1, t2;
    bool no_period = false;
};

/// Two dominant non-harmonic autocorrelation peaks with sub-sample (parabolic)
/// refinement; confidence is the normalized autocorrelation at the peak.
/// Requires >= 1000 samples. Aperiodic signals yield no_period rather than an
/// error.
PeriodReport detect_periods(const std::vector<double>& s,
                            const std::vector<std::array<double, 24>>& states);
PeriodReport detect_periods(const TrajectoryRecord& t);
/// Scalar-signal variant used by the synthetic oracles.
PeriodReport detect_periods_signal(const std::vector<double>& signal, double dt);

/// Exact-derivative 4D field x -> interpolated_state(K.x) built from a
/// trajectory; the first derivatives come from the system right-hand side, so
/// residual checks probe integration accuracy rather than interpolation.
struct ReinflatedFields {
    FieldPtr A, B, E;
};
ReinflatedFields reinflate(const ReducedSystem& sys, const TrajectoryRecord& t);

struct RelaxationResult {
    LatticeField field;
    std::vector<double> defect_history;  // max pointwise |E E+ - (mu/lambda)| per step
    bool aborted = false;                // norm blow-up
};

/// Gradient-flow relaxation of the self-interaction sector on a 1+1D periodic
/// lattice (extent-1 axes collapsed). Flows toward the vacuum manifold
/// E dagger(E) = mu/lambda.
RelaxationResult higgs_relax(const LatticeField& e0, const HiggsParams& p, int steps,
                             double dt = 0.0);

/// Max pointwise vacuum defect |E dagger(E) - (mu/lambda) 1| over the lattice.
double vacuum_defect(const LatticeField& e, const HiggsParams& p);

}  // namespace biquat
