#include "biquat/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace biquat {

namespace {

const cplx kI(0.0, 1.0);

void copy8(const Biquaternion& q, double* out) {
    const auto c = q.components();
    std::copy(c.begin(), c.end(), out);
}

}  // namespace

std::array<double, 24> PhaseReducedState::pack() const {
    std::array<double, 24> v{};
    copy8(A, v.data());
    copy8(B, v.data() + 8);
    copy8(E, v.data() + 16);
    return v;
}

PhaseReducedState PhaseReducedState::unpack(const std::array<double, 24>& v) {
    auto grab = [&v](int off) {
        std::array<double, 8> c{};
        std::copy(v.begin() + off, v.begin() + off + 8, c.begin());
        return Biquaternion::from_components(c);
    };
    return {grab(0), grab(8), grab(16)};
}

ReducedSystem::ReducedSystem(const WaveVector& k, double coupling)
    : k_(k), coupling_(coupling) {
    const double n = k.omega * k.omega - k.p[0] * k.p[0] - k.p[1] * k.p[1] - k.p[2] * k.p[2];
    if (n <= 0.0) throw std::invalid_argument("reduced system requires a timelike wave vector");
    if (std::abs(n - 1.0) > 1e-9)
        throw std::invalid_argument("reduced system requires a normalized wave vector");
}

PhaseReducedState ReducedSystem::rhs(const PhaseReducedState& s) const {
    const Biquaternion k = k_.minquat();
    const Biquaternion kb = bar(k);
    return {kI * (kb * s.B * dagger(s.E)), kI * (k * s.A * s.E),
            coupling_ * (kI * (k * s.A * bar(s.B)))};
}

namespace {

std::array<double, 24> axpy(const std::array<double, 24>& a, double h,
                            const std::array<double, 24>& d) {
    std::array<double, 24> r;
    for (int i = 0; i < 24; ++i) r[i] = a[i] + h * d[i];
    return r;
}

std::array<double, 24> rk4_step(const ReducedSystem& sys, const std::array<double, 24>& y,
                                double h) {
    auto f = [&sys](const std::array<double, 24>& v) {
        return sys.rhs(PhaseReducedState::unpack(v)).pack();
    };
    const auto k1 = f(y);
    const auto k2 = f(axpy(y, 0.5 * h, k1));
    const auto k3 = f(axpy(y, 0.5 * h, k2));
    const auto k4 = f(axpy(y, h, k3));
    std::array<double, 24> r;
    for (int i = 0; i < 24; ++i)
        r[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return r;
}

double norm24(const std::array<double, 24>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

TrajectoryRecord integrate(const ReducedSystem& sys, const PhaseReducedState& initial,
                           double s_span, double step) {
    if (step <= 0.0) throw std::invalid_argument("integration step must be positive");
    for (double c : initial.pack())
        if (!std::isfinite(c)) throw std::invalid_argument("non-finite initial state");

    const auto n_steps = static_cast<std::size_t>(std::llround(s_span / step));
    TrajectoryRecord rec;
    rec.s.reserve(n_steps + 1);
    rec.states.reserve(n_steps + 1);

    auto y = initial.pack();
    auto y_half = y;  // companion run at step/2 for the error estimate
    const double bound = std::max(1.0, norm24(y)) * 1e3;

    rec.s.push_back(0.0);
    rec.states.push_back(y);
    double halving_err = 0.0;
    const double drift_ref = norm24(y);
    double drift_max = 0.0;

    for (std::size_t i = 1; i <= n_steps; ++i) {
        y = rk4_step(sys, y, step);
        y_half = rk4_step(sys, rk4_step(sys, y_half, 0.5 * step), 0.5 * step);
        bool finite = true;
        for (double c : y) finite = finite && std::isfinite(c);
        if (!finite || norm24(y) > bound) {
            rec.divergent = true;
            break;
        }
        rec.s.push_back(step * static_cast<double>(i));
        rec.states.push_back(y);
        double d = 0.0;
        for (int j = 0; j < 24; ++j) d += (y[j] - y_half[j]) * (y[j] - y_half[j]);
        halving_err = std::max(halving_err, std::sqrt(d));
        drift_max = std::max(drift_max, std::abs(norm24(y) - drift_ref));
    }
    rec.step_halving_error = halving_err;
    rec.invariant_drift = drift_max;
    if (!rec.divergent && rec.s.size() >= 1000) {
        const auto periods = detect_periods(rec.s, rec.states);
        rec.period1 = periods.t1;
        rec.period2 = periods.t2;
    }
    return rec;
}

namespace {

/// Normalized autocorrelation of a mean-removed multichannel signal. Long
/// signals are stride-decimated to keep the cost bounded; sub-sample peak
/// refinement recovers the lost resolution.
std::vector<double> autocorrelation(std::vector<std::vector<double>> channels,
                                    std::size_t max_lag, std::size_t* stride_out) {
    std::size_t n = channels.empty() ? 0 : channels[0].size();
    std::size_t stride = 1;
    constexpr std::size_t kMaxSamples = 4096;
    if (n > kMaxSamples) {
        stride = (n + kMaxSamples - 1) / kMaxSamples;
        for (auto& ch : channels) {
            std::vector<double> dec;
            dec.reserve(n / stride + 1);
            for (std::size_t i = 0; i < n; i += stride) dec.push_back(ch[i]);
            ch = std::move(dec);
        }
        n = channels[0].size();
        max_lag /= stride;
    }
    if (stride_out) *stride_out = stride;

    double norm = 0.0;
    for (auto& ch : channels) {
        double mean = 0.0;
        for (double v : ch) mean += v;
        mean /= static_cast<double>(n);
        for (double& v : ch) {
            v -= mean;
            norm += v * v;
        }
    }
    std::vector<double> acf(max_lag + 1, 0.0);
    if (norm < 1e-300) return acf;
    for (std::size_t lag = 0; lag <= max_lag; ++lag) {
        double s = 0.0;
        for (const auto& ch : channels)
            for (std::size_t i = 0; i + lag < n; ++i) s += ch[i] * ch[i + lag];
        acf[lag] = s / norm;
    }
    return acf;
}

struct Peak {
    double lag = 0.0;  // sub-sample refined, in samples
    double value = 0.0;
};

std::vector<Peak> find_peaks(const std::vector<double>& acf, double min_value) {
    std::vector<Peak> peaks;
    for (std::size_t i = 2; i + 1 < acf.size(); ++i) {
        if (acf[i] > acf[i - 1] && acf[i] >= acf[i + 1] && acf[i] > min_value) {
            // parabolic refinement through the three points
            const double denom = acf[i - 1] - 2.0 * acf[i] + acf[i + 1];
            double shift = 0.0;
            if (std::abs(denom) > 1e-14) shift = 0.5 * (acf[i - 1] - acf[i + 1]) / denom;
            shift = std::clamp(shift, -0.5, 0.5);
            const double value = acf[i] - 0.25 * (acf[i - 1] - acf[i + 1]) * shift;
            peaks.push_back({static_cast<double>(i) + shift, value});
        }
    }
    std::sort(peaks.begin(), peaks.end(),
              [](const Peak& a, const Peak& b) { return a.value > b.value; });
    return peaks;
}

bool is_near_multiple(double lag, double base, double rel_tol = 0.05) {
    const double q = lag / base;
    return std::abs(q - std::round(q)) < rel_tol * std::max(1.0, q);
}

PeriodReport periods_from_acf(const std::vector<double>& acf, double dt) {
    PeriodReport rep;
    const auto peaks = find_peaks(acf, 0.2);
    if (peaks.empty()) {
        rep.no_period = true;
        return rep;
    }
    // The fundamental of the strongest comb: walk down from the strongest peak
    // to the earliest near-divisor peak, so harmonics do not masquerade as the
    // base period.
    Peak base = peaks.front();
    for (const Peak& p : peaks) {
        if (p.lag < base.lag && p.value > 0.5 * base.value && is_near_multiple(base.lag, p.lag))
            base = p;
    }
    rep.t1 = PeriodEstimate{base.lag * dt, std::min(1.0, base.value)};
    for (const Peak& p : peaks) {
        if (is_near_multiple(p.lag, base.lag)) continue;  // harmonic of t1
        rep.t2 = PeriodEstimate{p.lag * dt, std::min(1.0, p.value)};
        break;
    }
    return rep;
}

}  // namespace

PeriodReport detect_periods(const std::vector<double>& s,
                            const std::vector<std::array<double, 24>>& states) {
    if (s.size() < 1000) throw std::invalid_argument("period detection needs >= 1000 samples");
    const double dt = s[1] - s[0];
    std::vector<std::vector<double>> channels;
    for (int c = 0; c < 24; ++c) {
        std::vector<double> ch(states.size());
        double amp = 0.0;
        for (std::size_t i = 0; i < states.size(); ++i) {
            ch[i] = states[i][c];
            amp = std::max(amp, std::abs(ch[i]));
        }
        if (amp > 1e-12) channels.push_back(std::move(ch));
    }
    PeriodReport rep;
    if (channels.empty()) {
        rep.no_period = true;  // identically zero trajectory
        return rep;
    }
    const std::size_t max_lag = (s.size() * 3) / 4;
    std::size_t stride = 1;
    const auto acf = autocorrelation(std::move(channels), max_lag, &stride);
    return periods_from_acf(acf, dt * static_cast<double>(stride));
}

PeriodReport detect_periods(const TrajectoryRecord& t) { return detect_periods(t.s, t.states); }

PeriodReport detect_periods_signal(const std::vector<double>& signal, double dt) {
    if (signal.size() < 1000)
        throw std::invalid_argument("period detection needs >= 1000 samples");
    const std::size_t max_lag = (signal.size() * 3) / 4;
    std::size_t stride = 1;
    const auto acf = autocorrelation({signal}, max_lag, &stride);
    return periods_from_acf(acf, dt * static_cast<double>(stride));
}

namespace {

/// Cubic Hermite interpolation of the trajectory, with derivatives from the
/// system right-hand side.
class TrajectoryInterpolant {
public:
    TrajectoryInterpolant(const ReducedSystem& sys, const TrajectoryRecord& t)
        : sys_(sys), t_(t), step_(t.s.size() > 1 ? t.s[1] - t.s[0] : 1.0) {}

    PhaseReducedState state(double s) const {
        const double u = s / step_;
        auto i = static_cast<long>(std::floor(u));
        i = std::clamp<long>(i, 0, static_cast<long>(t_.s.size()) - 2);
        const double x = u - static_cast<double>(i);
        const auto y0 = t_.states[static_cast<std::size_t>(i)];
        const auto y1 = t_.states[static_cast<std::size_t>(i) + 1];
        const auto d0 = sys_.rhs(PhaseReducedState::unpack(y0)).pack();
        const auto d1 = sys_.rhs(PhaseReducedState::unpack(y1)).pack();
        const double h00 = (1 + 2 * x) * (1 - x) * (1 - x);
        const double h10 = x * (1 - x) * (1 - x);
        const double h01 = x * x * (3 - 2 * x);
        const double h11 = x * x * (x - 1);
        std::array<double, 24> out;
        for (int j = 0; j < 24; ++j)
            out[j] = h00 * y0[j] + h10 * step_ * d0[j] + h01 * y1[j] + h11 * step_ * d1[j];
        return PhaseReducedState::unpack(out);
    }

private:
    const ReducedSystem& sys_;
    const TrajectoryRecord& t_;
    double step_;
};

}  // namespace

ReinflatedFields reinflate(const ReducedSystem& sys, const TrajectoryRecord& t) {
    if (t.s.size() < 2) throw std::invalid_argument("reinflate needs a nonempty trajectory");
    auto interp = std::make_shared<TrajectoryInterpolant>(sys, t);
    auto sys_copy = std::make_shared<ReducedSystem>(sys);
    const WaveVector k = sys.wave_vector();

    auto component = [interp, sys_copy, k](int slot) -> FieldPtr {
        auto pick = [slot](const PhaseReducedState& st) {
            return slot == 0 ? st.A : (slot == 1 ? st.B : st.E);
        };
        EventFn value = [interp, k, pick](const Event& e) {
            return pick(interp->state(k.phase(e)));
        };
        std::array<EventFn, 4> d1;
        for (int mu = 0; mu < 4; ++mu) {
            const double g = k.phase_gradient(mu);
            d1[mu] = [interp, sys_copy, k, pick, g](const Event& e) {
                const auto st = interp->state(k.phase(e));
                return g * pick(sys_copy->rhs(st));
            };
        }
        return analytic_field(value, d1);
    };
    return {component(0), component(1), component(2)};
}

double vacuum_defect(const LatticeField& e, const HiggsParams& p) {
    const double target = p.mu / p.lambda;
    double worst = 0.0;
    const auto& ext = e.extents();
    std::array<int, 4> idx{};
    for (idx[0] = 0; idx[0] < ext[0]; ++idx[0])
        for (idx[1] = 0; idx[1] < ext[1]; ++idx[1])
            for (idx[2] = 0; idx[2] < ext[2]; ++idx[2])
                for (idx[3] = 0; idx[3] < ext[3]; ++idx[3]) {
                    const Biquaternion v = e.at(idx);
                    worst = std::max(
                        worst, distance(v * dagger(v), target * Biquaternion::one()));
                }
    return worst;
}

RelaxationResult higgs_relax(const LatticeField& e0, const HiggsParams& p, int steps,
                             double dt) {
    if (p.mu <= 0.0 || p.lambda <= 0.0)
        throw std::invalid_argument("symmetry breaking requires mu > 0 and lambda > 0");
    double hmin = 1e30;
    int active_axes = 0;
    for (int mu = 0; mu < 4; ++mu)
        if (e0.extents()[mu] > 1) {
            hmin = std::min(hmin, e0.spacing()[mu]);
            ++active_axes;
        }
    if (dt <= 0.0) {
        const double diffusive = active_axes > 0 ? hmin * hmin / (4.0 * active_axes) : 0.1;
        dt = std::min(diffusive, 0.2 / p.mu);
    }

    RelaxationResult out{e0, {}, false};
    out.defect_history.reserve(static_cast<std::size_t>(steps) + 1);
    out.defect_history.push_back(vacuum_defect(out.field, p));

    const auto& ext = e0.extents();
    for (int n = 0; n < steps; ++n) {
        LatticeField next = out.field;
        std::array<int, 4> idx{};
        double norm_max = 0.0;
        for (idx[0] = 0; idx[0] < ext[0]; ++idx[0])
            for (idx[1] = 0; idx[1] < ext[1]; ++idx[1])
                for (idx[2] = 0; idx[2] < ext[2]; ++idx[2])
                    for (idx[3] = 0; idx[3] < ext[3]; ++idx[3]) {
                        Biquaternion lap{};
                        for (int mu = 0; mu < 4; ++mu)
                            lap += out.field.second_derivative_at(mu, idx);
                        const Biquaternion v = out.field.at(idx);
                        const Biquaternion flow =
                            lap + p.mu * v - p.lambda * (v * dagger(v) * v);
                        const Biquaternion nv = v + dt * flow;
                        next.at(idx) = nv;
                        norm_max = std::max(norm_max, frobenius_norm(nv));
                    }
        if (!std::isfinite(norm_max) || norm_max > 1e6) {
            out.aborted = true;
            return out;
        }
        out.field = std::move(next);
        out.defect_history.push_back(vacuum_defect(out.field, p));
    }
    return out;
}

}  // namespace biquat
