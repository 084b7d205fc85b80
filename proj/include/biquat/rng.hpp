#pragma once

#include <cstdint>
#include <string_view>

#include "biquat/biquaternion.hpp"

namespace biquat {

/// Counter-based deterministic generator. Every stream is derived from the
/// single run seed plus a label, so suites draw independent, order-free
/// sequences and results are reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(splitmix(seed ^ 0x9e3779b97f4a7c15ull)) {}

    Rng(std::uint64_t seed, std::string_view stream) : state_(seed) {
        for (char ch : stream) state_ = splitmix(state_ ^ static_cast<std::uint64_t>(ch));
        state_ = splitmix(state_ ^ 0x9e3779b97f4a7c15ull);
    }

    /// Child stream: same seed material, distinct label.
    Rng split(std::string_view stream) const {
        Rng child(state_, stream);
        return child;
    }

    std::uint64_t next_u64() {
        state_ = splitmix(state_);
        return state_;
    }

    /// Uniform in [0, 1); built from the top 53 bits, identical on every
    /// platform (std distributions are implementation-defined).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Marsaglia polar method.
    double normal() {
        for (;;) {
            double u = uniform(-1.0, 1.0);
            double v = uniform(-1.0, 1.0);
            double s = u * u + v * v;
            if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }

    cplx complex_unit_ball() {
        for (;;) {
            double re = uniform(-1.0, 1.0), im = uniform(-1.0, 1.0);
            if (re * re + im * im <= 1.0) return {re, im};
        }
    }

    Biquaternion biquaternion() {
        return {complex_unit_ball(), complex_unit_ball(), complex_unit_ball(),
                complex_unit_ball()};
    }

    /// Uniform direction on the 2-sphere.
    std::array<double, 3> unit3() {
        for (;;) {
            double a = uniform(-1.0, 1.0), b = uniform(-1.0, 1.0), c = uniform(-1.0, 1.0);
            double n2 = a * a + b * b + c * c;
            if (n2 > 1e-6 && n2 <= 1.0) {
                double n = std::sqrt(n2);
                return {a / n, b / n, c / n};
            }
        }
    }

private:
    static std::uint64_t splitmix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace biquat
