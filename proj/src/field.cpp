#include "biquat/field.hpp"

#include <cmath>

namespace biquat {

WaveVector sample_on_shell(double mass, Rng& rng) {
    WaveVector k;
    const double pmax = 2.0 * mass + 1.0;
    const double pmin = mass > 0.0 ? 0.0 : 0.2;  // massless modes need p != 0
    const auto dir = rng.unit3();
    const double pr = rng.uniform(pmin, pmax);
    for (int i = 0; i < 3; ++i) k.p[i] = pr * dir[i];
    k.omega = std::sqrt(pr * pr + mass * mass);
    return k;
}

PlaneWaveField::PlaneWaveField(Biquaternion amplitude, WaveVector k, Biquaternion generator,
                               PhaseSide side, int phase_sign)
    : amplitude_(amplitude), k_(k), generator_(generator), side_(side),
      phase_sign_(phase_sign >= 0 ? +1 : -1) {
    const Biquaternion g2 = generator_ * generator_;
    if (distance(g2, -Biquaternion::one()) > 1e-12)
        throw std::invalid_argument("PlaneWaveField: generator must square to -1");
}

Biquaternion PlaneWaveField::phase_factor(const Event& e) const {
    const double phi = phase_sign_ * k_.phase(e);
    Biquaternion r = std::sin(phi) * generator_;
    r.w += std::cos(phi);
    return r;
}

Biquaternion PlaneWaveField::value(const Event& e) const {
    return side_ == PhaseSide::right ? amplitude_ * phase_factor(e)
                                     : phase_factor(e) * amplitude_;
}

Biquaternion PlaneWaveField::derivative(int mu, const Event& e) const {
    const double dphi = phase_sign_ * k_.phase_gradient(mu);
    // d exp(g phi) = g exp(g phi) dphi, and g commutes with the phase factor.
    if (side_ == PhaseSide::right) return dphi * (amplitude_ * generator_ * phase_factor(e));
    return dphi * (generator_ * phase_factor(e) * amplitude_);
}

Biquaternion PlaneWaveField::second_derivative(int mu, const Event& e) const {
    const double dphi = phase_sign_ * k_.phase_gradient(mu);
    return (-dphi * dphi) * value(e);  // g^2 = -1
}

namespace {

class ConstantField final : public Field {
public:
    explicit ConstantField(Biquaternion q) : q_(q) {}
    Biquaternion value(const Event&) const override { return q_; }
    Biquaternion derivative(int, const Event&) const override { return {}; }
    Biquaternion second_derivative(int, const Event&) const override { return {}; }

private:
    Biquaternion q_;
};

class SumField final : public Field {
public:
    SumField(FieldPtr a, FieldPtr b, double sign) : a_(std::move(a)), b_(std::move(b)), s_(sign) {}
    Biquaternion value(const Event& e) const override { return a_->value(e) + s_ * b_->value(e); }
    Biquaternion derivative(int mu, const Event& e) const override {
        return a_->derivative(mu, e) + s_ * b_->derivative(mu, e);
    }
    Biquaternion second_derivative(int mu, const Event& e) const override {
        return a_->second_derivative(mu, e) + s_ * b_->second_derivative(mu, e);
    }

private:
    FieldPtr a_, b_;
    double s_;
};

class LeftMulField final : public Field {
public:
    LeftMulField(Biquaternion c, FieldPtr f) : c_(c), f_(std::move(f)) {}
    Biquaternion value(const Event& e) const override { return c_ * f_->value(e); }
    Biquaternion derivative(int mu, const Event& e) const override {
        return c_ * f_->derivative(mu, e);
    }
    Biquaternion second_derivative(int mu, const Event& e) const override {
        return c_ * f_->second_derivative(mu, e);
    }

private:
    Biquaternion c_;
    FieldPtr f_;
};

class RightMulField final : public Field {
public:
    RightMulField(FieldPtr f, Biquaternion c) : f_(std::move(f)), c_(c) {}
    Biquaternion value(const Event& e) const override { return f_->value(e) * c_; }
    Biquaternion derivative(int mu, const Event& e) const override {
        return f_->derivative(mu, e) * c_;
    }
    Biquaternion second_derivative(int mu, const Event& e) const override {
        return f_->second_derivative(mu, e) * c_;
    }

private:
    FieldPtr f_;
    Biquaternion c_;
};

class ProductField final : public Field {
public:
    ProductField(FieldPtr a, FieldPtr b) : a_(std::move(a)), b_(std::move(b)) {}
    Biquaternion value(const Event& e) const override { return a_->value(e) * b_->value(e); }
    Biquaternion derivative(int mu, const Event& e) const override {
        return a_->derivative(mu, e) * b_->value(e) + a_->value(e) * b_->derivative(mu, e);
    }
    Biquaternion second_derivative(int mu, const Event& e) const override {
        return a_->second_derivative(mu, e) * b_->value(e) +
               2.0 * (a_->derivative(mu, e) * b_->derivative(mu, e)) +
               a_->value(e) * b_->second_derivative(mu, e);
    }

private:
    FieldPtr a_, b_;
};

class MappedField final : public Field {
public:
    MappedField(FieldPtr f, std::function<Biquaternion(const Biquaternion&)> map)
        : f_(std::move(f)), map_(std::move(map)) {}
    Biquaternion value(const Event& e) const override { return map_(f_->value(e)); }
    Biquaternion derivative(int mu, const Event& e) const override {
        return map_(f_->derivative(mu, e));
    }
    Biquaternion second_derivative(int mu, const Event& e) const override {
        return map_(f_->second_derivative(mu, e));
    }

private:
    FieldPtr f_;
    std::function<Biquaternion(const Biquaternion&)> map_;
};

class AnalyticField final : public Field {
public:
    AnalyticField(EventFn value, std::array<EventFn, 4> d1, std::array<EventFn, 4> d2)
        : value_(std::move(value)), d1_(std::move(d1)), d2_(std::move(d2)) {}
    Biquaternion value(const Event& e) const override { return value_(e); }
    Biquaternion derivative(int mu, const Event& e) const override { return d1_[mu](e); }
    Biquaternion second_derivative(int mu, const Event& e) const override {
        if (!d2_[mu]) throw std::logic_error("analytic field: no second derivative provided");
        return d2_[mu](e);
    }

private:
    EventFn value_;
    std::array<EventFn, 4> d1_, d2_;
};

}  // namespace

FieldPtr constant_field(const Biquaternion& q) { return std::make_shared<ConstantField>(q); }

FieldPtr plane_wave(const Biquaternion& amplitude, const WaveVector& k,
                    const Biquaternion& generator, PhaseSide side, int phase_sign) {
    return std::make_shared<PlaneWaveField>(amplitude, k, generator, side, phase_sign);
}

FieldPtr add(FieldPtr a, FieldPtr b) {
    return std::make_shared<SumField>(std::move(a), std::move(b), 1.0);
}
FieldPtr subtract(FieldPtr a, FieldPtr b) {
    return std::make_shared<SumField>(std::move(a), std::move(b), -1.0);
}
FieldPtr scale(cplx s, FieldPtr f) {
    return std::make_shared<LeftMulField>(s * Biquaternion::one(), std::move(f));
}
FieldPtr multiply_left(const Biquaternion& c, FieldPtr f) {
    return std::make_shared<LeftMulField>(c, std::move(f));
}
FieldPtr multiply_right(FieldPtr f, const Biquaternion& c) {
    return std::make_shared<RightMulField>(std::move(f), c);
}
FieldPtr product(FieldPtr a, FieldPtr b) {
    return std::make_shared<ProductField>(std::move(a), std::move(b));
}
FieldPtr mapped(FieldPtr f, std::function<Biquaternion(const Biquaternion&)> map) {
    return std::make_shared<MappedField>(std::move(f), std::move(map));
}

FieldPtr star_field(FieldPtr f) {
    return mapped(std::move(f), [](const Biquaternion& q) { return star(q); });
}
FieldPtr bar_field(FieldPtr f) {
    return mapped(std::move(f), [](const Biquaternion& q) { return bar(q); });
}
FieldPtr dagger_field(FieldPtr f) {
    return mapped(std::move(f), [](const Biquaternion& q) { return dagger(q); });
}
FieldPtr reverse_field(FieldPtr f, ReversionKind kind) {
    return mapped(std::move(f), [kind](const Biquaternion& q) { return reverse(q, kind); });
}
FieldPtr scalar_part_field(FieldPtr f) {
    return mapped(std::move(f), [](const Biquaternion& q) {
        return Biquaternion{scalar_part(q), cplx(0.0), cplx(0.0), cplx(0.0)};
    });
}
FieldPtr vector_part_field(FieldPtr f) {
    return mapped(std::move(f), [](const Biquaternion& q) { return vector_part(q); });
}

FieldPtr analytic_field(EventFn value, std::array<EventFn, 4> derivatives,
                        std::array<EventFn, 4> second_derivatives) {
    return std::make_shared<AnalyticField>(std::move(value), std::move(derivatives),
                                           std::move(second_derivatives));
}

namespace {

const Biquaternion kVec[3] = {Biquaternion::e1(), Biquaternion::e2(), Biquaternion::e3()};

}  // namespace

Biquaternion gradient_left(const Field& f, const Event& e, const GradientConvention& g) {
    Biquaternion r = g.ct * f.derivative(0, e);
    for (int k = 0; k < 3; ++k) r += kVec[k] * f.derivative(k + 1, e);
    return r;
}

Biquaternion gradient_left_bar(const Field& f, const Event& e, const GradientConvention& g) {
    Biquaternion r = g.ct * f.derivative(0, e);
    for (int k = 0; k < 3; ++k) r -= kVec[k] * f.derivative(k + 1, e);
    return r;
}

Biquaternion gradient_right(const Field& f, const Event& e, const GradientConvention& g) {
    Biquaternion r = g.ct * f.derivative(0, e);
    for (int k = 0; k < 3; ++k) r += f.derivative(k + 1, e) * kVec[k];
    return r;
}

Biquaternion gradient_right_bar(const Field& f, const Event& e, const GradientConvention& g) {
    Biquaternion r = g.ct * f.derivative(0, e);
    for (int k = 0; k < 3; ++k) r -= f.derivative(k + 1, e) * kVec[k];
    return r;
}

Biquaternion nabla_nabla_bar(const Field& f, const Event& e) {
    Biquaternion r = -f.second_derivative(0, e);
    for (int mu = 1; mu < 4; ++mu) r += f.second_derivative(mu, e);
    return r;
}

cplx four_divergence(const Field& f, const Event& e) {
    // For minquat fields [s, v]: ds/dt + div v, with v housed in the
    // imaginary parts of the vector coefficients.
    cplx d = f.derivative(0, e).w;
    const cplx i(0.0, 1.0);
    for (int k = 0; k < 3; ++k) d += f.derivative(k + 1, e).coeff(k + 1) / i;
    return d;
}

}  // namespace biquat
