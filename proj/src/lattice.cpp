#include "biquat/lattice.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace biquat {

LatticeField::LatticeField(std::array<int, 4> extents, std::array<double, 4> spacing,
                           std::vector<Biquaternion> samples)
    : extents_(extents), spacing_(spacing), samples_(std::move(samples)) {
    std::size_t n = 1;
    for (int mu = 0; mu < 4; ++mu) {
        if (extents_[mu] != 1 && extents_[mu] < 4)
            throw std::invalid_argument("lattice extents must be 1 or >= 4 per axis");
        if (spacing_[mu] <= 0.0) throw std::invalid_argument("lattice spacing must be positive");
        n *= static_cast<std::size_t>(extents_[mu]);
    }
    if (samples_.size() != n) throw std::invalid_argument("lattice sample count mismatch");
    for (const auto& q : samples_)
        for (double c : q.components())
            if (!std::isfinite(c)) throw std::invalid_argument("lattice samples must be finite");
}

LatticeField LatticeField::sample(const Field& f, std::array<int, 4> extents,
                                  std::array<double, 4> spacing, Event origin) {
    return lattice_from_closure([&f](const Event& e) { return f.value(e); }, extents, spacing,
                                origin);
}

std::size_t LatticeField::flat_index(const std::array<int, 4>& idx) const {
    std::size_t flat = 0;
    for (int mu = 0; mu < 4; ++mu) {
        int i = idx[mu] % extents_[mu];
        if (i < 0) i += extents_[mu];
        flat = flat * static_cast<std::size_t>(extents_[mu]) + static_cast<std::size_t>(i);
    }
    return flat;
}

const Biquaternion& LatticeField::at(const std::array<int, 4>& idx) const {
    return samples_[flat_index(idx)];
}
Biquaternion& LatticeField::at(const std::array<int, 4>& idx) { return samples_[flat_index(idx)]; }

Event LatticeField::event_at(const std::array<int, 4>& idx) const {
    Event e = origin_;
    for (int mu = 0; mu < 4; ++mu) e.coord(mu) += spacing_[mu] * idx[mu];
    return e;
}

std::array<int, 4> LatticeField::index_of(const Event& e) const {
    std::array<int, 4> idx{};
    for (int mu = 0; mu < 4; ++mu) {
        const double u = (e.coord(mu) - origin_.coord(mu)) / spacing_[mu];
        const double r = std::round(u);
        if (std::abs(u - r) > 1e-6)
            throw std::domain_error("lattice evaluation requires grid-aligned events");
        const long i = static_cast<long>(r);
        if (extents_[mu] == 1 && i != 0)
            throw std::domain_error("event outside lattice along a collapsed axis");
        if (i < 0 || i >= extents_[mu]) throw std::domain_error("event outside lattice");
        idx[mu] = static_cast<int>(i);
    }
    return idx;
}

Biquaternion LatticeField::value(const Event& e) const { return at(index_of(e)); }

Biquaternion LatticeField::derivative(int mu, const Event& e) const {
    return derivative_at(mu, index_of(e));
}

Biquaternion LatticeField::second_derivative(int mu, const Event& e) const {
    return second_derivative_at(mu, index_of(e));
}

Biquaternion LatticeField::derivative_at(int mu, const std::array<int, 4>& idx) const {
    if (extents_[mu] == 1) return {};
    auto up = idx, dn = idx;
    up[mu] += 1;
    dn[mu] -= 1;
    return (0.5 / spacing_[mu]) * (at(up) - at(dn));
}

Biquaternion LatticeField::second_derivative_at(int mu, const std::array<int, 4>& idx) const {
    if (extents_[mu] == 1) return {};
    auto up = idx, dn = idx;
    up[mu] += 1;
    dn[mu] -= 1;
    return (1.0 / (spacing_[mu] * spacing_[mu])) * (at(up) - 2.0 * at(idx) + at(dn));
}

bool LatticeField::interior(const std::array<int, 4>& idx, int margin) const {
    for (int mu = 0; mu < 4; ++mu) {
        if (extents_[mu] == 1) continue;
        if (idx[mu] < margin || idx[mu] >= extents_[mu] - margin) return false;
    }
    return true;
}

void LatticeField::dump_csv(std::ostream& os) const {
    os.precision(17);
    os << "# extents " << extents_[0] << " " << extents_[1] << " " << extents_[2] << " "
       << extents_[3] << " spacing " << spacing_[0] << " " << spacing_[1] << " " << spacing_[2]
       << " " << spacing_[3] << " origin " << origin_.t << " " << origin_.x << " " << origin_.y
       << " " << origin_.z << "\n";
    os << "index,re_w,im_w,re_x,im_x,re_y,im_y,re_z,im_z\n";
    os.precision(17);
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const auto c = samples_[i].components();
        os << i;
        for (double v : c) os << "," << v;
        os << "\n";
    }
}

LatticeField LatticeField::load_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("# extents", 0) != 0)
        throw std::runtime_error("lattice csv: missing header");
    std::array<int, 4> extents{};
    std::array<double, 4> spacing{};
    Event origin{};
    {
        std::istringstream hs(line.substr(1));
        std::string tag;
        hs >> tag;
        for (int& e : extents) hs >> e;
        hs >> tag;
        for (double& h : spacing) hs >> h;
        if (!hs) throw std::runtime_error("lattice csv: malformed header");
        if (hs >> tag) {
            hs >> origin.t >> origin.x >> origin.y >> origin.z;
        }
    }
    std::getline(is, line);  // column names
    std::vector<Biquaternion> samples;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::getline(ls, cell, ',');  // index, positional
        std::array<double, 8> c{};
        for (double& v : c) {
            if (!std::getline(ls, cell, ',')) throw std::runtime_error("lattice csv: short row");
            v = std::stod(cell);
        }
        samples.push_back(Biquaternion::from_components(c));
    }
    LatticeField lf(extents, spacing, std::move(samples));
    lf.set_origin(origin);
    return lf;
}

void LatticeField::dump_csv_file(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    dump_csv(os);
}

LatticeField LatticeField::load_csv_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return load_csv(is);
}

LatticeField lattice_from_closure(const std::function<Biquaternion(const Event&)>& f,
                                  std::array<int, 4> extents, std::array<double, 4> spacing,
                                  Event origin) {
    std::size_t n = 1;
    for (int e : extents) n *= static_cast<std::size_t>(e > 0 ? e : 0);
    std::vector<Biquaternion> samples;
    samples.reserve(n);
    std::array<int, 4> idx{};
    for (idx[0] = 0; idx[0] < extents[0]; ++idx[0])
        for (idx[1] = 0; idx[1] < extents[1]; ++idx[1])
            for (idx[2] = 0; idx[2] < extents[2]; ++idx[2])
                for (idx[3] = 0; idx[3] < extents[3]; ++idx[3]) {
                    Event e = origin;
                    for (int mu = 0; mu < 4; ++mu) e.coord(mu) += spacing[mu] * idx[mu];
                    samples.push_back(f(e));
                }
    LatticeField lf(extents, spacing, std::move(samples));
    lf.set_origin(origin);
    return lf;
}

}  // namespace biquat
