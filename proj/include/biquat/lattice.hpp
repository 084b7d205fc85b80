#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "biquat/field.hpp"

namespace biquat {

/// Biquaternion samples on a small periodic 4D grid; derivatives by central
/// differences. Serves as the independent oracle for every closed-form
/// residual. Axes of extent 1 hold fields constant along that direction;
/// all other extents must be >= 4 so central stencils never self-overlap.
class LatticeField final : public Field {
public:
    LatticeField(std::array<int, 4> extents, std::array<double, 4> spacing,
                 std::vector<Biquaternion> samples);

    static LatticeField sample(const Field& f, std::array<int, 4> extents,
                               std::array<double, 4> spacing, Event origin = {});

    const std::array<int, 4>& extents() const { return extents_; }
    const std::array<double, 4>& spacing() const { return spacing_; }
    const Event& origin() const { return origin_; }
    void set_origin(const Event& o) { origin_ = o; }

    std::size_t size() const { return samples_.size(); }
    std::size_t flat_index(const std::array<int, 4>& idx) const;

    const Biquaternion& at(const std::array<int, 4>& idx) const;
    Biquaternion& at(const std::array<int, 4>& idx);

    /// Grid point coordinates of an index.
    Event event_at(const std::array<int, 4>& idx) const;

    /// Event must coincide with a grid point (domain error otherwise).
    Biquaternion value(const Event& e) const override;
    Biquaternion derivative(int mu, const Event& e) const override;
    Biquaternion second_derivative(int mu, const Event& e) const override;

    Biquaternion derivative_at(int mu, const std::array<int, 4>& idx) const;
    Biquaternion second_derivative_at(int mu, const std::array<int, 4>& idx) const;

    /// True when the stencil at idx does not cross the periodic seam.
    bool interior(const std::array<int, 4>& idx, int margin = 2) const;

    void dump_csv(std::ostream& os) const;
    static LatticeField load_csv(std::istream& is);
    void dump_csv_file(const std::string& path) const;
    static LatticeField load_csv_file(const std::string& path);

private:
    std::array<int, 4> index_of(const Event& e) const;

    std::array<int, 4> extents_;
    std::array<double, 4> spacing_;
    Event origin_{};
    std::vector<Biquaternion> samples_;
};

/// Samples a closure on the periodic grid; rejects non-finite samples.
LatticeField lattice_from_closure(const std::function<Biquaternion(const Event&)>& f,
                                  std::array<int, 4> extents, std::array<double, 4> spacing,
                                  Event origin = {});

}  // namespace biquat
