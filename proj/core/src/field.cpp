#include "ace/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ace {

Geometry::Geometry(std::span<const std::size_t> extents, std::span<const double> spacing) {
    if (extents.size() != 2 && extents.size() != 3) {
        throw std::invalid_argument("field: ndim must be 2 or 3, got " + std::to_string(extents.size()));
    }
    if (spacing.size() != extents.size()) {
        throw std::invalid_argument("field: spacing has " + std::to_string(spacing.size()) +
                                    " components for a " + std::to_string(extents.size()) + "D grid");
    }
    ndim_ = extents.size();
    for (std::size_t a = 0; a < ndim_; ++a) {
        if (extents[a] == 0) throw std::invalid_argument("field: zero extent on axis " + std::to_string(a));
        if (!(spacing[a] > 0.0) || !std::isfinite(spacing[a])) {
            throw std::invalid_argument("field: spacing must be positive and finite on axis " + std::to_string(a));
        }
        extents_[a] = extents[a];
        spacing_[a] = spacing[a];
    }
}

Geometry::Geometry(std::span<const std::size_t> extents)
    : Geometry(extents, std::vector<double>(extents.size(), 1.0)) {}

std::size_t Geometry::size() const {
    if (ndim_ == 0) return 0;
    return extents_[0] * extents_[1] * extents_[2];
}

std::size_t Geometry::stride(std::size_t axis) const {
    std::size_t s = 1;
    for (std::size_t a = axis + 1; a < ndim_; ++a) s *= extents_[a];
    return s;
}

double Geometry::voxel_measure() const {
    double m = 1.0;
    for (std::size_t a = 0; a < ndim_; ++a) m *= spacing_[a];
    return m;
}

std::size_t Geometry::offset(std::span<const std::size_t> index) const {
    if (index.size() != ndim_) throw std::invalid_argument("field: index rank mismatch");
    std::size_t off = 0;
    for (std::size_t a = 0; a < ndim_; ++a) {
        if (index[a] >= extents_[a]) throw std::out_of_range("field: index out of range");
        off = off * extents_[a] + index[a];
    }
    return off;
}

std::array<std::size_t, 3> Geometry::index(std::size_t offset) const {
    std::array<std::size_t, 3> idx{0, 0, 0};
    for (std::size_t a = ndim_; a-- > 0;) {
        idx[a] = offset % extents_[a];
        offset /= extents_[a];
    }
    return idx;
}

bool Geometry::same_shape(const Geometry& other) const {
    return ndim_ == other.ndim_ && extents_ == other.extents_;
}

ScalarField::ScalarField(Geometry geometry, std::vector<double> data)
    : geometry_(std::move(geometry)), data_(std::move(data)) {
    if (data_.size() != geometry_.size()) {
        throw std::invalid_argument("field: data length " + std::to_string(data_.size()) +
                                    " does not match grid size " + std::to_string(geometry_.size()));
    }
    for (double v : data_) {
        if (!std::isfinite(v)) throw std::invalid_argument("field: non-finite value");
    }
}

double ScalarField::at(std::size_t j, std::size_t i) const {
    const std::array<std::size_t, 2> idx{j, i};
    return data_[geometry_.offset(idx)];
}

double ScalarField::at(std::size_t k, std::size_t j, std::size_t i) const {
    const std::array<std::size_t, 3> idx{k, j, i};
    return data_[geometry_.offset(idx)];
}

ScalarField ScalarField::with_values(std::vector<double> data) const {
    return ScalarField(geometry_, std::move(data));
}

SoftMask::SoftMask(ScalarField field) : field_(std::move(field)) {
    for (double v : field_.values()) {
        if (v < 0.0 || v > 1.0) throw std::invalid_argument("soft mask: value outside [0,1]");
    }
}

ScalarField make_field(std::span<const std::size_t> shape, std::span<const double> spacing, double fill) {
    Geometry g(shape, spacing);
    return ScalarField(g, std::vector<double>(g.size(), fill));
}

ScalarField make_field(std::span<const std::size_t> shape, double fill) {
    Geometry g(shape);
    return ScalarField(g, std::vector<double>(g.size(), fill));
}

SoftMask clamp01(const ScalarField& field) {
    std::vector<double> out(field.values().begin(), field.values().end());
    for (double& v : out) v = std::clamp(v, 0.0, 1.0);
    return SoftMask(field.with_values(std::move(out)));
}

bool is_binary(const ScalarField& field) {
    return std::all_of(field.values().begin(), field.values().end(),
                       [](double v) { return v == 0.0 || v == 1.0; });
}

} // namespace ace
