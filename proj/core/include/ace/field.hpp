#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ace {

/// Shape and spacing of a 2D or 3D grid. Storage is row-major with the last
/// axis varying fastest; unused trailing slots hold extent 1 / spacing 1.
class Geometry {
public:
    Geometry() = default;
    /// Throws std::invalid_argument on ndim outside {2,3}, zero extents, or
    /// non-positive spacing.
    Geometry(std::span<const std::size_t> extents, std::span<const double> spacing);
    explicit Geometry(std::span<const std::size_t> extents);
    Geometry(std::initializer_list<std::size_t> extents, std::initializer_list<double> spacing)
        : Geometry(std::span<const std::size_t>(extents.begin(), extents.size()),
                   std::span<const double>(spacing.begin(), spacing.size())) {}
    Geometry(std::initializer_list<std::size_t> extents)
        : Geometry(std::span<const std::size_t>(extents.begin(), extents.size())) {}

    std::size_t ndim() const { return ndim_; }
    std::size_t extent(std::size_t axis) const { return extents_[axis]; }
    double spacing(std::size_t axis) const { return spacing_[axis]; }
    std::span<const std::size_t> extents() const { return {extents_.data(), ndim_}; }
    std::span<const double> spacings() const { return {spacing_.data(), ndim_}; }

    std::size_t size() const;
    std::size_t stride(std::size_t axis) const;
    /// Product of spacings: area of a pixel or volume of a voxel.
    double voxel_measure() const;

    std::size_t offset(std::span<const std::size_t> index) const;
    std::array<std::size_t, 3> index(std::size_t offset) const;

    bool same_shape(const Geometry& other) const;
    friend bool operator==(const Geometry&, const Geometry&) = default;

private:
    std::size_t ndim_ = 0;
    std::array<std::size_t, 3> extents_{1, 1, 1};
    std::array<double, 3> spacing_{1.0, 1.0, 1.0};
};

/// Immutable real-valued grid. All values are finite.
class ScalarField {
public:
    ScalarField() = default;
    /// Throws std::invalid_argument if data.size() != geometry.size() or any
    /// value is NaN/Inf.
    ScalarField(Geometry geometry, std::vector<double> data);

    const Geometry& geometry() const { return geometry_; }
    std::size_t ndim() const { return geometry_.ndim(); }
    std::size_t size() const { return data_.size(); }
    std::span<const std::size_t> shape() const { return geometry_.extents(); }
    std::span<const double> values() const { return data_; }

    double operator[](std::size_t offset) const { return data_[offset]; }
    double at(std::size_t j, std::size_t i) const;
    double at(std::size_t k, std::size_t j, std::size_t i) const;

    /// Same geometry, new values.
    ScalarField with_values(std::vector<double> data) const;

private:
    Geometry geometry_;
    std::vector<double> data_;
};

/// ScalarField whose values all lie in [0,1].
class SoftMask {
public:
    SoftMask() = default;
    /// Throws std::invalid_argument if any value is outside [0,1].
    explicit SoftMask(ScalarField field);

    const ScalarField& field() const { return field_; }
    operator const ScalarField&() const { return field_; }
    const Geometry& geometry() const { return field_.geometry(); }
    std::size_t size() const { return field_.size(); }
    std::span<const double> values() const { return field_.values(); }
    double operator[](std::size_t offset) const { return field_[offset]; }

private:
    ScalarField field_;
};

ScalarField make_field(std::span<const std::size_t> shape, std::span<const double> spacing, double fill);
ScalarField make_field(std::span<const std::size_t> shape, double fill);
inline ScalarField make_field(std::initializer_list<std::size_t> shape, double fill) {
    return make_field(std::span<const std::size_t>(shape.begin(), shape.size()), fill);
}

SoftMask clamp01(const ScalarField& field);

/// True when every value is exactly 0 or 1.
bool is_binary(const ScalarField& field);

} // namespace ace
