#include "common.hpp"

#include <array>
#include <charconv>

namespace ace::cli {

std::string format_real(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string join_shape(const std::vector<std::size_t>& shape) {
    std::string s;
    for (std::size_t i = 0; i < shape.size(); ++i) s += (i ? "," : "") + std::to_string(shape[i]);
    return s;
}

void require_shape(const std::vector<std::size_t>& shape) {
    if (shape.size() != 2 && shape.size() != 3) throw UsageError("--shape needs 2 or 3 comma-separated extents");
    for (std::size_t e : shape) {
        if (e == 0) throw UsageError("--shape extents must be positive");
    }
}

CurvatureMode resolve_mode(const std::string& name, std::size_t ndim) {
    if (name == "auto") return ndim == 3 ? CurvatureMode::Mean3D : CurvatureMode::Mean2D;
    const CurvatureMode mode = parse_curvature_mode(name);
    if (mode_ndim(mode) != ndim) {
        throw std::invalid_argument("mode " + name + " needs " + std::to_string(mode_ndim(mode)) + "D data, got " +
                                    std::to_string(ndim) + "D");
    }
    return mode;
}

void ensure_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create directory " + dir.string() + ": " + ec.message());
}

} // namespace ace::cli
