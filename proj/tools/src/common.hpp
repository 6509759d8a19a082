#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "ace/curvature.hpp"
#include "ace/field.hpp"

namespace ace::cli {

/// Flag combination that parses but makes no sense; exits with the usage code.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shortest round-trip decimal form.
std::string format_real(double v);

std::string join_shape(const std::vector<std::size_t>& shape);

/// Throws UsageError unless the shape has 2 or 3 positive extents.
void require_shape(const std::vector<std::size_t>& shape);

/// "auto" picks mean2d for 2D and mean3d for 3D; otherwise parses the name
/// and checks it against ndim (std::invalid_argument on mismatch).
CurvatureMode resolve_mode(const std::string& name, std::size_t ndim);

void ensure_directory(const std::filesystem::path& dir);

} // namespace ace::cli
