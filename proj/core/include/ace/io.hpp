#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ace/field.hpp"
#include "ace/metrics.hpp"

namespace ace::io {

/// Malformed or truncated file contents.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// VF32 volume format:
//   ASCII header line "VF32 <ndim> <e0> <e1> [<e2>] <s0> <s1> [<s2>]\n"
//   followed by ndim-product little-endian IEEE-754 binary32 values in
//   row-major order (last axis fastest). Spacings are written in shortest
//   round-trip decimal form.

std::string volume_header(const Geometry& g);
/// Values are rounded to float on write.
void write_volume(const ScalarField& field, const std::filesystem::path& path);
ScalarField read_volume(const std::filesystem::path& path);

/// 8-bit binary PGM (P5, maxval 255); foreground 255, background 0. Width is
/// the last axis.
void write_pgm(const ScalarField& mask, const std::filesystem::path& path);
/// Pixels >= 128 read as 1, others as 0. Spacing is 1.
ScalarField read_pgm(const std::filesystem::path& path);

/// Loads .pgm via read_pgm and anything else via read_volume.
ScalarField read_any(const std::filesystem::path& path);

using NamedReport = std::pair<std::string, MetricsReport>;

/// "case,dice,hd95,components_pred,components_gt\n" followed by one row per
/// case with six decimals; a missing hd95 is written as "error".
std::string format_metrics_csv(const std::vector<NamedReport>& reports);
void write_metrics_csv(const std::vector<NamedReport>& reports, const std::filesystem::path& path);

/// Writes `text` to `path`, throwing std::runtime_error on failure.
void write_text(const std::filesystem::path& path, const std::string& text);

} // namespace ace::io
