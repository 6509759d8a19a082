#include "ace/io.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

namespace ace::io {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string shortest(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

std::vector<std::string> split_spaces(const std::string& line) {
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        const std::size_t next = line.find(' ', pos);
        const std::size_t end = next == std::string::npos ? line.size() : next;
        if (end == pos) throw FormatError("VF32: malformed header (repeated space)");
        tokens.push_back(line.substr(pos, end - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
        if (pos == line.size()) throw FormatError("VF32: malformed header (trailing space)");
    }
    return tokens;
}

template <class T>
T parse_number(const std::string& token, const char* what) {
    T value{};
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) {
        throw FormatError(std::string("VF32: bad ") + what + " '" + token + "'");
    }
    return value;
}

} // namespace

std::string volume_header(const Geometry& g) {
    std::string h = "VF32 " + std::to_string(g.ndim());
    for (std::size_t a = 0; a < g.ndim(); ++a) h += " " + std::to_string(g.extent(a));
    for (std::size_t a = 0; a < g.ndim(); ++a) h += " " + shortest(g.spacing(a));
    h += "\n";
    return h;
}

void write_volume(const ScalarField& field, const std::filesystem::path& path) {
    std::string bytes = volume_header(field.geometry());
    const std::size_t header = bytes.size();
    bytes.resize(header + 4 * field.size());
    for (std::size_t i = 0; i < field.size(); ++i) {
        const auto bits = std::bit_cast<std::uint32_t>(static_cast<float>(field[i]));
        for (std::size_t b = 0; b < 4; ++b) bytes[header + 4 * i + b] = static_cast<char>((bits >> (8 * b)) & 0xFFu);
    }
    write_file(path, bytes);
}

ScalarField read_volume(const std::filesystem::path& path) {
    const std::string bytes = read_file(path);
    const std::size_t eol = bytes.find('\n');
    if (eol == std::string::npos || eol > 256) throw FormatError("VF32: missing header line in " + path.string());
    const auto tokens = split_spaces(bytes.substr(0, eol));
    if (tokens.empty() || tokens[0] != "VF32") throw FormatError("VF32: bad magic in " + path.string());
    if (tokens.size() < 2) throw FormatError("VF32: header too short");
    const auto ndim = parse_number<std::size_t>(tokens[1], "ndim");
    if (ndim != 2 && ndim != 3) throw FormatError("VF32: ndim must be 2 or 3, got " + tokens[1]);
    if (tokens.size() != 2 + 2 * ndim) throw FormatError("VF32: header has wrong number of fields");

    std::vector<std::size_t> extents(ndim);
    std::vector<double> spacing(ndim);
    for (std::size_t a = 0; a < ndim; ++a) {
        extents[a] = parse_number<std::size_t>(tokens[2 + a], "extent");
        spacing[a] = parse_number<double>(tokens[2 + ndim + a], "spacing");
    }
    Geometry g;
    try {
        g = Geometry(extents, spacing);
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("VF32: ") + e.what());
    }

    const std::size_t payload = bytes.size() - eol - 1;
    if (payload != 4 * g.size()) {
        throw FormatError("VF32: payload has " + std::to_string(payload) + " bytes, expected " +
                          std::to_string(4 * g.size()));
    }
    std::vector<double> data(g.size());
    const auto* p = reinterpret_cast<const unsigned char*>(bytes.data() + eol + 1);
    for (std::size_t i = 0; i < g.size(); ++i) {
        std::uint32_t bits = 0;
        for (std::size_t b = 0; b < 4; ++b) bits |= static_cast<std::uint32_t>(p[4 * i + b]) << (8 * b);
        data[i] = static_cast<double>(std::bit_cast<float>(bits));
    }
    try {
        return ScalarField(g, std::move(data));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("VF32: ") + e.what());
    }
}

void write_pgm(const ScalarField& mask, const std::filesystem::path& path) {
    if (mask.ndim() != 2) throw std::invalid_argument("PGM: mask must be 2D");
    if (!is_binary(mask)) throw std::invalid_argument("PGM: mask must be binary");
    const std::size_t rows = mask.geometry().extent(0);
    const std::size_t cols = mask.geometry().extent(1);
    std::string bytes = "P5\n" + std::to_string(cols) + " " + std::to_string(rows) + "\n255\n";
    for (std::size_t i = 0; i < mask.size(); ++i) bytes.push_back(static_cast<char>(mask[i] == 1.0 ? 255 : 0));
    write_file(path, bytes);
}

ScalarField read_pgm(const std::filesystem::path& path) {
    const std::string bytes = read_file(path);
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') throw FormatError("PGM: not a P5 file: " + path.string());
    std::size_t pos = 2;
    auto skip_space = [&] {
        while (pos < bytes.size()) {
            if (bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(bytes[pos]))) {
                ++pos;
            } else {
                break;
            }
        }
    };
    auto next_int = [&](const char* what) {
        skip_space();
        std::size_t value = 0;
        auto [end, ec] = std::from_chars(bytes.data() + pos, bytes.data() + bytes.size(), value);
        if (ec != std::errc()) throw FormatError(std::string("PGM: bad ") + what);
        pos = static_cast<std::size_t>(end - bytes.data());
        return value;
    };
    const std::size_t cols = next_int("width");
    const std::size_t rows = next_int("height");
    const std::size_t maxval = next_int("maxval");
    if (maxval != 255) throw FormatError("PGM: maxval must be 255");
    if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
        throw FormatError("PGM: missing separator before pixel data");
    }
    ++pos;
    if (bytes.size() - pos != rows * cols) throw FormatError("PGM: pixel data size does not match header");
    const std::array<std::size_t, 2> shape{rows, cols};
    std::vector<double> data(rows * cols);
    for (std::size_t i = 0; i < data.size(); ++i) data[i] = static_cast<unsigned char>(bytes[pos + i]) >= 128 ? 1.0 : 0.0;
    try {
        return ScalarField(Geometry(shape), std::move(data));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("PGM: ") + e.what());
    }
}

ScalarField read_any(const std::filesystem::path& path) {
    if (path.extension() == ".pgm") return read_pgm(path);
    return read_volume(path);
}

std::string format_metrics_csv(const std::vector<NamedReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("metrics CSV: no reports");
    std::string out = "case,dice,hd95,components_pred,components_gt\n";
    char buf[64];
    for (const auto& [name, r] : reports) {
        out += name;
        std::snprintf(buf, sizeof buf, ",%.6f,", r.dice);
        out += buf;
        if (r.hd95) {
            std::snprintf(buf, sizeof buf, "%.6f", *r.hd95);
            out += buf;
        } else {
            out += "error";
        }
        out += "," + std::to_string(r.components_pred) + "," + std::to_string(r.components_gt) + "\n";
    }
    return out;
}

void write_metrics_csv(const std::vector<NamedReport>& reports, const std::filesystem::path& path) {
    write_file(path, format_metrics_csv(reports));
}

void write_text(const std::filesystem::path& path, const std::string& text) { write_file(path, text); }

} // namespace ace::io
