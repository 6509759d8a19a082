#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace CLI {
class App;
}

namespace ace::cli {

/// Plain key=value record of a run: subcommand, every resolved flag, and
/// wall time per stage.
class Manifest {
public:
    explicit Manifest(std::string subcommand);

    void set(const std::string& key, const std::string& value);
    /// Records every option of `sub` with its parsed or default value.
    void record_flags(const CLI::App& sub);
    void record_time(const std::string& stage, double seconds);

    std::string str() const;
    void write(const std::filesystem::path& path) const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

/// Wall-clock stopwatch.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace ace::cli
