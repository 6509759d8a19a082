#include "manifest.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "ace/io.hpp"
#include "common.hpp"

namespace ace::cli {

Manifest::Manifest(std::string subcommand) { entries_.emplace_back("subcommand", std::move(subcommand)); }

void Manifest::set(const std::string& key, const std::string& value) {
    for (auto& [k, v] : entries_) {
        if (k == key) {
            v = value;
            return;
        }
    }
    entries_.emplace_back(key, value);
}

void Manifest::record_flags(const CLI::App& sub) {
    for (const CLI::Option* opt : sub.get_options()) {
        if (opt->get_lnames().empty()) continue;
        const std::string& name = opt->get_lnames().front();
        if (name == "help") continue;
        std::string value;
        if (opt->count() > 0) {
            const auto& results = opt->results();
            for (std::size_t i = 0; i < results.size(); ++i) value += (i ? "," : "") + results[i];
        } else {
            value = opt->get_default_str();
        }
        set("flag." + name, value);
    }
}

void Manifest::record_time(const std::string& stage, double seconds) {
    set("time." + stage + "_seconds", format_real(seconds));
}

std::string Manifest::str() const {
    std::ostringstream os;
    for (const auto& [k, v] : entries_) os << k << '=' << v << '\n';
    return os.str();
}

void Manifest::write(const std::filesystem::path& path) const { io::write_text(path, str()); }

} // namespace ace::cli
