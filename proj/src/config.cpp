#include "srblab/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "srblab/errors.hpp"

namespace srblab {
namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t prev = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t cur = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                               prev + (a[i - 1] == b[j - 1] ? 0 : 1)});
            prev = cur;
        }
    }
    return row[b.size()];
}

std::string suggest(const std::string& key, const std::vector<std::string>& known) {
    std::string best;
    std::size_t best_d = 4;  // suggest only reasonably close names
    for (const auto& k : known) {
        const std::size_t d = edit_distance(key, k);
        if (d < best_d) {
            best_d = d;
            best = k;
        }
    }
    return best;
}

double parse_double(const std::string& v, const std::string& key, std::size_t line) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return d;
    } catch (...) {
        throw ConfigError("value \"" + v + "\" for " + key + " is not a number", line);
    }
}

std::uint64_t parse_u64(const std::string& v, const std::string& key, std::size_t line) {
    std::uint64_t out = 0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size())
        throw ConfigError("value \"" + v + "\" for " + key + " is not a nonnegative integer",
                          line);
    return out;
}

bool parse_bool(const std::string& v, const std::string& key, std::size_t line) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ConfigError("value \"" + v + "\" for " + key + " is not a boolean", line);
}

std::vector<double> parse_double_list(const std::string& v, const std::string& key,
                                      std::size_t line) {
    std::vector<double> out;
    std::istringstream iss(v);
    std::string tok;
    while (iss >> tok) out.push_back(parse_double(tok, key, line));
    if (out.empty()) throw ConfigError("empty list for " + key, line);
    return out;
}

const std::vector<std::string>& section_keys(const std::string& section) {
    static const std::map<std::string, std::vector<std::string>> keys = {
        {"system", {"name"}},  // plus free-form numeric parameters
        {"grid", {"resolution"}},
        {"metric", {"truncation"}},
        {"schedule", {"n0", "gamma", "horizon", "burn_in"}},
        {"pomega",
         {"delta_cluster", "delta_conv", "tail_fraction", "x0", "endpoint_a", "endpoint_b"}},
        {"observable",
         {"samples", "seed", "epsilon_ladder", "phi_srb", "holdout_samples", "holdout_seed",
          "holdout_epsilon", "sweep"}},
        {"output", {"dir", "threads", "reference", "dump_measures"}},
    };
    auto it = keys.find(section);
    if (it == keys.end()) {
        static const std::vector<std::string> empty;
        return empty;
    }
    return it->second;
}

void apply(ExperimentConfig& cfg, const std::string& section, const std::string& key,
           const std::string& value, std::size_t line) {
    const auto& known = section_keys(section);
    const bool recognized = std::find(known.begin(), known.end(), key) != known.end();
    if (section == "system") {
        if (key == "name") {
            cfg.system_name = value;
        } else {
            cfg.system_params[key] = parse_double(value, key, line);  // validated by the system
        }
        return;
    }
    if (!recognized) {
        std::vector<std::string> all;
        for (const char* sec : {"grid", "metric", "schedule", "pomega", "observable", "output"})
            for (const auto& k : section_keys(sec)) all.push_back(k);
        const std::string near = suggest(key, all);
        std::string msg = "unknown key \"" + key + "\" in section [" + section + "]";
        if (!near.empty()) msg += "; did you mean \"" + near + "\"?";
        throw ConfigError(msg, line);
    }
    if (key == "resolution") {
        cfg.resolution.clear();
        for (double d : parse_double_list(value, key, line)) {
            if (d < 1 || d != static_cast<std::uint32_t>(d))
                throw ConfigError("resolution entries must be positive integers", line);
            cfg.resolution.push_back(static_cast<std::uint32_t>(d));
        }
    } else if (key == "truncation") {
        cfg.truncation = parse_u64(value, key, line);
    } else if (key == "n0") {
        cfg.n0 = parse_u64(value, key, line);
    } else if (key == "gamma") {
        cfg.gamma = parse_double(value, key, line);
    } else if (key == "horizon") {
        cfg.horizon = parse_u64(value, key, line);
    } else if (key == "burn_in") {
        cfg.burn_in = parse_u64(value, key, line);
    } else if (key == "delta_cluster") {
        cfg.delta_cluster = parse_double(value, key, line);
    } else if (key == "delta_conv") {
        cfg.delta_conv = parse_double(value, key, line);
    } else if (key == "tail_fraction") {
        cfg.tail_fraction = parse_double(value, key, line);
    } else if (key == "x0") {
        cfg.x0 = parse_double_list(value, key, line);
    } else if (key == "endpoint_a") {
        cfg.endpoint_a = parse_double_list(value, key, line);
    } else if (key == "endpoint_b") {
        cfg.endpoint_b = parse_double_list(value, key, line);
    } else if (key == "samples") {
        cfg.samples = parse_u64(value, key, line);
    } else if (key == "seed") {
        cfg.seed = parse_u64(value, key, line);
    } else if (key == "epsilon_ladder") {
        cfg.epsilon_ladder = parse_double_list(value, key, line);
    } else if (key == "phi_srb") {
        cfg.phi_srb = parse_double(value, key, line);
    } else if (key == "holdout_samples") {
        cfg.holdout_samples = parse_u64(value, key, line);
    } else if (key == "holdout_seed") {
        cfg.holdout_seed = parse_u64(value, key, line);
    } else if (key == "holdout_epsilon") {
        cfg.holdout_epsilon = parse_double(value, key, line);
    } else if (key == "sweep") {
        cfg.sweep.clear();
        for (double d : parse_double_list(value, key, line)) {
            if (d < 1 || d != static_cast<std::size_t>(d))
                throw ConfigError("sweep entries must be positive integers", line);
            cfg.sweep.push_back(static_cast<std::size_t>(d));
        }
    } else if (key == "dir") {
        cfg.out_dir = value;
    } else if (key == "threads") {
        cfg.threads = static_cast<unsigned>(parse_u64(value, key, line));
    } else if (key == "reference") {
        if (value != "first" && value != "uniform" && value != "none")
            throw ConfigError("reference must be one of: first, uniform, none", line);
        cfg.reference = value;
    } else if (key == "dump_measures") {
        cfg.dump_measures = parse_bool(value, key, line);
    }
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    std::string section;
    bool saw_section = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("unterminated section header", lineno);
            section = trim(line.substr(1, line.size() - 2));
            static const std::vector<std::string> sections{"system",     "grid",   "metric",
                                                           "schedule",   "pomega", "observable",
                                                           "output"};
            if (std::find(sections.begin(), sections.end(), section) == sections.end()) {
                const std::string near = suggest(section, sections);
                std::string msg = "unknown section [" + section + "]";
                if (!near.empty()) msg += "; did you mean [" + near + "]?";
                throw ConfigError(msg, lineno);
            }
            saw_section = true;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key = value, got \"" + line + "\"", lineno);
        if (!saw_section) throw ConfigError("key before any [section] header", lineno);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("empty key", lineno);
        if (value.empty()) throw ConfigError("empty value for " + key, lineno);
        apply(cfg, section, key, value, lineno);
    }
    if (cfg.system_name.empty())
        throw ConfigError("config must set name in the [system] section");
    validate_config(cfg);
    return cfg;
}

ExperimentConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

void validate_config(const ExperimentConfig& cfg) {
    auto positive = [](double v, const char* field) {
        if (!(v > 0.0)) throw ConfigError(std::string(field) + " must be > 0");
    };
    positive(cfg.delta_cluster, "delta_cluster");
    positive(cfg.delta_conv, "delta_conv");
    positive(cfg.phi_srb, "phi_srb");
    positive(cfg.holdout_epsilon, "holdout_epsilon");
    if (!(cfg.tail_fraction > 0.0 && cfg.tail_fraction <= 1.0))
        throw ConfigError("tail_fraction must be in (0, 1]");
    if (cfg.truncation == 0) throw ConfigError("truncation must be >= 1");
    if (cfg.n0 == 0) throw ConfigError("n0 must be >= 1");
    if (!(cfg.gamma > 1.0)) throw ConfigError("gamma must be > 1");
    if (cfg.horizon < cfg.n0) throw ConfigError("horizon must be >= n0");
    if (cfg.samples == 0) throw ConfigError("samples must be >= 1");
    for (std::uint32_t r : cfg.resolution)
        if (r < 2) throw ConfigError("resolution must be >= 2 per axis");
    for (std::size_t i = 0; i < cfg.epsilon_ladder.size(); ++i) {
        if (!(cfg.epsilon_ladder[i] > 0.0))
            throw ConfigError("epsilon_ladder entries must be > 0");
        if (i > 0 && !(cfg.epsilon_ladder[i] < cfg.epsilon_ladder[i - 1]))
            throw ConfigError("epsilon_ladder must be strictly decreasing");
    }
    if (cfg.epsilon_ladder.empty()) throw ConfigError("epsilon_ladder must be nonempty");
    for (std::size_t i = 1; i < cfg.sweep.size(); ++i)
        if (cfg.sweep[i] <= cfg.sweep[i - 1])
            throw ConfigError("sweep must be strictly increasing");
}

}  // namespace srblab
