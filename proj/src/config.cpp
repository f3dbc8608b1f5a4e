#include "rbccr/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <stdexcept>

namespace fs = std::filesystem;

namespace rbccr {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : value) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    const std::string last = trim(cur);
    if (!last.empty() || !out.empty()) out.push_back(last);
    out.erase(std::remove(out.begin(), out.end(), std::string{}), out.end());
    return out;
}

std::vector<double> parse_doubles(const std::string& value, std::size_t lineno) {
    std::vector<double> out;
    for (const auto& item : split_list(value)) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError(lineno, "expected a number, got '" + item + "'");
        }
    }
    return out;
}

std::vector<std::size_t> parse_counts(const std::string& value, std::size_t lineno) {
    std::vector<std::size_t> out;
    for (double v : parse_doubles(value, lineno)) {
        if (v < 1.0 || v != std::floor(v))
            throw ParseError(lineno, "expected a positive integer");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

bool glob_match(const std::string& pattern, const std::string& name) {
    // '*' wildcards only; no character classes.
    std::size_t p = 0, n = 0, star = std::string::npos, match = 0;
    while (n < name.size()) {
        if (p < pattern.size() && (pattern[p] == name[n])) {
            ++p;
            ++n;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            match = n;
        } else if (star != std::string::npos) {
            p = star + 1;
            n = ++match;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

} // namespace

BenchmarkConfig BenchmarkConfig::parse(const std::string& text) {
    BenchmarkConfig config;
    MethodGrid* current = nullptr;

    std::size_t lineno = 0;
    std::string line;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = text.find('\n', pos);
        line = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? text.size() + 1 : next + 1;
        ++lineno;

        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(lineno, "unterminated section header");
            const std::string section = trim(line.substr(1, line.size() - 2));
            if (section.rfind("method", 0) != 0)
                throw ParseError(lineno, "unknown section '" + section + "'");
            const std::string method_name = trim(section.substr(6));
            if (method_name.empty()) throw ParseError(lineno, "missing method name");
            MethodGrid grid;
            try {
                grid = MethodGrid::defaults(method_from_string(method_name));
            } catch (const std::exception& e) {
                throw ParseError(lineno, e.what());
            }
            config.methods.push_back(grid);
            current = &config.methods.back();
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (current != nullptr) {
            if (key == "energy") current->energies = parse_doubles(value, lineno);
            else if (key == "gamma") current->gammas = parse_doubles(value, lineno);
            else if (key == "region") {
                current->regions.clear();
                for (const auto& r : split_list(value)) {
                    try {
                        current->regions.push_back(region_from_string(r));
                    } catch (const std::exception& e) {
                        throw ParseError(lineno, e.what());
                    }
                }
            } else if (key == "k") current->k_values = parse_counts(value, lineno);
            else if (key == "candidates") {
                const auto counts = parse_counts(value, lineno);
                if (counts.size() != 1) throw ParseError(lineno, "candidates takes one value");
                current->candidates = counts[0];
            } else if (key == "label") current->label = value;
            else throw ParseError(lineno, "unknown method key '" + key + "'");
            continue;
        }

        if (key == "datasets") config.dataset_patterns = split_list(value);
        else if (key == "format") {
            if (value != "keel" && value != "csv")
                throw ParseError(lineno, "format must be keel or csv");
            config.format = value;
        } else if (key == "label_column") config.label_column = value;
        else if (key == "classifiers") {
            for (const auto& c : split_list(value)) {
                ClassifierSpec spec;
                try {
                    spec.kind = classifier_from_string(c);
                } catch (const std::exception& e) {
                    throw ParseError(lineno, e.what());
                }
                config.classifiers.push_back(spec);
            }
        } else if (key == "seed") {
            try {
                config.master_seed = std::stoull(value);
            } catch (const std::exception&) {
                throw ParseError(lineno, "seed must be an unsigned integer");
            }
        } else if (key == "standardization") {
            if (value == "train") config.standardize_on_full = false;
            else if (value == "full") config.standardize_on_full = true;
            else throw ParseError(lineno, "standardization must be train or full");
        } else if (key == "output_dir") config.output_dir = value;
        else throw ParseError(lineno, "unknown key '" + key + "'");
    }

    if (config.dataset_patterns.empty())
        throw ParseError(lineno, "config names no datasets");
    if (config.methods.empty()) throw ParseError(lineno, "config names no methods");
    if (config.classifiers.empty()) {
        ClassifierSpec knn;
        config.classifiers.push_back(knn);
    }
    // Reject invalid grid values up front, before any dataset is touched.
    for (const auto& grid : config.methods) {
        for (const auto& candidate : grid.expand()) {
            try {
                validate(candidate);
            } catch (const std::exception& e) {
                throw ParseError(lineno, std::string("[method ") + to_string(grid.method) +
                                             "]: " + e.what());
            }
        }
    }
    return config;
}

std::vector<std::string> BenchmarkConfig::resolve_dataset_paths() const {
    std::vector<std::string> paths;
    for (const auto& pattern : dataset_patterns) {
        if (pattern.find('*') == std::string::npos) {
            paths.push_back(pattern);
            continue;
        }
        const fs::path p(pattern);
        const fs::path dir = p.parent_path().empty() ? fs::path(".") : p.parent_path();
        const std::string name_pattern = p.filename().string();
        std::vector<std::string> matched;
        if (fs::is_directory(dir)) {
            for (const auto& entry : fs::directory_iterator(dir)) {
                if (!entry.is_regular_file()) continue;
                if (glob_match(name_pattern, entry.path().filename().string()))
                    matched.push_back(entry.path().string());
            }
        }
        std::sort(matched.begin(), matched.end());
        paths.insert(paths.end(), matched.begin(), matched.end());
    }
    return paths;
}

} // namespace rbccr
