#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rbccr/evaluation.hpp"

namespace rbccr {

// Benchmark configuration: flat key = value lines plus repeated
// "[method <name>]" blocks. '#' starts a comment; global keys must precede
// the first method block. Dataset entries may use '*' wildcards in the
// filename part.
struct BenchmarkConfig {
    std::vector<std::string> dataset_patterns;
    std::string format = "keel";  // "keel" | "csv"
    std::string label_column = "label";
    std::vector<ClassifierSpec> classifiers;
    std::vector<MethodGrid> methods;
    std::uint64_t master_seed = 0;
    bool standardize_on_full = false;
    std::string output_dir = ".";

    static BenchmarkConfig parse(const std::string& text);

    // Expands dataset_patterns against the filesystem, sorted per pattern.
    std::vector<std::string> resolve_dataset_paths() const;
};

} // namespace rbccr
