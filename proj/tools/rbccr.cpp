#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rbccr/config.hpp"
#include "rbccr/evaluation.hpp"
#include "rbccr/reporting.hpp"

namespace fs = std::filesystem;
using namespace rbccr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;  // parse / validation errors
constexpr int kExitIo = 2;     // file system errors

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoFailure("error while reading '" + path + "'");
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoFailure("error while writing '" + path + "'");
}

Dataset load_dataset(const std::string& path, const std::string& format,
                     const std::string& label_column) {
    const std::string text = read_file(path);
    const std::string stem = fs::path(path).stem().string();
    if (format == "csv") return parse_csv(text, label_column, stem);
    Dataset d = parse_keel(text, stem);
    d.name = stem;  // file name wins over @relation for stable reporting keys
    return d;
}

// Largest column deviation from zero mean / unit variance.
double standardization_gap(const Dataset& d) {
    double gap = 0.0;
    const double n = static_cast<double>(d.size());
    for (std::size_t j = 0; j < d.num_features(); ++j) {
        double mean = 0.0, var = 0.0;
        for (std::size_t i = 0; i < d.size(); ++i) mean += d.features(i, j);
        mean /= n;
        for (std::size_t i = 0; i < d.size(); ++i) {
            const double dev = d.features(i, j) - mean;
            var += dev * dev;
        }
        var /= n;
        gap = std::max(gap, std::abs(mean));
        if (var > 0.0) gap = std::max(gap, std::abs(std::sqrt(var) - 1.0));
    }
    return gap;
}

struct ResampleArgs {
    std::string input;
    std::string format = "keel";
    std::string label_column = "label";
    std::string method = "rb-ccr";
    double energy = 5.0;
    double gamma = 1.0;
    std::string region = "LEH";
    std::size_t candidates = 100;
    std::size_t k = 5;
    std::uint64_t seed = 0;
    std::string output;
    bool no_standardize = false;
    bool force = false;
    bool no_provenance = false;
};

int run_resample(const ResampleArgs& args) {
    Dataset d;
    try {
        d = load_dataset(args.input, args.format, args.label_column);
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << args.input << ": " << e.what() << '\n';
        return kExitUsage;
    }

    ResamplerConfig config;
    try {
        config.method = method_from_string(args.method);
        config.energy = args.energy;
        config.gamma = args.gamma;
        config.region = region_from_string(args.region);
        config.candidates = args.candidates;
        config.k_neighbors = args.k;
        config.seed = args.seed;
        validate(config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (args.no_standardize) {
        const double gap = standardization_gap(d);
        if (gap > 1e-6 && !args.force &&
            (config.method == ResampleMethod::ccr || config.method == ResampleMethod::rb_ccr)) {
            std::cerr << "error: input is not standardized (max column deviation "
                      << format_double(gap)
                      << "); sphere energies and gamma assume zero mean and unit variance."
                         " Pass --force to resample anyway.\n";
            return kExitUsage;
        }
    } else {
        d = standardize(d).first;
    }

    auto [min_idx, maj_idx] = split_indices_by_class(d);
    const Matrix x_min = d.features.take_rows(min_idx);
    const Matrix x_maj = d.features.take_rows(maj_idx);

    ResampleOutput out;
    try {
        Rng rng(args.seed);
        out = resample(x_maj, x_min, config, rng);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::string csv;
    for (std::size_t j = 0; j < d.num_features(); ++j) csv += "f" + std::to_string(j) + ",";
    csv += "label";
    if (!args.no_provenance) csv += ",provenance";
    csv += '\n';
    const std::string maj_label = d.majority_label();
    auto emit_row = [&](std::span<const double> row, const std::string& label,
                        const char* provenance) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            csv += format_double(row[j]);
            csv += ',';
        }
        csv += label;
        if (!args.no_provenance) {
            csv += ',';
            csv += provenance;
        }
        csv += '\n';
    };
    for (std::size_t i = 0; i < out.majority.rows(); ++i)
        emit_row(out.majority.row(i), maj_label,
                 out.majority_translated[i] ? "translated-majority" : "original-majority");
    for (std::size_t i = 0; i < out.minority.rows(); ++i)
        emit_row(out.minority.row(i), d.minority_label, "original-minority");
    for (std::size_t i = 0; i < out.synthetic.rows(); ++i)
        emit_row(out.synthetic.row(i), d.minority_label, "synthetic");

    try {
        write_file(args.output, csv);
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }

    std::cerr << d.name << ": " << out.majority.rows() << " majority, " << out.minority.rows()
              << " minority, " << out.synthetic.rows() << " synthetic; achieved ratio "
              << format_double(out.achieved_ratio) << '\n';
    return kExitOk;
}

struct BenchmarkArgs {
    std::string config_path;
    std::size_t jobs = 1;
};

int run_benchmark_cmd(const BenchmarkArgs& args) {
    std::string text;
    try {
        text = read_file(args.config_path);
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    BenchmarkConfig config;
    try {
        config = BenchmarkConfig::parse(text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << args.config_path << ": " << e.what() << '\n';
        return kExitUsage;
    }

    BenchmarkSpec spec;
    spec.methods = config.methods;
    spec.classifiers = config.classifiers;
    spec.plan.master_seed = config.master_seed;
    spec.plan.standardize_on_full = config.standardize_on_full;
    spec.plan.jobs = args.jobs;

    std::vector<std::string> load_failures;
    for (const auto& path : config.resolve_dataset_paths()) {
        try {
            spec.datasets.push_back(load_dataset(path, config.format, config.label_column));
        } catch (const std::exception& e) {
            load_failures.push_back(std::string(e.what()));
        }
    }
    for (const auto& f : load_failures) std::cerr << "skipped: " << f << '\n';
    if (spec.datasets.empty()) {
        std::cerr << "error: no datasets could be loaded\n";
        return kExitUsage;
    }
    std::cerr << "benchmark: " << spec.datasets.size() << " datasets, " << spec.methods.size()
              << " methods, " << spec.classifiers.size() << " classifiers, jobs=" << args.jobs
              << '\n';

    const BenchmarkResult result = run_benchmark(spec);
    for (const auto& f : result.failures) std::cerr << "skipped: " << f << '\n';
    if (result.records.empty()) {
        std::cerr << "error: every dataset failed\n";
        return kExitUsage;
    }

    try {
        fs::create_directories(config.output_dir);
        const fs::path dir(config.output_dir);
        write_file((dir / "records.csv").string(), records_to_csv(result.records));
        write_file((dir / "means.csv").string(), means_csv(result.records));
        write_file((dir / "ranks.csv").string(), ranks_csv(result.records));
        write_file((dir / "pairwise_wins.csv").string(), pairwise_wins_csv(result.records));
        write_file((dir / "wilcoxon_rb_ccr_vs_ccr.csv").string(),
                   wilcoxon_pair_csv(result.records, "rb-ccr", "ccr"));
        write_file((dir / "friedman.csv").string(), friedman_csv(result.records));
        write_file((dir / "holm.csv").string(), holm_csv(result.records));
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    std::cerr << "wrote " << result.records.size() << " records to " << config.output_dir
              << '\n';
    return kExitOk;
}

struct ReportArgs {
    std::string records_path;
    std::string output_dir = ".";
};

int run_report(const ReportArgs& args) {
    std::string text;
    try {
        text = read_file(args.records_path);
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    std::vector<EvalRecord> records;
    try {
        records = parse_records_csv(text);
        if (records.empty()) throw std::invalid_argument("records: no data rows");
    } catch (const std::exception& e) {
        std::cerr << "error: " << args.records_path << ": " << e.what() << '\n';
        return kExitUsage;
    }
    try {
        fs::create_directories(args.output_dir);
        const fs::path dir(args.output_dir);
        write_file((dir / "means.csv").string(), means_csv(records));
        write_file((dir / "ranks.csv").string(), ranks_csv(records));
        write_file((dir / "pairwise_wins.csv").string(), pairwise_wins_csv(records));
        write_file((dir / "friedman.csv").string(), friedman_csv(records));
        write_file((dir / "holm.csv").string(), holm_csv(records));
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radial-based combined cleaning and resampling toolkit"};
    app.require_subcommand(1);

    ResampleArgs resample_args;
    auto* resample_cmd =
        app.add_subcommand("resample", "Resample one dataset and write the training set as CSV");
    resample_cmd->add_option("--input", resample_args.input, "input dataset path")->required();
    resample_cmd->add_option("--format", resample_args.format, "input format")
        ->check(CLI::IsMember({"keel", "csv"}));
    resample_cmd->add_option("--label-column", resample_args.label_column,
                             "label column name (csv input)");
    resample_cmd->add_option("--method", resample_args.method, "none|ros|rus|smote|ccr|rb-ccr");
    resample_cmd->add_option("--energy", resample_args.energy, "sphere expansion budget");
    resample_cmd->add_option("--gamma", resample_args.gamma, "radial basis function spread");
    resample_cmd->add_option("--region", resample_args.region, "L|E|H|LEH");
    resample_cmd->add_option("--candidates", resample_args.candidates,
                             "candidates per sphere for potential range estimation");
    resample_cmd->add_option("--k", resample_args.k, "smote neighbor count");
    resample_cmd->add_option("--seed", resample_args.seed, "random seed");
    resample_cmd->add_option("--output", resample_args.output, "output CSV path")->required();
    resample_cmd->add_flag("--no-standardize", resample_args.no_standardize,
                           "skip the z-score preprocessing step");
    resample_cmd->add_flag("--force", resample_args.force,
                           "allow potential-based methods on non-standardized data");
    resample_cmd->add_flag("--no-provenance", resample_args.no_provenance,
                           "omit the provenance column (output re-parses as a plain dataset)");

    BenchmarkArgs benchmark_args;
    auto* benchmark_cmd =
        app.add_subcommand("benchmark", "Run the 5x2 cross-validated benchmark campaign");
    benchmark_cmd->add_option("--config", benchmark_args.config_path, "benchmark config file")
        ->required();
    benchmark_cmd->add_option("--jobs", benchmark_args.jobs, "worker thread count")
        ->check(CLI::PositiveNumber);

    ReportArgs report_args;
    auto* report_cmd =
        app.add_subcommand("report", "Aggregate a records CSV into rank and win/loss tables");
    report_cmd->add_option("--records", report_args.records_path, "records CSV path")->required();
    report_cmd->add_option("--output-dir", report_args.output_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (app.got_subcommand(resample_cmd)) return run_resample(resample_args);
    if (app.got_subcommand(benchmark_cmd)) return run_benchmark_cmd(benchmark_args);
    if (app.got_subcommand(report_cmd)) return run_report(report_args);
    return kExitUsage;
}
