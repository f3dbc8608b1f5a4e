#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rbccr/classifiers.hpp"
#include "rbccr/dataset.hpp"
#include "rbccr/metrics.hpp"
#include "rbccr/resamplers.hpp"

namespace rbccr {

// 5x2 cross-validation with inner 3-fold selection of resampler
// hyperparameters by AUC. The protocol shape is fixed; the master seed,
// standardization mode and parallelism vary.
struct CVPlan {
    static constexpr std::size_t repetitions = 5;
    static constexpr std::size_t outer_folds = 2;
    static constexpr std::size_t inner_folds = 3;
    std::uint64_t master_seed = 0;
    bool standardize_on_full = false;  // default: fit scaling on the training half
    std::size_t jobs = 1;
};

// One (dataset, method, classifier, repetition, fold) result.
struct EvalRecord {
    std::string dataset;
    std::string method;      // display label, e.g. "rb-ccr" or "rb-ccr-H"
    std::string params;      // selected hyperparameters, e.g. "energy=5;gamma=1;region=H"
    std::string classifier;  // "knn" | "gnb" | "logreg"
    std::size_t repetition = 0;
    std::size_t fold = 0;
    MetricSet metrics;
};

// Hyperparameter grid for one resampling method. expand() produces configs in
// deterministic order (energy, then gamma, then region, then k); inner-CV ties
// break toward the earlier config.
struct MethodGrid {
    ResampleMethod method = ResampleMethod::none;
    std::string label;  // defaults to the method name
    std::vector<double> energies;
    std::vector<double> gammas;
    std::vector<SamplingRegion> regions;
    std::vector<std::size_t> k_values;
    std::size_t candidates = 100;

    std::vector<ResamplerConfig> expand() const;

    // Grids from the evaluation protocol: energy {0.5, 1, 2.5, 5, 10, 25, 50,
    // 100}, gamma {0.5, 1, 2.5, 5, 10}, region {L, E, H, LEH}, smote k
    // {1, 3, 5, 7, 9}.
    static MethodGrid defaults(ResampleMethod method);

    std::string display_label() const { return label.empty() ? to_string(method) : label; }
};

// Index of the grid config maximizing mean inner-fold AUC (ties: first wins).
// `train` must already be standardized. A config that fails on an inner fold
// scores 0 for that fold.
std::size_t select_inner(const Dataset& train, const std::vector<ResamplerConfig>& configs,
                         const ClassifierSpec& classifier, const CVPlan& plan,
                         const std::string& dataset_name, std::size_t repetition,
                         std::size_t fold);

// One outer fold: standardize, select hyperparameters on the training half,
// resample it, fit, evaluate on the held-out half. training_lineage lists the
// original dataset rows every training observation traces back to.
struct FoldOutcome {
    EvalRecord record;
    ResamplerConfig selected;
    std::vector<std::size_t> training_lineage;
};

FoldOutcome run_fold(const Dataset& dataset, const MethodGrid& grid,
                     const ClassifierSpec& classifier, const CVPlan& plan, std::size_t repetition,
                     std::size_t fold, const FoldSplit& split);

// Full 5x2 protocol for one (dataset, grid, classifier): 10 records.
std::vector<EvalRecord> run_cv(const Dataset& dataset, const MethodGrid& grid,
                               const ClassifierSpec& classifier, const CVPlan& plan);

struct BenchmarkSpec {
    std::vector<Dataset> datasets;
    std::vector<MethodGrid> methods;
    std::vector<ClassifierSpec> classifiers;
    CVPlan plan;
};

struct BenchmarkResult {
    std::vector<EvalRecord> records;    // canonical (dataset, method, classifier, rep, fold) order
    std::vector<std::string> failures;  // one diagnostic per skipped dataset
};

// Runs the task grid, parallel over plan.jobs threads. Results are identical
// at any parallelism level.
BenchmarkResult run_benchmark(const BenchmarkSpec& spec);

// Per-dataset mean metrics and cross-dataset average ranks (1 = best, midranks
// on ties). Records must all share one classifier and cover every
// (dataset, method) cell.
struct RankTable {
    std::vector<std::string> datasets;
    std::vector<std::string> methods;
    std::map<std::string, Matrix> means;                       // metric -> datasets x methods
    std::map<std::string, std::vector<double>> average_ranks;  // metric -> per-method rank
};

RankTable rank_table(const std::vector<EvalRecord>& records);

// Flat CSV with header dataset,method,params,classifier,rep,fold,<metrics>.
std::string records_to_csv(const std::vector<EvalRecord>& records);
std::vector<EvalRecord> parse_records_csv(const std::string& text);

} // namespace rbccr
