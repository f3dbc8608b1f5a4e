#include "rbccr/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rbccr/random.hpp"
#include "rbccr/stats.hpp"

namespace rbccr {

std::vector<ResamplerConfig> MethodGrid::expand() const {
    std::vector<ResamplerConfig> configs;
    ResamplerConfig base;
    base.method = method;
    base.candidates = candidates;
    switch (method) {
        case ResampleMethod::none:
        case ResampleMethod::ros:
        case ResampleMethod::rus:
            configs.push_back(base);
            break;
        case ResampleMethod::smote:
            for (auto k : k_values.empty() ? std::vector<std::size_t>{5} : k_values) {
                base.k_neighbors = k;
                configs.push_back(base);
            }
            break;
        case ResampleMethod::ccr:
            for (double e : energies.empty() ? std::vector<double>{5.0} : energies) {
                base.energy = e;
                base.region = SamplingRegion::LEH;
                configs.push_back(base);
            }
            break;
        case ResampleMethod::rb_ccr: {
            const auto es = energies.empty() ? std::vector<double>{5.0} : energies;
            const auto gs = gammas.empty() ? std::vector<double>{1.0} : gammas;
            const auto rs =
                regions.empty() ? std::vector<SamplingRegion>{SamplingRegion::LEH} : regions;
            for (double e : es)
                for (double g : gs)
                    for (auto r : rs) {
                        base.energy = e;
                        base.gamma = g;
                        base.region = r;
                        configs.push_back(base);
                    }
            break;
        }
    }
    return configs;
}

MethodGrid MethodGrid::defaults(ResampleMethod method) {
    MethodGrid grid;
    grid.method = method;
    switch (method) {
        case ResampleMethod::smote:
            grid.k_values = {1, 3, 5, 7, 9};
            break;
        case ResampleMethod::ccr:
            grid.energies = {0.5, 1.0, 2.5, 5.0, 10.0, 25.0, 50.0, 100.0};
            break;
        case ResampleMethod::rb_ccr:
            grid.energies = {0.5, 1.0, 2.5, 5.0, 10.0, 25.0, 50.0, 100.0};
            grid.gammas = {0.5, 1.0, 2.5, 5.0, 10.0};
            grid.regions = {SamplingRegion::L, SamplingRegion::E, SamplingRegion::H,
                            SamplingRegion::LEH};
            break;
        default:
            break;
    }
    return grid;
}

namespace {

// Resample the training rows, fit, and score AUC on the validation rows.
// Throws if the classifier cannot be fit or scored.
double fold_auc(const Dataset& train, const Dataset& val, const ResamplerConfig& config,
                const ClassifierSpec& classifier, std::uint64_t seed) {
    auto [x_min, x_maj] = split_by_class(train);
    Rng rng(seed);
    ResamplerConfig seeded = config;
    seeded.seed = seed;
    const ResampleOutput out = resample(x_maj, x_min, seeded, rng);
    const TrainedModel model = fit(classifier, out.combined_features(), out.combined_labels());
    const auto scores = predict_scores(model, val.features);
    return auc(val.binary_labels(), scores);
}

} // namespace

std::size_t select_inner(const Dataset& train, const std::vector<ResamplerConfig>& configs,
                         const ClassifierSpec& classifier, const CVPlan& plan,
                         const std::string& dataset_name, std::size_t repetition,
                         std::size_t fold) {
    if (configs.empty()) throw std::invalid_argument("select_inner: empty grid");
    if (configs.size() == 1) return 0;

    const auto inner_splits = stratified_kfold(
        train, CVPlan::inner_folds,
        derive_seed(plan.master_seed, dataset_name, std::string_view("inner"), repetition, fold));

    double best_auc = -1.0;
    std::size_t best_index = 0;
    for (std::size_t g = 0; g < configs.size(); ++g) {
        double sum = 0.0;
        for (std::size_t j = 0; j < inner_splits.size(); ++j) {
            const Dataset inner_train = subset(train, inner_splits[j].train);
            const Dataset inner_val = subset(train, inner_splits[j].test);
            const std::uint64_t seed = derive_seed(plan.master_seed, dataset_name,
                                                   std::string_view("grid"), repetition, fold,
                                                   static_cast<std::uint64_t>(g), j);
            try {
                sum += fold_auc(inner_train, inner_val, configs[g], classifier, seed);
            } catch (const std::exception&) {
                // A config that cannot run on this fold contributes 0.
            }
        }
        const double mean = sum / static_cast<double>(inner_splits.size());
        if (mean > best_auc) {
            best_auc = mean;
            best_index = g;
        }
    }
    return best_index;
}

FoldOutcome run_fold(const Dataset& dataset, const MethodGrid& grid,
                     const ClassifierSpec& classifier, const CVPlan& plan, std::size_t repetition,
                     std::size_t fold, const FoldSplit& split) {
    Dataset train = subset(dataset, split.train);
    Dataset test = subset(dataset, split.test);

    ScalingParams scaling;
    if (plan.standardize_on_full) {
        scaling = standardize(dataset).second;
        train = apply_scaling(train, scaling);
    } else {
        std::tie(train, scaling) = standardize(train);
    }
    test = apply_scaling(test, scaling);

    const auto configs = grid.expand();
    const std::size_t winner =
        select_inner(train, configs, classifier, plan, dataset.name, repetition, fold);

    auto [min_idx, maj_idx] = split_indices_by_class(train);
    const Matrix x_min = train.features.take_rows(min_idx);
    const Matrix x_maj = train.features.take_rows(maj_idx);

    const std::uint64_t final_seed =
        derive_seed(plan.master_seed, dataset.name, std::string_view("final"), repetition, fold,
                    static_cast<std::uint64_t>(winner));
    Rng rng(final_seed);
    ResamplerConfig selected = configs[winner];
    selected.seed = final_seed;
    const ResampleOutput out = resample(x_maj, x_min, selected, rng);

    const TrainedModel model = fit(classifier, out.combined_features(), out.combined_labels());
    const auto scores = predict_scores(model, test.features);
    const auto predicted = predict_labels(model, test.features);
    const auto truth = test.binary_labels();

    FoldOutcome outcome;
    outcome.selected = selected;
    outcome.record.dataset = dataset.name;
    outcome.record.method = grid.display_label();
    outcome.record.params = selected.params_string();
    outcome.record.classifier = to_string(classifier.kind);
    outcome.record.repetition = repetition;
    outcome.record.fold = fold;
    outcome.record.metrics = confusion_metrics(truth, predicted);
    outcome.record.metrics.auc = auc(truth, scores);

    // Lineage back to original dataset rows: train-half positions -> rows.
    for (std::size_t j : out.majority_source)
        outcome.training_lineage.push_back(split.train[maj_idx[j]]);
    for (std::size_t i : min_idx) outcome.training_lineage.push_back(split.train[i]);
    for (std::size_t i : out.synthetic_source)
        outcome.training_lineage.push_back(split.train[min_idx[i]]);
    return outcome;
}

std::vector<EvalRecord> run_cv(const Dataset& dataset, const MethodGrid& grid,
                               const ClassifierSpec& classifier, const CVPlan& plan) {
    std::vector<EvalRecord> records;
    records.reserve(CVPlan::repetitions * CVPlan::outer_folds);
    for (std::size_t rep = 0; rep < CVPlan::repetitions; ++rep) {
        const auto splits = stratified_kfold(
            dataset, CVPlan::outer_folds,
            derive_seed(plan.master_seed, dataset.name, std::string_view("outer"), rep));
        for (std::size_t fold = 0; fold < CVPlan::outer_folds; ++fold) {
            records.push_back(
                run_fold(dataset, grid, classifier, plan, rep, fold, splits[fold]).record);
        }
    }
    return records;
}

BenchmarkResult run_benchmark(const BenchmarkSpec& spec) {
    struct Task {
        std::size_t dataset, method, classifier, repetition, fold;
    };
    std::vector<Task> tasks;
    for (std::size_t d = 0; d < spec.datasets.size(); ++d)
        for (std::size_t m = 0; m < spec.methods.size(); ++m)
            for (std::size_t c = 0; c < spec.classifiers.size(); ++c)
                for (std::size_t r = 0; r < CVPlan::repetitions; ++r)
                    for (std::size_t f = 0; f < CVPlan::outer_folds; ++f)
                        tasks.push_back({d, m, c, r, f});

    std::vector<EvalRecord> slots(tasks.size());
    std::vector<std::string> errors(spec.datasets.size());
    std::mutex error_mutex;
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        while (true) {
            const std::size_t t = next.fetch_add(1);
            if (t >= tasks.size()) break;
            const Task& task = tasks[t];
            const Dataset& dataset = spec.datasets[task.dataset];
            try {
                const auto splits = stratified_kfold(
                    dataset, CVPlan::outer_folds,
                    derive_seed(spec.plan.master_seed, dataset.name, std::string_view("outer"),
                                task.repetition));
                slots[t] = run_fold(dataset, spec.methods[task.method],
                                    spec.classifiers[task.classifier], spec.plan, task.repetition,
                                    task.fold, splits[task.fold])
                               .record;
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (errors[task.dataset].empty())
                    errors[task.dataset] = dataset.name + ": " + e.what();
            }
        }
    };

    const std::size_t jobs = std::max<std::size_t>(1, spec.plan.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (std::size_t i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    BenchmarkResult result;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        if (errors[tasks[t].dataset].empty()) result.records.push_back(slots[t]);
    }
    for (const auto& e : errors)
        if (!e.empty()) result.failures.push_back(e);
    return result;
}

RankTable rank_table(const std::vector<EvalRecord>& records) {
    if (records.empty()) throw std::invalid_argument("rank_table: no records");
    std::set<std::string> classifiers;
    for (const auto& r : records) classifiers.insert(r.classifier);
    if (classifiers.size() != 1)
        throw std::invalid_argument("rank_table: records must share one classifier");

    RankTable table;
    // Keys in first-appearance order for stable output.
    for (const auto& r : records) {
        if (std::find(table.datasets.begin(), table.datasets.end(), r.dataset) ==
            table.datasets.end())
            table.datasets.push_back(r.dataset);
        if (std::find(table.methods.begin(), table.methods.end(), r.method) ==
            table.methods.end())
            table.methods.push_back(r.method);
    }
    const std::size_t nd = table.datasets.size(), nm = table.methods.size();
    auto dataset_index = [&](const std::string& s) {
        return static_cast<std::size_t>(
            std::find(table.datasets.begin(), table.datasets.end(), s) - table.datasets.begin());
    };
    auto method_index = [&](const std::string& s) {
        return static_cast<std::size_t>(
            std::find(table.methods.begin(), table.methods.end(), s) - table.methods.begin());
    };

    Matrix counts(nd, nm, 0.0);
    std::map<std::string, Matrix> sums;
    for (const auto& name : kMetricNames) sums.emplace(name, Matrix(nd, nm, 0.0));
    for (const auto& r : records) {
        const std::size_t i = dataset_index(r.dataset);
        const std::size_t j = method_index(r.method);
        counts(i, j) += 1.0;
        for (const auto& name : kMetricNames) sums.at(name)(i, j) += r.metrics.get(name);
    }
    for (std::size_t i = 0; i < nd; ++i)
        for (std::size_t j = 0; j < nm; ++j)
            if (counts(i, j) == 0.0)
                throw std::invalid_argument("rank_table: missing cell (" + table.datasets[i] +
                                            ", " + table.methods[j] + ")");

    for (const auto& name : kMetricNames) {
        Matrix means(nd, nm);
        for (std::size_t i = 0; i < nd; ++i)
            for (std::size_t j = 0; j < nm; ++j) means(i, j) = sums.at(name)(i, j) / counts(i, j);
        std::vector<double> avg_rank(nm, 0.0);
        std::vector<double> row(nm);
        for (std::size_t i = 0; i < nd; ++i) {
            for (std::size_t j = 0; j < nm; ++j) row[j] = means(i, j);
            const auto ranks = midranks_descending(row);
            for (std::size_t j = 0; j < nm; ++j) avg_rank[j] += ranks[j];
        }
        for (auto& r : avg_rank) r /= static_cast<double>(nd);
        table.means.emplace(name, std::move(means));
        table.average_ranks.emplace(name, std::move(avg_rank));
    }
    return table;
}

std::string records_to_csv(const std::vector<EvalRecord>& records) {
    std::string out = "dataset,method,params,classifier,rep,fold";
    for (const auto& name : kMetricNames) out += "," + name;
    out += '\n';
    for (const auto& r : records) {
        out += r.dataset + ',' + r.method + ',' + r.params + ',' + r.classifier + ',' +
               std::to_string(r.repetition) + ',' + std::to_string(r.fold);
        for (const auto& name : kMetricNames) out += ',' + format_double(r.metrics.get(name));
        out += '\n';
    }
    return out;
}

std::vector<EvalRecord> parse_records_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("records: empty file");
    std::string expected = "dataset,method,params,classifier,rep,fold";
    for (const auto& name : kMetricNames) expected += "," + name;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != expected)
        throw std::invalid_argument("records: unexpected header '" + line + "'");

    std::vector<EvalRecord> records;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cur;
        for (char c : line) {
            if (c == ',') {
                cells.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        cells.push_back(cur);
        if (cells.size() != 6 + kMetricNames.size())
            throw ParseError(lineno, "records: wrong column count");
        EvalRecord r;
        r.dataset = cells[0];
        r.method = cells[1];
        r.params = cells[2];
        r.classifier = cells[3];
        try {
            r.repetition = std::stoul(cells[4]);
            r.fold = std::stoul(cells[5]);
            r.metrics.precision = std::stod(cells[6]);
            r.metrics.recall = std::stod(cells[7]);
            r.metrics.specificity = std::stod(cells[8]);
            r.metrics.auc = std::stod(cells[9]);
            r.metrics.f_measure = std::stod(cells[10]);
            r.metrics.g_mean = std::stod(cells[11]);
        } catch (const std::exception&) {
            throw ParseError(lineno, "records: malformed numeric field");
        }
        records.push_back(std::move(r));
    }
    return records;
}

} // namespace rbccr
