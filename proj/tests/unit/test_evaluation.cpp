#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "rbccr/evaluation.hpp"
#include "rbccr/random.hpp"

using namespace rbccr;

namespace {

// Two well-separated blobs (in both columns, so the separation survives
// per-column standardization); any sensible classifier scores perfectly.
Dataset separable_fixture(std::size_t n_min = 12, std::size_t n_maj = 24) {
    Rng rng(211);
    Dataset d;
    d.name = "separable";
    d.minority_label = "min";
    for (std::size_t i = 0; i < n_min + n_maj; ++i) {
        const bool minority = i < n_min;
        const double c = minority ? -8.0 : 8.0;
        d.features.append_row(std::vector<double>{c + 0.3 * rng.normal(),
                                                  c + 0.3 * rng.normal()});
        d.labels.push_back(minority ? "min" : "maj");
    }
    return d;
}

// Minority arc wrapping a tight majority core. Large sphere energies absorb
// every majority neighbor here, translating the core away and spreading
// synthetics over it, which visibly costs inner-fold AUC.
Dataset arc_fixture() {
    Rng rng(401);
    Dataset d;
    d.name = "arc";
    d.minority_label = "min";
    for (int i = 0; i < 9; ++i) {
        const double angle = M_PI / 2.0 + M_PI * i / 8.0;
        d.features.append_row(std::vector<double>{2.0 * std::cos(angle) + 0.05 * rng.normal(),
                                                  2.0 * std::sin(angle) + 0.05 * rng.normal()});
        d.labels.push_back("min");
    }
    for (int i = 0; i < 32; ++i) {
        d.features.append_row(std::vector<double>{0.2 * rng.normal(), 0.2 * rng.normal()});
        d.labels.push_back("maj");
    }
    return d;
}

// Balanced variant for exact-tie grid selection.
Dataset balanced_fixture() {
    Rng rng(223);
    Dataset d;
    d.name = "balanced";
    d.minority_label = "a";
    for (std::size_t i = 0; i < 24; ++i) {
        const bool first = i < 12;
        d.features.append_row(std::vector<double>{(first ? -5.0 : 5.0) + 0.4 * rng.normal(),
                                                  0.4 * rng.normal()});
        d.labels.push_back(first ? "a" : "b");
    }
    return d;
}

EvalRecord make_record(const std::string& dataset, const std::string& method, double g_mean,
                       std::size_t rep = 0, std::size_t fold = 0) {
    EvalRecord r;
    r.dataset = dataset;
    r.method = method;
    r.params = "-";
    r.classifier = "knn";
    r.repetition = rep;
    r.fold = fold;
    r.metrics.g_mean = g_mean;
    r.metrics.precision = g_mean;
    r.metrics.recall = g_mean;
    r.metrics.specificity = g_mean;
    r.metrics.auc = g_mean;
    r.metrics.f_measure = g_mean;
    return r;
}

} // namespace

TEST_CASE("run_cv produces 10 perfect records on a separable fixture") {
    const Dataset d = separable_fixture();
    MethodGrid grid;
    grid.method = ResampleMethod::none;
    ClassifierSpec clf;
    clf.kind = ClassifierKind::knn;
    CVPlan plan;
    plan.master_seed = 99;

    const auto records = run_cv(d, grid, clf, plan);
    REQUIRE(records.size() == 10);
    for (const auto& r : records) {
        CHECK(r.dataset == "separable");
        CHECK(r.method == "none");
        CHECK(r.metrics.precision == 1.0);
        CHECK(r.metrics.recall == 1.0);
        CHECK(r.metrics.specificity == 1.0);
        CHECK(r.metrics.auc == 1.0);
        CHECK(r.metrics.g_mean == 1.0);
    }
}

TEST_CASE("run_cv is deterministic in the master seed") {
    const Dataset d = arc_fixture();
    MethodGrid grid = MethodGrid::defaults(ResampleMethod::ccr);
    ClassifierSpec clf;
    CVPlan plan;
    plan.master_seed = 1234;
    const auto a = run_cv(d, grid, clf, plan);
    const auto b = run_cv(d, grid, clf, plan);
    CHECK(records_to_csv(a) == records_to_csv(b));

    plan.master_seed = 1235;
    const auto c = run_cv(d, grid, clf, plan);
    CHECK(records_to_csv(a) != records_to_csv(c));
}

TEST_CASE("select_inner picks the planted winner") {
    // On the arc fixture an oversized energy (absorbing every neighbor)
    // costs inner AUC, while a small one keeps the folds clean. The better
    // config sits second in the grid, so first-index bias would fail here.
    const Dataset d = arc_fixture();
    const auto [std_d, params] = standardize(d);
    std::vector<ResamplerConfig> configs(2);
    configs[0].method = ResampleMethod::ccr;
    configs[0].energy = 32.0;
    configs[1].method = ResampleMethod::ccr;
    configs[1].energy = 0.25;
    ClassifierSpec clf;
    CVPlan plan;
    plan.master_seed = 12;
    const std::size_t winner = select_inner(std_d, configs, clf, plan, d.name, 0, 0);
    CHECK(winner == 1);
}

TEST_CASE("select_inner breaks exact ties toward the first entry") {
    // Balanced data: zero deficit, no synthetics, identical outputs for both
    // configs regardless of their seeds.
    const Dataset d = balanced_fixture();
    const auto [std_d, params] = standardize(d);
    std::vector<ResamplerConfig> configs(2);
    configs[0].method = ResampleMethod::ccr;
    configs[0].energy = 2.0;
    configs[1].method = ResampleMethod::ccr;
    configs[1].energy = 2.0;
    ClassifierSpec clf;
    CVPlan plan;
    plan.master_seed = 6;
    CHECK(select_inner(std_d, configs, clf, plan, d.name, 0, 0) == 0);

    CHECK(select_inner(std_d, {configs[0]}, clf, plan, d.name, 0, 0) == 0);
}

TEST_CASE("fold training lineage never touches the test half") {
    const Dataset d = separable_fixture(12, 36);
    CVPlan plan;
    plan.master_seed = 31;
    ClassifierSpec clf;
    for (auto method : {ResampleMethod::rus, ResampleMethod::smote, ResampleMethod::rb_ccr}) {
        MethodGrid grid;
        grid.method = method;
        if (method == ResampleMethod::rb_ccr) {
            grid.energies = {1.0};
            grid.gammas = {1.0};
            grid.regions = {SamplingRegion::H};
        }
        for (std::size_t rep = 0; rep < 2; ++rep) {
            const auto splits = stratified_kfold(
                d, CVPlan::outer_folds,
                derive_seed(plan.master_seed, d.name, std::string_view("outer"), rep));
            for (std::size_t fold = 0; fold < 2; ++fold) {
                const auto outcome = run_fold(d, grid, clf, plan, rep, fold, splits[fold]);
                const std::set<std::size_t> test_rows(splits[fold].test.begin(),
                                                      splits[fold].test.end());
                CHECK(!outcome.training_lineage.empty());
                for (auto row : outcome.training_lineage) CHECK(test_rows.count(row) == 0);
            }
        }
    }
}

TEST_CASE("run_benchmark yields the full record grid at any job count") {
    BenchmarkSpec spec;
    spec.datasets = {separable_fixture(), balanced_fixture()};
    spec.methods = {MethodGrid::defaults(ResampleMethod::none),
                    MethodGrid::defaults(ResampleMethod::ros)};
    spec.classifiers = {ClassifierSpec{ClassifierKind::knn},
                        ClassifierSpec{ClassifierKind::gnb}};
    spec.plan.master_seed = 2024;
    spec.plan.jobs = 1;
    const auto sequential = run_benchmark(spec);
    CHECK(sequential.failures.empty());
    CHECK(sequential.records.size() == 2 * 2 * 2 * 10);

    spec.plan.jobs = 4;
    const auto parallel = run_benchmark(spec);
    CHECK(records_to_csv(sequential.records) == records_to_csv(parallel.records));
}

TEST_CASE("run_benchmark skips failing datasets with a diagnostic") {
    Dataset tiny;
    tiny.name = "too-small";
    tiny.minority_label = "m";
    tiny.features = Matrix::from_rows({{0.0}, {1.0}, {2.0}, {3.0}});
    tiny.labels = {"m", "M", "M", "M"};  // one minority row: stratified 2-fold impossible

    BenchmarkSpec spec;
    spec.datasets = {tiny, separable_fixture()};
    spec.methods = {MethodGrid::defaults(ResampleMethod::none)};
    spec.classifiers = {ClassifierSpec{ClassifierKind::knn}};
    spec.plan.master_seed = 77;
    const auto result = run_benchmark(spec);
    REQUIRE(result.failures.size() == 1);
    CHECK(result.failures[0].find("too-small") != std::string::npos);
    CHECK(result.records.size() == 10);
    for (const auto& r : result.records) CHECK(r.dataset == "separable");
}

TEST_CASE("rank_table ranks and averages") {
    std::vector<EvalRecord> records;
    SUBCASE("dominant method earns rank 1 everywhere") {
        for (const std::string dataset : {"d1", "d2", "d3"}) {
            records.push_back(make_record(dataset, "A", 0.9));
            records.push_back(make_record(dataset, "B", 0.5));
        }
        const auto table = rank_table(records);
        CHECK(table.average_ranks.at("g_mean") == std::vector<double>{1.0, 2.0});
        CHECK(table.means.at("g_mean")(0, 0) == 0.9);
    }
    SUBCASE("exact ties share midranks") {
        for (const std::string dataset : {"d1", "d2"}) {
            records.push_back(make_record(dataset, "A", 0.7));
            records.push_back(make_record(dataset, "B", 0.7));
        }
        const auto table = rank_table(records);
        CHECK(table.average_ranks.at("auc") == std::vector<double>{1.5, 1.5});
    }
    SUBCASE("three methods match a hand ranking") {
        // d1: A > B > C; d2: B > C > A -> avg ranks A 2.0, B 1.5, C 2.5.
        records.push_back(make_record("d1", "A", 0.9));
        records.push_back(make_record("d1", "B", 0.8));
        records.push_back(make_record("d1", "C", 0.7));
        records.push_back(make_record("d2", "A", 0.1));
        records.push_back(make_record("d2", "B", 0.9));
        records.push_back(make_record("d2", "C", 0.5));
        const auto table = rank_table(records);
        CHECK(table.average_ranks.at("g_mean") == std::vector<double>{2.0, 1.5, 2.5});
    }
    SUBCASE("missing cells are rejected") {
        records.push_back(make_record("d1", "A", 0.9));
        records.push_back(make_record("d1", "B", 0.5));
        records.push_back(make_record("d2", "A", 0.9));
        CHECK_THROWS_AS(rank_table(records), std::invalid_argument);
    }
    SUBCASE("fold records of one pair average into the mean") {
        records.push_back(make_record("d1", "A", 0.4, 0, 0));
        records.push_back(make_record("d1", "A", 0.8, 0, 1));
        records.push_back(make_record("d1", "B", 0.5, 0, 0));
        const auto table = rank_table(records);
        CHECK(table.means.at("g_mean")(0, 0) == doctest::Approx(0.6).epsilon(1e-15));
    }
}

TEST_CASE("records CSV round-trips") {
    std::vector<EvalRecord> records;
    records.push_back(make_record("d1", "rb-ccr", 0.875, 2, 1));
    records.back().params = "energy=5;gamma=1;region=H";
    records.push_back(make_record("d2", "none", 0.25, 0, 0));
    const std::string csv = records_to_csv(records);
    const auto back = parse_records_csv(csv);
    REQUIRE(back.size() == 2);
    CHECK(back[0].dataset == "d1");
    CHECK(back[0].method == "rb-ccr");
    CHECK(back[0].params == "energy=5;gamma=1;region=H");
    CHECK(back[0].repetition == 2);
    CHECK(back[0].fold == 1);
    CHECK(back[0].metrics.g_mean == 0.875);
    CHECK(records_to_csv(back) == csv);

    CHECK_THROWS(parse_records_csv("not,a,records,file\n"));
}
