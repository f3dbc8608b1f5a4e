#include <doctest.h>

#include "rbccr/config.hpp"

using namespace rbccr;

TEST_CASE("benchmark config parses sections and global keys") {
    const char* text =
        "# campaign\n"
        "seed = 42\n"
        "standardization = full\n"
        "classifiers = knn, gnb\n"
        "datasets = a.dat, b.dat\n"
        "format = keel\n"
        "output_dir = out\n"
        "\n"
        "[method none]\n"
        "[method smote]\n"
        "k = 1, 3\n"
        "[method rb-ccr]\n"
        "label = rb-ccr-H\n"
        "energy = 0.5, 1.0\n"
        "gamma = 1.0\n"
        "region = H\n"
        "candidates = 50\n";
    const auto config = BenchmarkConfig::parse(text);
    CHECK(config.master_seed == 42);
    CHECK(config.standardize_on_full);
    REQUIRE(config.classifiers.size() == 2);
    CHECK(config.classifiers[1].kind == ClassifierKind::gnb);
    CHECK(config.dataset_patterns == std::vector<std::string>{"a.dat", "b.dat"});
    CHECK(config.output_dir == "out");
    REQUIRE(config.methods.size() == 3);
    CHECK(config.methods[0].method == ResampleMethod::none);
    CHECK(config.methods[1].k_values == std::vector<std::size_t>{1, 3});
    const auto& rb = config.methods[2];
    CHECK(rb.display_label() == "rb-ccr-H");
    CHECK(rb.energies == std::vector<double>{0.5, 1.0});
    CHECK(rb.regions == std::vector<SamplingRegion>{SamplingRegion::H});
    CHECK(rb.candidates == 50);
    CHECK(rb.expand().size() == 2);
}

TEST_CASE("benchmark config defaults to the protocol grids") {
    const auto config = BenchmarkConfig::parse("datasets = x.dat\n[method rb-ccr]\n");
    REQUIRE(config.methods.size() == 1);
    const auto& grid = config.methods[0];
    CHECK(grid.energies ==
          std::vector<double>{0.5, 1.0, 2.5, 5.0, 10.0, 25.0, 50.0, 100.0});
    CHECK(grid.gammas == std::vector<double>{0.5, 1.0, 2.5, 5.0, 10.0});
    CHECK(grid.regions.size() == 4);
    CHECK(grid.expand().size() == 8 * 5 * 4);
    // Fallback classifier.
    REQUIRE(config.classifiers.size() == 1);
    CHECK(config.classifiers[0].kind == ClassifierKind::knn);
}

TEST_CASE("benchmark config rejects malformed input") {
    CHECK_THROWS_AS(BenchmarkConfig::parse("datasets = x.dat\n[method warp]\n"), ParseError);
    CHECK_THROWS_AS(BenchmarkConfig::parse("mystery = 1\ndatasets = x.dat\n[method none]\n"),
                    ParseError);
    CHECK_THROWS_AS(BenchmarkConfig::parse("[method none]\n"), ParseError);  // no datasets
    CHECK_THROWS_AS(BenchmarkConfig::parse("datasets = x.dat\n"), ParseError);  // no methods
    CHECK_THROWS_AS(BenchmarkConfig::parse("datasets = x.dat\nseed = banana\n[method none]\n"),
                    ParseError);
    CHECK_THROWS_AS(
        BenchmarkConfig::parse("datasets = x.dat\n[method smote]\nk = 0\n"), ParseError);
    // Grid values are validated before any dataset work starts.
    CHECK_THROWS_AS(
        BenchmarkConfig::parse("datasets = x.dat\n[method ccr]\nenergy = -1\n"), ParseError);
    CHECK_THROWS_AS(
        BenchmarkConfig::parse("datasets = x.dat\n[method rb-ccr]\ngamma = 0\n"), ParseError);
}
