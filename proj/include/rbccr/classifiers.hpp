#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rbccr/matrix.hpp"

namespace rbccr {

enum class ClassifierKind { knn, gnb, logreg };

std::string to_string(ClassifierKind kind);
ClassifierKind classifier_from_string(const std::string& s);

struct ClassifierSpec {
    ClassifierKind kind = ClassifierKind::knn;
    std::size_t k = 5;              // knn
    double learning_rate = 0.1;     // logreg
    std::size_t iterations = 1000;  // logreg
};

// Fitted model. Scores are minority-class probability estimates in [0, 1]:
// knn reports the minority fraction among the k nearest training rows, gnb
// the minority posterior, logreg the sigmoid output.
struct TrainedModel {
    ClassifierSpec spec;

    // knn
    Matrix train_features;
    std::vector<int> train_labels;

    // gnb (index 0 = majority, 1 = minority)
    Matrix class_means;      // 2 x m
    Matrix class_variances;  // 2 x m
    double log_prior[2] = {0.0, 0.0};

    // logreg
    std::vector<double> weights;
    double bias = 0.0;
};

// Labels are 1 for minority, 0 for majority; both classes must be present.
TrainedModel fit(const ClassifierSpec& spec, const Matrix& features,
                 const std::vector<int>& labels);

std::vector<double> predict_scores(const TrainedModel& model, const Matrix& features);

// label = minority iff score >= threshold.
std::vector<int> predict_labels(const TrainedModel& model, const Matrix& features,
                                double threshold = 0.5);

// Log-loss gradient at (weights, bias); exposed for the finite-difference
// check on the logistic regression trainer.
std::vector<double> logreg_gradient(const Matrix& features, const std::vector<int>& labels,
                                    const std::vector<double>& weights, double bias);

} // namespace rbccr
