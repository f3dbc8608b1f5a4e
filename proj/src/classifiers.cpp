#include "rbccr/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rbccr/ccr_core.hpp"

namespace rbccr {

std::string to_string(ClassifierKind kind) {
    switch (kind) {
        case ClassifierKind::knn: return "knn";
        case ClassifierKind::gnb: return "gnb";
        case ClassifierKind::logreg: return "logreg";
    }
    return "?";
}

ClassifierKind classifier_from_string(const std::string& s) {
    if (s == "knn") return ClassifierKind::knn;
    if (s == "gnb") return ClassifierKind::gnb;
    if (s == "logreg" || s == "lr") return ClassifierKind::logreg;
    throw std::invalid_argument("unknown classifier '" + s + "'");
}

namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

void fit_gnb(TrainedModel& model, const Matrix& x, const std::vector<int>& y) {
    const std::size_t m = x.cols();
    model.class_means = Matrix(2, m, 0.0);
    model.class_variances = Matrix(2, m, 0.0);
    std::size_t counts[2] = {0, 0};
    for (std::size_t i = 0; i < x.rows(); ++i) {
        const int c = y[i];
        ++counts[c];
        for (std::size_t j = 0; j < m; ++j) model.class_means(c, j) += x(i, j);
    }
    for (int c = 0; c < 2; ++c)
        for (std::size_t j = 0; j < m; ++j)
            model.class_means(c, j) /= static_cast<double>(counts[c]);
    for (std::size_t i = 0; i < x.rows(); ++i) {
        const int c = y[i];
        for (std::size_t j = 0; j < m; ++j) {
            const double dev = x(i, j) - model.class_means(c, j);
            model.class_variances(c, j) += dev * dev;
        }
    }
    double max_var = 0.0;
    for (int c = 0; c < 2; ++c)
        for (std::size_t j = 0; j < m; ++j) {
            model.class_variances(c, j) /= static_cast<double>(counts[c]);
            max_var = std::max(max_var, model.class_variances(c, j));
        }
    const double floor = std::max(1e-9 * max_var, 1e-12);
    for (int c = 0; c < 2; ++c)
        for (std::size_t j = 0; j < m; ++j)
            model.class_variances(c, j) = std::max(model.class_variances(c, j), floor);
    for (int c = 0; c < 2; ++c)
        model.log_prior[c] =
            std::log(static_cast<double>(counts[c]) / static_cast<double>(x.rows()));
}

void fit_logreg(TrainedModel& model, const Matrix& x, const std::vector<int>& y) {
    const std::size_t m = x.cols();
    model.weights.assign(m, 0.0);
    model.bias = 0.0;
    for (std::size_t it = 0; it < model.spec.iterations; ++it) {
        const auto grad = logreg_gradient(x, y, model.weights, model.bias);
        for (std::size_t j = 0; j < m; ++j)
            model.weights[j] -= model.spec.learning_rate * grad[j];
        model.bias -= model.spec.learning_rate * grad[m];
    }
}

} // namespace

std::vector<double> logreg_gradient(const Matrix& features, const std::vector<int>& labels,
                                    const std::vector<double>& weights, double bias) {
    const std::size_t n = features.rows(), m = features.cols();
    std::vector<double> grad(m + 1, 0.0);  // last entry is the bias gradient
    for (std::size_t i = 0; i < n; ++i) {
        double z = bias;
        for (std::size_t j = 0; j < m; ++j) z += weights[j] * features(i, j);
        const double err = sigmoid(z) - static_cast<double>(labels[i]);
        for (std::size_t j = 0; j < m; ++j) grad[j] += err * features(i, j);
        grad[m] += err;
    }
    for (auto& g : grad) g /= static_cast<double>(n);
    return grad;
}

TrainedModel fit(const ClassifierSpec& spec, const Matrix& features,
                 const std::vector<int>& labels) {
    if (features.rows() != labels.size())
        throw std::invalid_argument("fit: feature/label count mismatch");
    std::size_t minority = 0;
    for (int l : labels) {
        if (l != 0 && l != 1) throw std::invalid_argument("fit: labels must be 0 or 1");
        minority += static_cast<std::size_t>(l);
    }
    if (minority == 0 || minority == labels.size())
        throw std::invalid_argument("fit: single-class training data");

    TrainedModel model;
    model.spec = spec;
    switch (spec.kind) {
        case ClassifierKind::knn:
            if (spec.k < 1) throw std::invalid_argument("fit: knn k must be >= 1");
            model.train_features = features;
            model.train_labels = labels;
            break;
        case ClassifierKind::gnb:
            fit_gnb(model, features, labels);
            break;
        case ClassifierKind::logreg:
            fit_logreg(model, features, labels);
            break;
    }
    return model;
}

std::vector<double> predict_scores(const TrainedModel& model, const Matrix& features) {
    const std::size_t n = features.rows();
    std::vector<double> scores(n, 0.0);
    switch (model.spec.kind) {
        case ClassifierKind::knn: {
            if (features.cols() != model.train_features.cols())
                throw std::invalid_argument("predict: dimension mismatch");
            const std::size_t k = std::min(model.spec.k, model.train_features.rows());
            for (std::size_t i = 0; i < n; ++i) {
                auto d = distances_to_rows(features.row(i), model.train_features);
                const auto order = stable_sort_by_distance(d);
                std::size_t hits = 0;
                for (std::size_t j = 0; j < k; ++j)
                    hits += static_cast<std::size_t>(model.train_labels[order[j]]);
                scores[i] = static_cast<double>(hits) / static_cast<double>(k);
            }
            break;
        }
        case ClassifierKind::gnb: {
            if (features.cols() != model.class_means.cols())
                throw std::invalid_argument("predict: dimension mismatch");
            const std::size_t m = features.cols();
            for (std::size_t i = 0; i < n; ++i) {
                double log_like[2];
                for (int c = 0; c < 2; ++c) {
                    double ll = model.log_prior[c];
                    for (std::size_t j = 0; j < m; ++j) {
                        const double var = model.class_variances(c, j);
                        const double dev = features(i, j) - model.class_means(c, j);
                        ll += -0.5 * std::log(2.0 * M_PI * var) - dev * dev / (2.0 * var);
                    }
                    log_like[c] = ll;
                }
                const double mx = std::max(log_like[0], log_like[1]);
                const double e0 = std::exp(log_like[0] - mx);
                const double e1 = std::exp(log_like[1] - mx);
                scores[i] = e1 / (e0 + e1);
            }
            break;
        }
        case ClassifierKind::logreg: {
            if (features.cols() != model.weights.size())
                throw std::invalid_argument("predict: dimension mismatch");
            for (std::size_t i = 0; i < n; ++i) {
                double z = model.bias;
                for (std::size_t j = 0; j < features.cols(); ++j)
                    z += model.weights[j] * features(i, j);
                scores[i] = sigmoid(z);
            }
            break;
        }
    }
    return scores;
}

std::vector<int> predict_labels(const TrainedModel& model, const Matrix& features,
                                double threshold) {
    const auto scores = predict_scores(model, features);
    std::vector<int> labels(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) labels[i] = scores[i] >= threshold ? 1 : 0;
    return labels;
}

} // namespace rbccr
