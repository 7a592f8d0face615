#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "roughteam/table.hpp"

namespace roughteam {

struct LogisticConfig {
    std::size_t max_iterations = 100;
    double tolerance = 1e-8;  // convergence on log-likelihood change
    double threshold = 0.5;
};

/// Binary logit ln(p/(1-p)) = A + sum B_i X_i. Predictors enter as the
/// schema's integer codes (value index + 1); the outcome is the second
/// decision class. Fitted models are immutable and safe to share.
struct LogisticModel {
    explicit LogisticModel(AttributeSchema s) : schema(std::move(s)) {}

    AttributeSchema schema;
    double intercept = 0.0;
    std::vector<double> coefficients;  // one per condition attribute
    double threshold = 0.5;

    bool converged = false;
    bool separated = false;  // perfect separation detected; last stable fit kept
    std::size_t iterations = 0;
    std::vector<double> log_likelihood_history;  // one value per iteration, non-decreasing
};

/// Newton ascent with step halving on the binomial log-likelihood. Requires a
/// binary decision attribute and more objects than predictors (the intercept
/// is a fitted parameter too). Non-convergence and perfect separation are
/// reported in the model, never silent.
LogisticModel fit_logistic(const DecisionTable& table, const LogisticConfig& config = {});

struct LogisticPrediction {
    std::size_t class_index = 0;
    double probability = 0.0;  // P(second class)
};

LogisticPrediction predict_logistic(const LogisticModel& model, const TableRow& record);

/// Log-likelihood and score at arbitrary coefficients ([0] = intercept),
/// exposed for the finite-difference oracle.
double logistic_log_likelihood(const DecisionTable& table, std::span<const double> beta);
std::vector<double> logistic_score(const DecisionTable& table, std::span<const double> beta);

/// `intercept:<value>` then one `name:coefficient` line per predictor.
void write_logistic(std::ostream& out, const LogisticModel& model);
std::string logistic_to_text(const LogisticModel& model);

}  // namespace roughteam
