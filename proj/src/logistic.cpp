#include "roughteam/logistic.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <ostream>
#include <sstream>

#include "roughteam/errors.hpp"
#include "text_util.hpp"

namespace roughteam {

namespace {

// Coefficients past this magnitude mean the odds are beyond e^30; with
// integer-coded categorical predictors that only happens when the classes are
// perfectly separable and the MLE runs away.
constexpr double kSeparationBound = 30.0;

double predictor_code(const TableRow& row, std::size_t attribute) {
    return static_cast<double>(row.values[attribute]) + 1.0;
}

double linear_predictor(const TableRow& row, std::span<const double> beta) {
    double eta = beta[0];
    for (std::size_t a = 0; a + 1 < beta.size(); ++a) {
        eta += beta[a + 1] * predictor_code(row, a);
    }
    return eta;
}

// log(1 + e^eta) without overflow.
double softplus(double eta) {
    if (eta > 0) return eta + std::log1p(std::exp(-eta));
    return std::log1p(std::exp(eta));
}

double sigmoid(double eta) {
    if (eta >= 0) return 1.0 / (1.0 + std::exp(-eta));
    const double e = std::exp(eta);
    return e / (1.0 + e);
}

void check_binary(const DecisionTable& table) {
    if (table.schema().class_count() != 2) {
        throw validation_error("logistic regression needs a binary decision attribute, got " +
                               std::to_string(table.schema().class_count()) + " classes");
    }
}

void check_beta(const DecisionTable& table, std::span<const double> beta) {
    if (beta.size() != table.schema().attribute_count() + 1) {
        throw validation_error("expected " +
                               std::to_string(table.schema().attribute_count() + 1) +
                               " coefficients (intercept first), got " +
                               std::to_string(beta.size()));
    }
}

}  // namespace

double logistic_log_likelihood(const DecisionTable& table, std::span<const double> beta) {
    check_binary(table);
    check_beta(table, beta);
    double ll = 0.0;
    for (std::size_t id = 1; id <= table.object_count(); ++id) {
        const TableRow& row = table.row(id);
        const double eta = linear_predictor(row, beta);
        ll += static_cast<double>(row.decision) * eta - softplus(eta);
    }
    return ll;
}

std::vector<double> logistic_score(const DecisionTable& table, std::span<const double> beta) {
    check_binary(table);
    check_beta(table, beta);
    std::vector<double> score(beta.size(), 0.0);
    for (std::size_t id = 1; id <= table.object_count(); ++id) {
        const TableRow& row = table.row(id);
        const double residual = static_cast<double>(row.decision) -
                                sigmoid(linear_predictor(row, beta));
        score[0] += residual;
        for (std::size_t a = 0; a + 1 < beta.size(); ++a) {
            score[a + 1] += residual * predictor_code(row, a);
        }
    }
    return score;
}

LogisticModel fit_logistic(const DecisionTable& table, const LogisticConfig& config) {
    check_binary(table);
    const std::size_t d = table.schema().attribute_count();
    const std::size_t n = table.object_count();
    if (n < d + 1) {  // intercept plus one coefficient per predictor
        throw validation_error("logistic regression needs more objects than predictors");
    }
    if (config.threshold <= 0.0 || config.threshold >= 1.0) {
        throw validation_error("classification threshold must lie strictly between 0 and 1");
    }

    LogisticModel model{table.schema()};
    model.threshold = config.threshold;
    model.coefficients.assign(d, 0.0);

    std::vector<double> beta(d + 1, 0.0);
    double ll = logistic_log_likelihood(table, beta);
    model.log_likelihood_history.push_back(ll);

    for (std::size_t iteration = 1; iteration <= config.max_iterations; ++iteration) {
        Eigen::VectorXd gradient = Eigen::VectorXd::Zero(d + 1);
        Eigen::MatrixXd hessian = Eigen::MatrixXd::Zero(d + 1, d + 1);
        Eigen::VectorXd x(d + 1);
        for (std::size_t id = 1; id <= n; ++id) {
            const TableRow& row = table.row(id);
            x(0) = 1.0;
            for (std::size_t a = 0; a < d; ++a) x(a + 1) = predictor_code(row, a);
            const double p = sigmoid(linear_predictor(row, beta));
            gradient += (static_cast<double>(row.decision) - p) * x;
            hessian += p * (1.0 - p) * x * x.transpose();
        }

        Eigen::VectorXd delta = hessian.ldlt().solve(gradient);
        if (!delta.allFinite()) {
            hessian.diagonal().array() += 1e-8;
            delta = hessian.ldlt().solve(gradient);
            if (!delta.allFinite()) break;
        }

        // Step halving keeps the likelihood climb monotone even when the full
        // Newton step overshoots.
        std::vector<double> candidate(beta.size());
        double step = 1.0;
        double candidate_ll;
        for (;;) {
            for (std::size_t j = 0; j < beta.size(); ++j) candidate[j] = beta[j] + step * delta(j);
            candidate_ll = logistic_log_likelihood(table, candidate);
            if (candidate_ll >= ll - 1e-12 || step < 1e-10) break;
            step /= 2.0;
        }

        double max_abs = 0.0;
        for (const double b : candidate) max_abs = std::max(max_abs, std::abs(b));
        if (max_abs > kSeparationBound) {
            model.separated = true;
            break;  // keep the last stable coefficients
        }

        const double change = std::abs(candidate_ll - ll);
        beta = candidate;
        ll = candidate_ll;
        model.iterations = iteration;
        model.log_likelihood_history.push_back(ll);
        if (change < config.tolerance) {
            model.converged = true;
            break;
        }
    }

    model.intercept = beta[0];
    for (std::size_t a = 0; a < d; ++a) model.coefficients[a] = beta[a + 1];
    return model;
}

LogisticPrediction predict_logistic(const LogisticModel& model, const TableRow& record) {
    if (record.values.size() != model.schema.attribute_count()) {
        throw validation_error("record has " + std::to_string(record.values.size()) +
                               " values, model expects " +
                               std::to_string(model.schema.attribute_count()));
    }
    double eta = model.intercept;
    for (std::size_t a = 0; a < model.coefficients.size(); ++a) {
        eta += model.coefficients[a] * predictor_code(record, a);
    }
    LogisticPrediction prediction;
    prediction.probability = sigmoid(eta);
    prediction.class_index = prediction.probability >= model.threshold ? 1 : 0;
    return prediction;
}

void write_logistic(std::ostream& out, const LogisticModel& model) {
    out << "intercept:" << detail::format_exact(model.intercept) << '\n';
    for (std::size_t a = 0; a < model.coefficients.size(); ++a) {
        out << model.schema.condition(a).name << ':' << detail::format_exact(model.coefficients[a])
            << '\n';
    }
}

std::string logistic_to_text(const LogisticModel& model) {
    std::ostringstream out;
    write_logistic(out, model);
    return out.str();
}

}  // namespace roughteam
