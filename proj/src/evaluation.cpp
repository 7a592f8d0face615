#include "roughteam/evaluation.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <numeric>
#include <sstream>

#include "roughteam/errors.hpp"
#include "roughteam/rules.hpp"
#include "text_util.hpp"

namespace roughteam {

namespace {

using detail::format_exact;
using detail::format_fixed;
using detail::split;
using detail::trim;

double percent(std::size_t part, std::size_t whole) {
    return 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

}  // namespace

MetricSet metrics(const ConfusionMatrix& matrix) {
    if (matrix.total() == 0) {
        throw validation_error("metrics need at least one counted object");
    }
    MetricSet scores;
    scores.accuracy = percent(matrix.tp + matrix.tn, matrix.total());
    if (matrix.tp + matrix.fp > 0) scores.precision = percent(matrix.tp, matrix.tp + matrix.fp);
    if (matrix.tp + matrix.fn > 0) scores.recall = percent(matrix.tp, matrix.tp + matrix.fn);
    if (matrix.tn + matrix.fn > 0) scores.npv = percent(matrix.tn, matrix.tn + matrix.fn);
    if (scores.precision && scores.recall && *scores.precision + *scores.recall > 0.0) {
        scores.f1 = 2.0 * *scores.precision * *scores.recall /
                    (*scores.precision + *scores.recall);
    }
    return scores;
}

std::vector<std::vector<std::size_t>> kfold_split(const DecisionTable& table, std::size_t k,
                                                  std::uint64_t seed, bool stratified) {
    const std::size_t n = table.object_count();
    if (k < 2 || k > n) {
        throw validation_error("fold count " + std::to_string(k) + " must lie in 2.." +
                               std::to_string(n));
    }
    RandomSource rng(seed);
    std::vector<std::vector<std::size_t>> folds(k);
    if (stratified) {
        // Deal each class round-robin with one pointer running across
        // classes, so per-class and total fold sizes both stay within one.
        std::vector<std::vector<std::size_t>> groups(table.schema().class_count());
        for (std::size_t id = 1; id <= n; ++id) groups[table.decision(id)].push_back(id);
        std::size_t pointer = 0;
        for (auto& group : groups) {
            rng.shuffle(group);
            for (const std::size_t id : group) folds[pointer++ % k].push_back(id);
        }
    } else {
        std::vector<std::size_t> ids(n);
        std::iota(ids.begin(), ids.end(), 1);
        rng.shuffle(ids);
        for (std::size_t i = 0; i < ids.size(); ++i) folds[i % k].push_back(ids[i]);
    }
    for (auto& fold : folds) std::sort(fold.begin(), fold.end());
    return folds;
}

std::string technique_name(Technique technique) {
    switch (technique) {
        case Technique::ja_rules: return "ja_rules";
        case Technique::ga_rules: return "ga_rules";
        case Technique::c45: return "c45";
        case Technique::logistic: return "logistic";
    }
    throw validation_error("unknown technique");
}

std::optional<Technique> technique_from_name(const std::string& name) {
    if (name == "ja_rules") return Technique::ja_rules;
    if (name == "ga_rules") return Technique::ga_rules;
    if (name == "c45") return Technique::c45;
    if (name == "logistic") return Technique::logistic;
    return std::nullopt;
}

namespace {

std::size_t resolve_positive_class(const AttributeSchema& schema,
                                   std::optional<std::size_t> requested) {
    if (schema.class_count() != 2) {
        throw validation_error("confusion-matrix evaluation needs a binary decision attribute");
    }
    const std::size_t positive = requested.value_or(schema.class_count() - 1);
    if (positive >= schema.class_count()) {
        throw validation_error("positive class index out of range");
    }
    return positive;
}

void count_prediction(ConfusionMatrix& matrix, std::optional<std::size_t> predicted,
                      std::size_t truth, std::size_t positive) {
    if (!predicted) {
        // Abstentions are charged as errors against the true class.
        if (truth == positive) {
            ++matrix.fn;
        } else {
            ++matrix.fp;
        }
        return;
    }
    if (*predicted == truth) {
        if (truth == positive) {
            ++matrix.tp;
        } else {
            ++matrix.tn;
        }
    } else if (*predicted == positive) {
        ++matrix.fp;
    } else {
        ++matrix.fn;
    }
}

InductionConfig induction_config(Technique technique, const EvaluationConfig& config) {
    InductionConfig out;
    out.scope = InductionScope::object_related;
    out.algorithm = technique == Technique::ga_rules ? InductionAlgorithm::genetic
                                                     : InductionAlgorithm::johnson;
    out.ga = config.ga;
    out.policies = config.policies;
    return out;
}

// A fold's trained classifier behind one call signature.
class FoldClassifier {
public:
    FoldClassifier(Technique technique, const DecisionTable& train,
                   const EvaluationConfig& config)
        : technique_(technique) {
        switch (technique) {
            case Technique::ja_rules:
            case Technique::ga_rules:
                rules_.emplace(induce_rules(train, induction_config(technique, config)));
                break;
            case Technique::c45:
                tree_.emplace(fit_c45(train, config.tree));
                break;
            case Technique::logistic:
                logistic_.emplace(fit_logistic(train, config.logistic));
                break;
        }
    }

    std::optional<std::size_t> predict(const TableRow& record) const {
        switch (technique_) {
            case Technique::ja_rules:
            case Technique::ga_rules: return classify(*rules_, record).decision;
            case Technique::c45: return predict_tree(*tree_, record);
            case Technique::logistic: return predict_logistic(*logistic_, record).class_index;
        }
        throw validation_error("unknown technique");
    }

private:
    Technique technique_;
    std::optional<RuleModel> rules_;
    std::optional<DecisionTree> tree_;
    std::optional<LogisticModel> logistic_;
};

std::optional<std::size_t> full_table_complexity(Technique technique, const DecisionTable& table,
                                                 const EvaluationConfig& config) {
    switch (technique) {
        case Technique::ja_rules:
        case Technique::ga_rules:
            return induce_rules(table, induction_config(technique, config)).rule_count();
        case Technique::c45: return rule_count(fit_c45(table, config.tree));
        case Technique::logistic: return std::nullopt;
    }
    throw validation_error("unknown technique");
}

}  // namespace

EvalReport cross_validate(Technique technique, const DecisionTable& table,
                          const EvaluationConfig& config) {
    const std::size_t positive = resolve_positive_class(table.schema(), config.positive_class);
    const auto folds = kfold_split(table, config.k, config.seed, config.stratified);

    EvalReport report;
    report.technique = technique_name(technique);
    report.n = table.object_count();
    report.k = config.k;
    report.seed = config.seed;
    report.stratified = config.stratified;
    report.positive_class = table.schema().class_name(positive);

    std::vector<bool> in_test(table.object_count() + 1);
    for (std::size_t f = 0; f < folds.size(); ++f) {
        std::fill(in_test.begin(), in_test.end(), false);
        for (const std::size_t id : folds[f]) in_test[id] = true;
        std::vector<std::size_t> train_ids;
        train_ids.reserve(table.object_count() - folds[f].size());
        for (std::size_t id = 1; id <= table.object_count(); ++id) {
            if (!in_test[id]) train_ids.push_back(id);
        }

        std::optional<FoldClassifier> classifier;
        try {
            classifier.emplace(technique, table.subset(train_ids), config);
        } catch (const validation_error& e) {
            throw validation_error("fold " + std::to_string(f + 1) + ": " + e.what());
        }

        std::size_t correct = 0;
        for (const std::size_t id : folds[f]) {
            const std::optional<std::size_t> predicted = classifier->predict(table.row(id));
            const std::size_t truth = table.decision(id);
            count_prediction(report.matrix, predicted, truth, positive);
            if (predicted && *predicted == truth) ++correct;
        }
        report.per_fold_accuracy.push_back(percent(correct, folds[f].size()));
    }

    report.scores = metrics(report.matrix);
    report.complexity = full_table_complexity(technique, table, config);
    return report;
}

EvalReport evaluate_model(const RuleModel& model, const DecisionTable& table,
                          std::optional<std::size_t> positive_class) {
    if (!(model.schema() == table.schema())) {
        throw validation_error("model and table schemas differ");
    }
    const std::size_t positive = resolve_positive_class(table.schema(), positive_class);

    EvalReport report;
    report.technique = "model";
    report.n = table.object_count();
    report.k = 0;
    report.seed = 0;
    report.stratified = false;
    report.positive_class = table.schema().class_name(positive);
    for (std::size_t id = 1; id <= table.object_count(); ++id) {
        const Classification result = classify(model, table.row(id));
        count_prediction(report.matrix, result.decision, table.decision(id), positive);
    }
    report.scores = metrics(report.matrix);
    report.complexity = model.rule_count();
    return report;
}

SelectionOutcome select_technique(const std::vector<TechniqueCandidate>& candidates,
                                  double benchmark) {
    if (candidates.empty()) {
        throw validation_error("technique selection needs at least one candidate");
    }
    for (const TechniqueCandidate& candidate : candidates) {
        if (candidate.accuracy < 0.0 || candidate.accuracy > 100.0) {
            throw validation_error("candidate '" + candidate.name +
                                   "' has an accuracy outside [0, 100]");
        }
    }

    // accuracy desc, then fewer rules (absent = worst), then name; total
    // order makes the outcome independent of input permutation.
    const auto better = [](const TechniqueCandidate& a, const TechniqueCandidate& b) {
        if (a.accuracy != b.accuracy) return a.accuracy > b.accuracy;
        const std::size_t ca = a.complexity.value_or(std::numeric_limits<std::size_t>::max());
        const std::size_t cb = b.complexity.value_or(std::numeric_limits<std::size_t>::max());
        if (ca != cb) return ca < cb;
        return a.name < b.name;
    };

    std::vector<TechniqueCandidate> survivors;
    std::vector<TechniqueCandidate> rejects;
    for (const TechniqueCandidate& candidate : candidates) {
        (candidate.accuracy >= benchmark ? survivors : rejects).push_back(candidate);
    }
    std::sort(survivors.begin(), survivors.end(), better);
    std::sort(rejects.begin(), rejects.end(), better);

    SelectionOutcome outcome;
    if (!survivors.empty()) outcome.accepted = survivors.front().name;
    for (std::size_t i = 0; i < survivors.size(); ++i) {
        const TechniqueCandidate& candidate = survivors[i];
        SelectionEntry entry{candidate, i == 0, ""};
        if (i == 0) {
            entry.reason = "accepted: best accuracy at or above the " +
                           format_fixed(benchmark, 2) + "% benchmark";
        } else if (candidate.accuracy != survivors.front().accuracy) {
            entry.reason = "rejected: lower accuracy than " + survivors.front().name;
        } else if (candidate.complexity != survivors.front().complexity) {
            entry.reason = "rejected: accuracy tied with " + survivors.front().name +
                           ", more rules";
        } else {
            entry.reason = "rejected: tied with " + survivors.front().name + ", later by name";
        }
        outcome.ranking.push_back(std::move(entry));
    }
    for (const TechniqueCandidate& candidate : rejects) {
        outcome.ranking.push_back(
            {candidate, false,
             "rejected: accuracy " + format_fixed(candidate.accuracy, 2) +
                 "% is below the " + format_fixed(benchmark, 2) + "% benchmark"});
    }
    return outcome;
}

namespace {

std::string metric_text(const std::optional<double>& value) {
    return value ? format_fixed(*value, 4) + "%" : "undefined";
}

std::string metric_kv(const std::optional<double>& value) {
    return value ? format_exact(*value) : "undefined";
}

}  // namespace

std::string format_report_text(const EvalReport& report) {
    std::ostringstream out;
    out << "technique: " << report.technique << '\n';
    out << "objects: " << report.n;
    if (report.k > 0) {
        out << "  folds: " << report.k << "  stratified: " << (report.stratified ? "yes" : "no")
            << "  seed: " << report.seed;
    }
    out << '\n';
    out << "positive class: " << report.positive_class << '\n';
    out << "confusion: tp=" << report.matrix.tp << " tn=" << report.matrix.tn
        << " fp=" << report.matrix.fp << " fn=" << report.matrix.fn << '\n';
    out << "accuracy: " << format_fixed(report.scores.accuracy, 4) << "%\n";
    out << "precision: " << metric_text(report.scores.precision) << '\n';
    out << "recall: " << metric_text(report.scores.recall) << '\n';
    out << "npv: " << metric_text(report.scores.npv) << '\n';
    out << "f1: " << metric_text(report.scores.f1) << '\n';
    if (report.complexity) {
        out << "complexity: " << *report.complexity << " rules\n";
    }
    if (!report.per_fold_accuracy.empty()) {
        out << "fold accuracies:";
        for (const double accuracy : report.per_fold_accuracy) {
            out << ' ' << format_fixed(accuracy, 4) << '%';
        }
        out << '\n';
    }
    return out.str();
}

std::string format_report_kv(const EvalReport& report) {
    std::ostringstream out;
    out << "technique=" << report.technique << '\n';
    out << "n=" << report.n << '\n';
    out << "k=" << report.k << '\n';
    out << "seed=" << report.seed << '\n';
    out << "stratified=" << (report.stratified ? "true" : "false") << '\n';
    out << "positive_class=" << report.positive_class << '\n';
    out << "tp=" << report.matrix.tp << '\n';
    out << "tn=" << report.matrix.tn << '\n';
    out << "fp=" << report.matrix.fp << '\n';
    out << "fn=" << report.matrix.fn << '\n';
    out << "accuracy=" << format_exact(report.scores.accuracy) << '\n';
    out << "precision=" << metric_kv(report.scores.precision) << '\n';
    out << "recall=" << metric_kv(report.scores.recall) << '\n';
    out << "npv=" << metric_kv(report.scores.npv) << '\n';
    out << "f1=" << metric_kv(report.scores.f1) << '\n';
    if (report.complexity) {
        out << "complexity=" << *report.complexity << '\n';
    }
    if (!report.per_fold_accuracy.empty()) {
        out << "fold_accuracies=";
        for (std::size_t i = 0; i < report.per_fold_accuracy.size(); ++i) {
            if (i > 0) out << ',';
            out << format_exact(report.per_fold_accuracy[i]);
        }
        out << '\n';
    }
    return out.str();
}

namespace {

std::size_t parse_count(const std::string& value, const std::string& key) {
    const auto parsed = detail::parse_integer(value);
    if (!parsed || *parsed < 0) {
        throw validation_error("bad report value " + key + "=" + value);
    }
    return static_cast<std::size_t>(*parsed);
}

std::optional<double> parse_metric(const std::string& value, const std::string& key) {
    if (value == "undefined") return std::nullopt;
    const auto parsed = detail::parse_double(value);
    if (!parsed) {
        throw validation_error("bad report value " + key + "=" + value);
    }
    return *parsed;
}

}  // namespace

EvalReport parse_report_kv(std::istream& in) {
    EvalReport report;
    std::string line;
    while (std::getline(in, line)) {
        const std::string content(trim(line));
        if (content.empty() || content.front() == '#') continue;
        const std::size_t eq = content.find('=');
        if (eq == std::string::npos) {
            throw validation_error("report line '" + content + "' is not key=value");
        }
        const std::string key(trim(content.substr(0, eq)));
        const std::string value(trim(content.substr(eq + 1)));
        if (key == "technique") {
            report.technique = value;
        } else if (key == "n") {
            report.n = parse_count(value, key);
        } else if (key == "k") {
            report.k = parse_count(value, key);
        } else if (key == "seed") {
            report.seed = static_cast<std::uint64_t>(parse_count(value, key));
        } else if (key == "stratified") {
            if (value != "true" && value != "false") {
                throw validation_error("bad report value stratified=" + value);
            }
            report.stratified = value == "true";
        } else if (key == "positive_class") {
            report.positive_class = value;
        } else if (key == "tp") {
            report.matrix.tp = parse_count(value, key);
        } else if (key == "tn") {
            report.matrix.tn = parse_count(value, key);
        } else if (key == "fp") {
            report.matrix.fp = parse_count(value, key);
        } else if (key == "fn") {
            report.matrix.fn = parse_count(value, key);
        } else if (key == "accuracy") {
            const auto parsed = parse_metric(value, key);
            if (!parsed) {
                throw validation_error("accuracy cannot be undefined");
            }
            report.scores.accuracy = *parsed;
        } else if (key == "precision") {
            report.scores.precision = parse_metric(value, key);
        } else if (key == "recall") {
            report.scores.recall = parse_metric(value, key);
        } else if (key == "npv") {
            report.scores.npv = parse_metric(value, key);
        } else if (key == "f1") {
            report.scores.f1 = parse_metric(value, key);
        } else if (key == "complexity") {
            report.complexity = parse_count(value, key);
        } else if (key == "fold_accuracies") {
            for (const auto& cell : split(value, ',')) {
                const auto parsed = detail::parse_double(cell);
                if (!parsed) {
                    throw validation_error("bad fold accuracy '" + cell + "'");
                }
                report.per_fold_accuracy.push_back(*parsed);
            }
        }
        // Unknown keys (version, config digest, ...) pass through silently so
        // full CLI output parses too.
    }
    return report;
}

EvalReport parse_report_kv(const std::string& text) {
    std::istringstream in(text);
    return parse_report_kv(in);
}

}  // namespace roughteam
