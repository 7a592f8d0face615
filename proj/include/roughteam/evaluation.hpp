#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "roughteam/logistic.hpp"
#include "roughteam/roughset.hpp"
#include "roughteam/table.hpp"
#include "roughteam/tree.hpp"

namespace roughteam {

/// Binary confusion counts; the positive class is "effective" in the team
/// schema (generally: the schema's second class, overridable).
struct ConfusionMatrix {
    std::size_t tp = 0;
    std::size_t tn = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;

    std::size_t total() const { return tp + tn + fp + fn; }

    bool operator==(const ConfusionMatrix&) const = default;
};

/// Percentages. A ratio with zero denominator is undefined (empty optional),
/// which is distinct from 0.
struct MetricSet {
    double accuracy = 0.0;
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> npv;
    std::optional<double> f1;

    bool operator==(const MetricSet&) const = default;
};

/// Accuracy, precision, recall, NPV, and F1 = 2PR/(P+R). F1 is undefined when
/// precision or recall is, or when both are zero. Requires total >= 1.
MetricSet metrics(const ConfusionMatrix& matrix);

struct EvalReport {
    std::string technique;
    ConfusionMatrix matrix;
    MetricSet scores;
    std::optional<std::size_t> complexity;   // rule/leaf count; absent for logistic
    std::vector<double> per_fold_accuracy;   // percentages; empty outside CV
    std::size_t n = 0;
    std::size_t k = 0;  // 0 outside CV
    std::uint64_t seed = 0;
    bool stratified = true;
    std::string positive_class;

    bool operator==(const EvalReport&) const = default;
};

/// Disjoint, exhaustive folds of 1-based object ids with sizes differing by
/// at most one; stratified mode additionally keeps each class's fold counts
/// within one of proportional. Deterministic per seed.
std::vector<std::vector<std::size_t>> kfold_split(const DecisionTable& table, std::size_t k,
                                                  std::uint64_t seed, bool stratified);

enum class Technique { ja_rules, ga_rules, c45, logistic };

std::string technique_name(Technique technique);
std::optional<Technique> technique_from_name(const std::string& name);

struct EvaluationConfig {
    std::size_t k = 10;
    std::uint64_t seed = kDefaultSeed;
    bool stratified = true;
    GAParams ga;
    RulePolicies policies;
    TreeParams tree;
    LogisticConfig logistic;
    /// Class treated as positive; default = last schema class ("effective").
    std::optional<std::size_t> positive_class;
};

/// k-fold cross-validation with one pooled confusion matrix (fold totals add
/// to n). Abstentions count as errors against the true class. The complexity
/// column is the rule/leaf count of a model fit on the full table.
EvalReport cross_validate(Technique technique, const DecisionTable& table,
                          const EvaluationConfig& config);

/// Apply an existing rule model to a labeled table (no folds); abstentions
/// count as errors as above.
EvalReport evaluate_model(const RuleModel& model, const DecisionTable& table,
                          std::optional<std::size_t> positive_class = {});

struct TechniqueCandidate {
    std::string name;
    double accuracy = 0.0;  // percentage
    std::optional<std::size_t> complexity;

    bool operator==(const TechniqueCandidate&) const = default;
};

struct SelectionEntry {
    TechniqueCandidate candidate;
    bool accepted = false;
    std::string reason;
};

struct SelectionOutcome {
    std::optional<std::string> accepted;
    std::vector<SelectionEntry> ranking;  // accuracy order, rejects last
};

/// Selection procedure: drop candidates under the benchmark, take the
/// highest accuracy among the rest, break exact ties by fewer rules (then
/// by name, so the outcome is permutation-invariant). Every candidate gets an
/// accepted/rejected reason.
SelectionOutcome select_technique(const std::vector<TechniqueCandidate>& candidates,
                                  double benchmark);

/// Human-readable block (percentages at 4 decimals).
std::string format_report_text(const EvalReport& report);

/// Machine key:value block; doubles at full precision so that
/// parse_report_kv(format_report_kv(r)) == r exactly.
std::string format_report_kv(const EvalReport& report);
EvalReport parse_report_kv(std::istream& in);
EvalReport parse_report_kv(const std::string& text);

}  // namespace roughteam
