#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "roughteam/table.hpp"

namespace roughteam {

struct RuleConjunct {
    std::size_t attribute = 0;  // condition attribute index
    std::size_t value = 0;      // value index within that attribute

    auto operator<=>(const RuleConjunct&) const = default;
};

/// IF conjunct AND ... THEN class, with support bookkeeping: lhs_support
/// counts objects matching the antecedent, rhs_support breaks those matches
/// down per decision class (schema class order). A rule is uni-dimensional
/// when exactly one class has positive support and bi-dimensional when
/// several do.
struct DecisionRule {
    std::vector<RuleConjunct> antecedent;       // distinct attributes, schema order
    std::vector<std::size_t> rhs_support;       // per class
    std::size_t lhs_support = 0;                // == sum of rhs_support
    std::optional<std::size_t> final_decision;  // resolved class index

    /// Classes with positive support in display order. Induced rules list
    /// them in schema order; the embedded team model keeps its original
    /// order (it is not derivable from the supports).
    std::vector<std::size_t> consequent_order;

    std::size_t positive_class_count() const;
    bool uni_dimensional() const { return positive_class_count() == 1; }
    bool bi_dimensional() const { return positive_class_count() >= 2; }

    bool operator==(const DecisionRule&) const = default;
};

enum class DefaultPolicy { abstain, majority_class };
enum class ConflictPolicy { support_voting, first_match };
/// Which class wins exact ties (rule resolution and vote tallies). The team
/// schema orders classes [ineffective, effective], so first_class sends exact
/// ties to ineffective.
enum class TiePolicy { first_class, last_class };

struct RulePolicies {
    DefaultPolicy default_policy = DefaultPolicy::abstain;
    ConflictPolicy conflict = ConflictPolicy::support_voting;
    TiePolicy tie = TiePolicy::first_class;

    bool operator==(const RulePolicies&) const = default;
};

/// A rule set bound to its schema and training statistics. Rule ids are the
/// stable 1-based positions in the list. Immutable after construction;
/// classify is a pure function, safe for concurrent callers.
class RuleModel {
public:
    RuleModel(AttributeSchema schema, std::vector<DecisionRule> rules, std::size_t n_train,
              std::vector<std::size_t> class_sizes, RulePolicies policies = {});

    const AttributeSchema& schema() const { return schema_; }
    const std::vector<DecisionRule>& rules() const { return rules_; }
    const DecisionRule& rule(std::size_t rule_id) const;  // 1-based
    std::size_t rule_count() const { return rules_.size(); }
    std::size_t n_train() const { return n_train_; }
    const std::vector<std::size_t>& class_sizes() const { return class_sizes_; }
    const RulePolicies& policies() const { return policies_; }

    bool operator==(const RuleModel&) const = default;

private:
    AttributeSchema schema_;
    std::vector<DecisionRule> rules_;
    std::size_t n_train_ = 0;
    std::vector<std::size_t> class_sizes_;
    RulePolicies policies_;
};

/// LHS support over the whole training set: lhs_support / n_train.
double lhs_coverage(const DecisionRule& rule, const RuleModel& model);

/// Per-class RHS support over that class's training size, schema class order.
std::vector<double> rhs_coverage(const DecisionRule& rule, const RuleModel& model);

/// Uni-dimensional rules keep their sole class; bi-dimensional rules go to
/// the class with the larger RHS coverage, exact ties per the tie policy.
/// Coverage comparisons are exact (cross-multiplied integers), so ties like
/// 6/45 vs 8/60 are recognized.
std::size_t resolve_final_decision(const DecisionRule& rule, const RuleModel& model);

/// True iff every conjunct equals the record's value. The record must cover
/// all condition attributes of the model's schema.
bool rule_matches(const DecisionRule& rule, const RuleModel& model, const TableRow& record);
bool rule_matches(const DecisionRule& rule, const RuleModel& model, const CandidateProfile& profile);

struct Classification {
    std::optional<std::size_t> decision;  // empty = abstained
    std::vector<std::size_t> fired_rule_ids;
    std::vector<std::size_t> tally;  // per class, summed RHS supports of matching rules
};

/// Collect matching rules and decide per the model's policies. Under
/// support_voting the tally argmax wins (tie per tie policy); first_match
/// takes the lowest-id matching rule's final decision. With no match the
/// default policy applies; abstaining is a value, not an error.
Classification classify(const RuleModel& model, const TableRow& record);
Classification classify(const RuleModel& model, const CandidateProfile& profile);

/// The built-in 24-rule team-composition model ("table5-ja-v1"):
/// n_train=105, class sizes ineffective=60 / effective=45, support voting.
const RuleModel& embedded_team_model();
inline constexpr const char* kEmbeddedModelName = "table5-ja-v1";

/// Model file format: '#' comments; header keys format=, schema= (built-in
/// name, informational), attribute=/decision= lines, n_train=, class_sizes=,
/// policy=; then one rule per line:
///   attr=value AND attr=value => class OR class [lhs; c1,c2]
/// The OR list names the positive-support classes in display order, the
/// bracket holds LHS support and per-class RHS supports in schema class
/// order. An empty antecedent serializes as "*". Final decisions are
/// recomputed on load. Writing is canonical, so load(write(m)) == m and
/// write(load(text)) == text for canonical text.
RuleModel read_model(std::istream& in);
RuleModel read_model_file(const std::filesystem::path& path);
void write_model(std::ostream& out, const RuleModel& model);
std::string model_to_text(const RuleModel& model);

/// Resolve "table5-ja-v1" or a file path.
RuleModel load_model_by_name(const std::string& name_or_path);

/// One-line rule text. Bare phrasing ("team leader AND sensing AND female =>
/// effective") when the schema's value names are globally unique, otherwise
/// attr=value phrasing.
std::string render_rule(const DecisionRule& rule, const AttributeSchema& schema);

}  // namespace roughteam
