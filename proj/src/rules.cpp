#include "roughteam/rules.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "roughteam/errors.hpp"
#include "text_util.hpp"

namespace roughteam {

namespace {

using detail::split;
using detail::split_on;
using detail::trim;

// coverage(a) > coverage(b) as exact rationals: rhs[a]/size[a] vs
// rhs[b]/size[b] cross-multiplied, so 6/45 vs 8/60 really ties.
bool coverage_greater(std::size_t rhs_a, std::size_t size_a, std::size_t rhs_b,
                      std::size_t size_b) {
    const auto lhs = static_cast<unsigned __int128>(rhs_a) * size_b;
    const auto rhs = static_cast<unsigned __int128>(rhs_b) * size_a;
    return lhs > rhs;
}

std::size_t resolve_with(const DecisionRule& rule, const std::vector<std::size_t>& class_sizes,
                         TiePolicy tie) {
    std::optional<std::size_t> best;
    for (std::size_t c = 0; c < rule.rhs_support.size(); ++c) {
        if (rule.rhs_support[c] == 0) continue;
        if (!best) {
            best = c;
            continue;
        }
        const bool greater =
            coverage_greater(rule.rhs_support[c], class_sizes[c], rule.rhs_support[*best],
                             class_sizes[*best]);
        const bool smaller =
            coverage_greater(rule.rhs_support[*best], class_sizes[*best], rule.rhs_support[c],
                             class_sizes[c]);
        if (greater || (!smaller && tie == TiePolicy::last_class)) best = c;
    }
    if (!best) {
        throw validation_error("cannot resolve a final decision for a rule without support");
    }
    return *best;
}

std::size_t argmax_with_tie(const std::vector<std::size_t>& counts, TiePolicy tie) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < counts.size(); ++c) {
        if (counts[c] > counts[best] || (counts[c] == counts[best] && tie == TiePolicy::last_class)) {
            best = c;
        }
    }
    return best;
}

}  // namespace

std::size_t DecisionRule::positive_class_count() const {
    std::size_t count = 0;
    for (const std::size_t s : rhs_support) {
        if (s > 0) ++count;
    }
    return count;
}

RuleModel::RuleModel(AttributeSchema schema, std::vector<DecisionRule> rules, std::size_t n_train,
                     std::vector<std::size_t> class_sizes, RulePolicies policies)
    : schema_(std::move(schema)),
      rules_(std::move(rules)),
      n_train_(n_train),
      class_sizes_(std::move(class_sizes)),
      policies_(policies) {
    if (n_train_ == 0) {
        throw validation_error("a rule model needs a non-empty training set");
    }
    if (class_sizes_.size() != schema_.class_count()) {
        throw validation_error("class_sizes must list every decision class");
    }
    const std::size_t total = std::accumulate(class_sizes_.begin(), class_sizes_.end(),
                                              std::size_t{0});
    if (total != n_train_) {
        throw validation_error("class sizes sum to " + std::to_string(total) + ", n_train is " +
                               std::to_string(n_train_));
    }
    for (std::size_t r = 0; r < rules_.size(); ++r) {
        DecisionRule& rule = rules_[r];
        const std::string where = "rule " + std::to_string(r + 1);
        std::optional<std::size_t> previous;
        for (const RuleConjunct& conjunct : rule.antecedent) {
            if (conjunct.attribute >= schema_.attribute_count()) {
                throw validation_error(where + ": attribute index out of range");
            }
            if (conjunct.value >= schema_.condition(conjunct.attribute).values.size()) {
                throw validation_error(where + ": value index out of range for '" +
                                       schema_.condition(conjunct.attribute).name + "'");
            }
            if (previous && conjunct.attribute <= *previous) {
                throw validation_error(where + ": antecedent attributes must be distinct and in "
                                              "schema order");
            }
            previous = conjunct.attribute;
        }
        if (rule.rhs_support.size() != schema_.class_count()) {
            throw validation_error(where + ": rhs_support must cover every class");
        }
        const std::size_t sum = std::accumulate(rule.rhs_support.begin(), rule.rhs_support.end(),
                                                std::size_t{0});
        if (sum != rule.lhs_support) {
            throw validation_error(where + ": lhs_support " + std::to_string(rule.lhs_support) +
                                   " does not equal the rhs_support sum " + std::to_string(sum));
        }
        for (std::size_t c = 0; c < rule.rhs_support.size(); ++c) {
            if (rule.rhs_support[c] > class_sizes_[c]) {
                throw validation_error(where + ": rhs_support exceeds the size of class '" +
                                       schema_.class_name(c) + "'");
            }
        }
        std::vector<std::size_t> positive;
        for (std::size_t c = 0; c < rule.rhs_support.size(); ++c) {
            if (rule.rhs_support[c] > 0) positive.push_back(c);
        }
        if (rule.consequent_order.empty()) {
            rule.consequent_order = positive;
        } else {
            std::vector<std::size_t> sorted = rule.consequent_order;
            std::sort(sorted.begin(), sorted.end());
            if (sorted != positive) {
                throw validation_error(where + ": consequent classes must be exactly the classes "
                                              "with positive support");
            }
        }
        if (rule.lhs_support > 0) {
            rule.final_decision = resolve_with(rule, class_sizes_, policies_.tie);
        } else {
            rule.final_decision.reset();
        }
    }
}

const DecisionRule& RuleModel::rule(std::size_t rule_id) const {
    if (rule_id < 1 || rule_id > rules_.size()) {
        throw validation_error("rule id " + std::to_string(rule_id) + " out of range 1.." +
                               std::to_string(rules_.size()));
    }
    return rules_[rule_id - 1];
}

double lhs_coverage(const DecisionRule& rule, const RuleModel& model) {
    return static_cast<double>(rule.lhs_support) / static_cast<double>(model.n_train());
}

std::vector<double> rhs_coverage(const DecisionRule& rule, const RuleModel& model) {
    std::vector<double> out(rule.rhs_support.size(), 0.0);
    for (std::size_t c = 0; c < out.size(); ++c) {
        const std::size_t size = model.class_sizes()[c];
        out[c] = size == 0 ? 0.0
                           : static_cast<double>(rule.rhs_support[c]) / static_cast<double>(size);
    }
    return out;
}

std::size_t resolve_final_decision(const DecisionRule& rule, const RuleModel& model) {
    if (rule.lhs_support == 0) {
        throw validation_error("cannot resolve a final decision for a rule without support");
    }
    return resolve_with(rule, model.class_sizes(), model.policies().tie);
}

bool rule_matches(const DecisionRule& rule, const RuleModel& model, const TableRow& record) {
    if (record.values.size() != model.schema().attribute_count()) {
        throw validation_error("record has " + std::to_string(record.values.size()) +
                               " values, schema has " +
                               std::to_string(model.schema().attribute_count()) + " attributes");
    }
    for (const RuleConjunct& conjunct : rule.antecedent) {
        if (record.values[conjunct.attribute] != conjunct.value) return false;
    }
    return true;
}

bool rule_matches(const DecisionRule& rule, const RuleModel& model,
                  const CandidateProfile& profile) {
    TableRow record;
    record.values = profile_values(profile);
    return rule_matches(rule, model, record);
}

Classification classify(const RuleModel& model, const TableRow& record) {
    Classification result;
    result.tally.assign(model.schema().class_count(), 0);
    for (std::size_t id = 1; id <= model.rule_count(); ++id) {
        const DecisionRule& rule = model.rule(id);
        if (!rule_matches(rule, model, record)) continue;
        result.fired_rule_ids.push_back(id);
        for (std::size_t c = 0; c < rule.rhs_support.size(); ++c) {
            result.tally[c] += rule.rhs_support[c];
        }
    }
    const RulePolicies& policies = model.policies();
    if (result.fired_rule_ids.empty()) {
        if (policies.default_policy == DefaultPolicy::majority_class) {
            result.decision = argmax_with_tie(model.class_sizes(), policies.tie);
        }
        return result;
    }
    if (policies.conflict == ConflictPolicy::first_match) {
        for (const std::size_t id : result.fired_rule_ids) {
            if (model.rule(id).final_decision) {
                result.decision = model.rule(id).final_decision;
                return result;
            }
        }
        if (policies.default_policy == DefaultPolicy::majority_class) {
            result.decision = argmax_with_tie(model.class_sizes(), policies.tie);
        }
        return result;
    }
    result.decision = argmax_with_tie(result.tally, policies.tie);
    return result;
}

Classification classify(const RuleModel& model, const CandidateProfile& profile) {
    TableRow record;
    record.values = profile_values(profile);
    return classify(model, record);
}

std::string render_rule(const DecisionRule& rule, const AttributeSchema& schema) {
    const bool bare = schema.value_names_globally_unique();
    std::string out;
    if (rule.antecedent.empty()) {
        out = "*";
    } else {
        for (std::size_t i = 0; i < rule.antecedent.size(); ++i) {
            const RuleConjunct& conjunct = rule.antecedent[i];
            if (i > 0) out += " AND ";
            if (!bare) {
                out += schema.condition(conjunct.attribute).name;
                out += '=';
            }
            out += schema.condition(conjunct.attribute).values[conjunct.value];
        }
    }
    out += " => ";
    if (rule.consequent_order.empty()) {
        out += '?';
    } else {
        for (std::size_t i = 0; i < rule.consequent_order.size(); ++i) {
            if (i > 0) out += " OR ";
            out += schema.class_name(rule.consequent_order[i]);
        }
    }
    return out;
}

namespace {

std::string render_rule_line(const DecisionRule& rule, const AttributeSchema& schema) {
    std::string out;
    if (rule.antecedent.empty()) {
        out = "*";
    } else {
        for (std::size_t i = 0; i < rule.antecedent.size(); ++i) {
            const RuleConjunct& conjunct = rule.antecedent[i];
            if (i > 0) out += " AND ";
            out += schema.condition(conjunct.attribute).name;
            out += '=';
            out += schema.condition(conjunct.attribute).values[conjunct.value];
        }
    }
    out += " => ";
    if (rule.consequent_order.empty()) {
        out += '?';
    } else {
        for (std::size_t i = 0; i < rule.consequent_order.size(); ++i) {
            if (i > 0) out += " OR ";
            out += schema.class_name(rule.consequent_order[i]);
        }
    }
    out += " [";
    out += std::to_string(rule.lhs_support);
    out += "; ";
    for (std::size_t c = 0; c < rule.rhs_support.size(); ++c) {
        if (c > 0) out += ',';
        out += std::to_string(rule.rhs_support[c]);
    }
    out += ']';
    return out;
}

const char* policy_name(DefaultPolicy p) {
    return p == DefaultPolicy::abstain ? "abstain" : "majority_class";
}
const char* policy_name(ConflictPolicy p) {
    return p == ConflictPolicy::support_voting ? "support_voting" : "first_match";
}
const char* policy_name(TiePolicy p) {
    return p == TiePolicy::first_class ? "first_class" : "last_class";
}

DefaultPolicy parse_default_policy(std::string_view token) {
    if (token == "abstain") return DefaultPolicy::abstain;
    if (token == "majority_class") return DefaultPolicy::majority_class;
    throw validation_error("unknown default policy '" + std::string(token) + "'");
}
ConflictPolicy parse_conflict_policy(std::string_view token) {
    if (token == "support_voting") return ConflictPolicy::support_voting;
    if (token == "first_match") return ConflictPolicy::first_match;
    throw validation_error("unknown conflict policy '" + std::string(token) + "'");
}
TiePolicy parse_tie_policy(std::string_view token) {
    if (token == "first_class") return TiePolicy::first_class;
    if (token == "last_class") return TiePolicy::last_class;
    throw validation_error("unknown tie policy '" + std::string(token) + "'");
}

DecisionRule parse_rule_line(const std::string& line, const AttributeSchema& schema,
                             std::size_t line_no) {
    const std::string where = "model line " + std::to_string(line_no);
    const std::size_t arrow = line.find(" => ");
    if (arrow == std::string::npos) {
        throw validation_error(where + ": rule is missing ' => '");
    }
    const std::string antecedent_text(trim(line.substr(0, arrow)));
    const std::string rest(trim(line.substr(arrow + 4)));
    const std::size_t lbracket = rest.rfind('[');
    if (lbracket == std::string::npos || rest.empty() || rest.back() != ']') {
        throw validation_error(where + ": rule is missing its [lhs; rhs,...] supports");
    }
    const std::string consequent_text(trim(rest.substr(0, lbracket)));
    const std::string support_text = rest.substr(lbracket + 1, rest.size() - lbracket - 2);

    DecisionRule rule;
    if (antecedent_text != "*") {
        for (const auto& part : split_on(antecedent_text, " AND ")) {
            const std::string conjunct_text(trim(part));
            const std::size_t eq = conjunct_text.find('=');
            if (eq == std::string::npos) {
                throw validation_error(where + ": conjunct '" + conjunct_text +
                                       "' is not attr=value");
            }
            const std::string attr_name(trim(conjunct_text.substr(0, eq)));
            const auto attr = schema.condition_index(attr_name);
            if (!attr) {
                throw validation_error(where + ": unknown attribute '" + attr_name + "'");
            }
            const auto value = schema.condition_value_index(*attr, conjunct_text.substr(eq + 1));
            if (!value) {
                throw validation_error(where + ": '" + conjunct_text.substr(eq + 1) +
                                       "' is not a value of '" + attr_name + "'");
            }
            rule.antecedent.push_back({*attr, *value});
        }
    }
    if (consequent_text != "?") {
        for (const auto& part : split_on(consequent_text, " OR ")) {
            const auto cls = schema.class_index(part);
            if (!cls) {
                throw validation_error(where + ": unknown class '" + std::string(trim(part)) + "'");
            }
            rule.consequent_order.push_back(*cls);
        }
    }
    const std::vector<std::string> halves = split(support_text, ';');
    if (halves.size() != 2) {
        throw validation_error(where + ": supports must be [lhs; rhs,...]");
    }
    const auto lhs = detail::parse_integer(halves[0]);
    if (!lhs || *lhs < 0) {
        throw validation_error(where + ": bad LHS support '" + halves[0] + "'");
    }
    rule.lhs_support = static_cast<std::size_t>(*lhs);
    for (const auto& cell : split(halves[1], ',')) {
        const auto count = detail::parse_integer(cell);
        if (!count || *count < 0) {
            throw validation_error(where + ": bad RHS support '" + cell + "'");
        }
        rule.rhs_support.push_back(static_cast<std::size_t>(*count));
    }
    if (rule.rhs_support.size() != schema.class_count()) {
        throw validation_error(where + ": expected " + std::to_string(schema.class_count()) +
                               " RHS supports, found " + std::to_string(rule.rhs_support.size()));
    }
    return rule;
}

}  // namespace

void write_model(std::ostream& out, const RuleModel& model) {
    const AttributeSchema& schema = model.schema();
    out << "# roughteam decision-rule model\n";
    out << "format=roughteam-model-v1\n";
    if (find_builtin_schema("mbti-team-v1") == schema) {
        out << "schema=mbti-team-v1\n";
    }
    write_schema(out, schema);
    out << "n_train=" << model.n_train() << '\n';
    out << "class_sizes=";
    for (std::size_t c = 0; c < schema.class_count(); ++c) {
        if (c > 0) out << ',';
        out << schema.class_name(c) << ':' << model.class_sizes()[c];
    }
    out << '\n';
    const RulePolicies& policies = model.policies();
    out << "policy=default:" << policy_name(policies.default_policy)
        << ",conflict:" << policy_name(policies.conflict) << ",tie:" << policy_name(policies.tie)
        << '\n';
    for (const DecisionRule& rule : model.rules()) {
        out << render_rule_line(rule, schema) << '\n';
    }
}

std::string model_to_text(const RuleModel& model) {
    std::ostringstream out;
    write_model(out, model);
    return out.str();
}

RuleModel read_model(std::istream& in) {
    std::optional<AttributeSchema> schema;
    std::optional<std::string> builtin_name;
    std::vector<Attribute> conditions;
    std::optional<Attribute> decision;
    std::optional<std::size_t> n_train;
    std::vector<std::pair<std::string, std::size_t>> class_size_entries;
    RulePolicies policies;
    std::vector<std::pair<std::string, std::size_t>> rule_lines;  // text + line number

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string content(trim(line));
        if (content.empty() || content.front() == '#') continue;
        if (content.find(" => ") != std::string::npos) {
            rule_lines.emplace_back(content, line_no);
            continue;
        }
        const std::string where = "model line " + std::to_string(line_no);
        const std::size_t eq = content.find('=');
        if (eq == std::string::npos) {
            throw validation_error(where + ": expected key=value");
        }
        const std::string key(trim(content.substr(0, eq)));
        const std::string value(trim(content.substr(eq + 1)));
        if (key == "format") {
            if (value != "roughteam-model-v1") {
                throw validation_error(where + ": unsupported format '" + value + "'");
            }
        } else if (key == "schema") {
            builtin_name = value;
        } else if (key == "attribute" || key == "decision") {
            const std::size_t colon = value.find(':');
            if (colon == std::string::npos) {
                throw validation_error(where + ": missing ':' between name and values");
            }
            Attribute attribute;
            attribute.name = std::string(trim(value.substr(0, colon)));
            for (const auto& v : split(value.substr(colon + 1), '|')) {
                attribute.values.emplace_back(trim(v));
            }
            if (key == "attribute") {
                conditions.push_back(std::move(attribute));
            } else {
                if (decision) {
                    throw validation_error(where + ": second decision attribute");
                }
                decision = std::move(attribute);
            }
        } else if (key == "n_train") {
            const auto parsed = detail::parse_integer(value);
            if (!parsed || *parsed < 1) {
                throw validation_error(where + ": bad n_train '" + value + "'");
            }
            n_train = static_cast<std::size_t>(*parsed);
        } else if (key == "class_sizes") {
            for (const auto& part : split(value, ',')) {
                const std::size_t colon = part.find(':');
                if (colon == std::string::npos) {
                    throw validation_error(where + ": class sizes must be name:count");
                }
                const auto count = detail::parse_integer(part.substr(colon + 1));
                if (!count || *count < 0) {
                    throw validation_error(where + ": bad class size in '" + part + "'");
                }
                class_size_entries.emplace_back(std::string(trim(part.substr(0, colon))),
                                                static_cast<std::size_t>(*count));
            }
        } else if (key == "policy") {
            for (const auto& part : split(value, ',')) {
                const std::size_t colon = part.find(':');
                if (colon == std::string::npos) {
                    throw validation_error(where + ": policies must be name:value");
                }
                const std::string name(trim(part.substr(0, colon)));
                const std::string setting(trim(part.substr(colon + 1)));
                if (name == "default") {
                    policies.default_policy = parse_default_policy(setting);
                } else if (name == "conflict") {
                    policies.conflict = parse_conflict_policy(setting);
                } else if (name == "tie") {
                    policies.tie = parse_tie_policy(setting);
                } else {
                    throw validation_error(where + ": unknown policy '" + name + "'");
                }
            }
        } else {
            throw validation_error(where + ": unknown key '" + key + "'");
        }
    }

    if (decision) {
        schema = AttributeSchema(std::move(conditions), std::move(*decision));
        if (builtin_name) {
            const auto builtin = find_builtin_schema(*builtin_name);
            if (builtin && !(*builtin == *schema)) {
                throw validation_error("model schema lines disagree with built-in schema '" +
                                       *builtin_name + "'");
            }
        }
    } else if (builtin_name) {
        if (!conditions.empty()) {
            throw validation_error("model has attribute lines but no decision line");
        }
        schema = find_builtin_schema(*builtin_name);
        if (!schema) {
            throw validation_error("unknown built-in schema '" + *builtin_name + "'");
        }
    } else {
        throw validation_error("model has no schema (neither attribute lines nor a schema= name)");
    }
    if (!n_train) {
        throw validation_error("model has no n_train line");
    }

    std::vector<std::size_t> class_sizes(schema->class_count(), 0);
    if (class_size_entries.empty()) {
        throw validation_error("model has no class_sizes line");
    }
    std::vector<bool> size_seen(schema->class_count(), false);
    for (const auto& [name, count] : class_size_entries) {
        const auto cls = schema->class_index(name);
        if (!cls) {
            throw validation_error("class_sizes names unknown class '" + name + "'");
        }
        if (size_seen[*cls]) {
            throw validation_error("class_sizes repeats class '" + name + "'");
        }
        size_seen[*cls] = true;
        class_sizes[*cls] = count;
    }
    for (std::size_t c = 0; c < size_seen.size(); ++c) {
        if (!size_seen[c]) {
            throw validation_error("class_sizes is missing class '" + schema->class_name(c) + "'");
        }
    }

    std::vector<DecisionRule> rules;
    rules.reserve(rule_lines.size());
    for (const auto& [text, no] : rule_lines) {
        rules.push_back(parse_rule_line(text, *schema, no));
    }
    return RuleModel(std::move(*schema), std::move(rules), *n_train, std::move(class_sizes),
                     policies);
}

RuleModel read_model_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw validation_error("cannot open model file '" + path.string() + "'");
    }
    try {
        return read_model(in);
    } catch (const validation_error& e) {
        throw validation_error(path.string() + ": " + e.what());
    }
}

RuleModel load_model_by_name(const std::string& name_or_path) {
    if (name_or_path == kEmbeddedModelName) return embedded_team_model();
    return read_model_file(name_or_path);
}

namespace {

// 24 rules induced from the 105-member survey with per-object reducts, with
// each antecedent's supports recounted against the full table.
constexpr const char* kEmbeddedModelText =
    "# roughteam decision-rule model\n"
    "format=roughteam-model-v1\n"
    "schema=mbti-team-v1\n"
    "attribute=role:team leader|programmer\n"
    "attribute=ie:introvert|extrovert\n"
    "attribute=sn:sensing|intuiting\n"
    "attribute=tf:thinking|feeling\n"
    "attribute=jp:judging|perceiving\n"
    "attribute=gender:male|female\n"
    "decision=performance:ineffective|effective\n"
    "n_train=105\n"
    "class_sizes=ineffective:60,effective:45\n"
    "policy=default:abstain,conflict:support_voting,tie:first_class\n"
    "role=team leader AND sn=sensing AND gender=female => effective [1; 0,1]\n"
    "role=team leader AND jp=perceiving AND gender=male => ineffective [4; 4,0]\n"
    "role=team leader AND sn=intuiting AND tf=feeling AND jp=perceiving => ineffective [1; 1,0]\n"
    "role=team leader AND ie=introvert AND tf=thinking => ineffective [7; 7,0]\n"
    "role=team leader AND ie=introvert AND sn=sensing => ineffective [2; 2,0]\n"
    "role=team leader AND ie=introvert AND tf=feeling => ineffective [1; 1,0]\n"
    "role=team leader AND tf=feeling AND gender=male => ineffective [3; 3,0]\n"
    "role=team leader AND ie=extrovert AND tf=thinking AND jp=judging => effective [4; 0,4]\n"
    "role=team leader AND ie=extrovert AND sn=intuiting AND tf=thinking AND jp=perceiving => "
    "effective OR ineffective [2; 1,1]\n"
    "role=team leader AND ie=extrovert AND sn=intuiting AND jp=judging => effective [4; 0,4]\n"
    "role=programmer AND tf=thinking AND jp=judging => effective OR ineffective [32; 19,13]\n"
    "role=programmer AND ie=introvert AND sn=sensing AND jp=judging => ineffective OR effective "
    "[14; 9,5]\n"
    "role=programmer AND ie=introvert AND jp=perceiving AND gender=male => effective [8; 0,8]\n"
    "role=programmer AND ie=introvert AND jp=judging AND gender=male => effective OR ineffective "
    "[14; 9,5]\n"
    "role=programmer AND ie=introvert AND sn=intuiting AND jp=perceiving AND gender=female => "
    "effective OR ineffective [2; 1,1]\n"
    "role=programmer AND ie=introvert AND sn=intuiting AND tf=feeling AND jp=judging AND "
    "gender=female => ineffective [2; 2,0]\n"
    "role=programmer AND ie=extrovert AND sn=sensing AND tf=thinking => effective OR ineffective "
    "[14; 8,6]\n"
    "role=programmer AND ie=extrovert AND sn=intuiting AND jp=perceiving => effective [6; 0,6]\n"
    "role=programmer AND ie=extrovert AND sn=intuiting AND jp=judging => ineffective OR effective "
    "[15; 9,6]\n"
    "role=programmer AND ie=extrovert AND tf=feeling AND jp=perceiving => effective [5; 0,5]\n"
    "sn=intuiting AND jp=perceiving AND gender=male => effective [10; 0,10]\n"
    "ie=introvert AND sn=sensing AND jp=perceiving AND gender=female => ineffective [2; 2,0]\n"
    "ie=introvert AND sn=sensing AND tf=feeling AND jp=perceiving => ineffective [1; 1,0]\n"
    "ie=extrovert AND sn=sensing AND tf=feeling AND jp=judging => ineffective [7; 7,0]\n";

}  // namespace

const RuleModel& embedded_team_model() {
    static const RuleModel model = [] {
        std::istringstream in(kEmbeddedModelText);
        return read_model(in);
    }();
    return model;
}

}  // namespace roughteam
