#include "roughteam/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "roughteam/errors.hpp"
#include "roughteam/evaluation.hpp"
#include "roughteam/logistic.hpp"
#include "roughteam/rng.hpp"
#include "roughteam/roughset.hpp"
#include "roughteam/rules.hpp"
#include "roughteam/schema.hpp"
#include "roughteam/table.hpp"
#include "roughteam/tree.hpp"
#include "roughteam/version.hpp"
#include "text_util.hpp"

namespace roughteam::cli {

namespace {

using detail::format_fixed;
using detail::split;
using detail::trim;

std::uint64_t fnv1a64(const std::string& bytes, std::uint64_t hash = 0xcbf29ce484222325ULL) {
    for (const unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string hex16(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw validation_error("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Whole-or-not-at-all: write a sibling temp file, then rename over the target.
void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw validation_error("cannot write '" + tmp.string() + "'");
        }
        out << content;
        out.flush();
        if (!out) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw validation_error("failed while writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw validation_error("cannot move output into place at '" + path.string() + "': " +
                               ec.message());
    }
}

std::uint64_t default_seed_from_env() {
    const char* env = std::getenv("ROUGHTEAM_SEED");
    if (!env) return kDefaultSeed;
    const auto parsed = detail::parse_integer(env);
    if (!parsed || *parsed < 0) {
        throw validation_error(std::string("ROUGHTEAM_SEED is not a valid seed: '") + env + "'");
    }
    return static_cast<std::uint64_t>(*parsed);
}

AttributeSchema resolve_schema(const std::string& name_or_path) {
    if (const auto builtin = find_builtin_schema(name_or_path)) return *builtin;
    if (!std::filesystem::exists(name_or_path)) {
        throw validation_error("unknown schema '" + name_or_path +
                               "' (neither a built-in name nor a readable file)");
    }
    std::istringstream in(read_file(name_or_path));
    try {
        return read_schema(in);
    } catch (const validation_error& e) {
        throw validation_error(name_or_path + ": " + e.what());
    }
}

// Options shared by the commands; each subcommand registers the subset it
// supports against these fields.
struct Options {
    std::string table_path;
    std::string schema_name = "mbti-team-v1";
    std::string model_name;
    std::string matrix_path;
    std::string out_path;
    std::string format = "text";
    std::string technique = "ja_rules";
    std::vector<std::string> techniques;
    std::vector<std::string> candidates;
    std::string scope = "object";
    std::string positive;
    std::size_t k = 10;
    std::uint64_t seed = kDefaultSeed;
    bool stratified = true;
    double benchmark = 70.0;
    GAParams ga;
    std::string policy_default = "abstain";
    std::string policy_conflict = "support_voting";
    std::string policy_tie = "first_class";
    double ga_mutation = -1.0;  // <0 = automatic 1/|C|
    std::size_t tree_min_leaf = 1;
    double tree_confidence = 0.25;
};

RulePolicies parse_policies(const Options& options) {
    RulePolicies policies;
    policies.default_policy = options.policy_default == "abstain" ? DefaultPolicy::abstain
                                                                  : DefaultPolicy::majority_class;
    policies.conflict = options.policy_conflict == "support_voting"
                            ? ConflictPolicy::support_voting
                            : ConflictPolicy::first_match;
    policies.tie = options.policy_tie == "first_class" ? TiePolicy::first_class
                                                       : TiePolicy::last_class;
    return policies;
}

GAParams effective_ga(const Options& options) {
    GAParams ga = options.ga;
    ga.seed = options.seed;
    if (options.ga_mutation >= 0.0) ga.mutation_rate = options.ga_mutation;
    return ga;
}

// The digest covers every setting that shapes the report plus the raw bytes
// of the input files, so equal digests really mean equal reports. The output
// destination is deliberately excluded: redirecting with --out must not
// change the report itself.
std::string config_digest(const std::string& command, const Options& options,
                          const std::vector<std::string>& file_contents) {
    std::ostringstream canon;
    canon << "command=" << command << ";table=" << options.table_path << ";schema="
          << options.schema_name << ";model=" << options.model_name << ";matrix="
          << options.matrix_path << ";technique=" << options.technique << ";techniques=";
    for (const auto& name : options.techniques) canon << name << '+';
    canon << ";candidates=";
    for (const auto& candidate : options.candidates) canon << candidate << '+';
    canon << ";scope=" << options.scope << ";k=" << options.k << ";seed=" << options.seed
          << ";stratified=" << options.stratified << ";benchmark="
          << detail::format_exact(options.benchmark) << ";positive=" << options.positive
          << ";policies=" << options.policy_default << ',' << options.policy_conflict << ','
          << options.policy_tie << ";ga=" << options.ga.population_size << ','
          << options.ga.generations << ',' << detail::format_exact(options.ga.crossover_rate)
          << ',' << (options.ga_mutation >= 0.0 ? detail::format_exact(options.ga_mutation) : "auto")
          << ',' << detail::format_exact(options.ga.parsimony_weight) << ','
          << options.ga.elitism << ";tree=" << options.tree_min_leaf << ','
          << detail::format_exact(options.tree_confidence) << ";format=" << options.format;
    std::uint64_t hash = fnv1a64(canon.str());
    for (const auto& content : file_contents) hash = fnv1a64(content, hash);
    return hex16(hash);
}

void emit_header(std::ostream& out, const std::string& command, const Options& options,
                 const std::string& digest) {
    if (options.format == "kv") {
        out << "version=" << kVersion << '\n';
        out << "command=" << command << '\n';
        out << "config_digest=" << digest << '\n';
    } else {
        out << "# roughteam " << kVersion << " command=" << command << " seed=" << options.seed
            << " config=" << digest << '\n';
    }
}

std::string display_counts(const DecisionRule& rule) {
    std::string text;
    for (std::size_t i = 0; i < rule.consequent_order.size(); ++i) {
        if (i > 0) text += ',';
        text += std::to_string(rule.rhs_support[rule.consequent_order[i]]);
    }
    return text.empty() ? "0" : text;
}

std::string display_coverage(const DecisionRule& rule, const RuleModel& model) {
    const std::vector<double> coverage = rhs_coverage(rule, model);
    std::string text;
    for (std::size_t i = 0; i < rule.consequent_order.size(); ++i) {
        if (i > 0) text += ',';
        text += format_fixed(coverage[rule.consequent_order[i]], 6);
    }
    return text.empty() ? "0" : text;
}

void emit_rules(std::ostream& out, const RuleModel& model, const std::string& format) {
    const AttributeSchema& schema = model.schema();
    for (std::size_t id = 1; id <= model.rule_count(); ++id) {
        const DecisionRule& rule = model.rule(id);
        const std::string final_name =
            rule.final_decision ? schema.class_name(*rule.final_decision) : "-";
        if (format == "kv") {
            out << "rule." << id << ".text=" << render_rule(rule, schema) << '\n';
            out << "rule." << id << ".lhs=" << rule.lhs_support << '\n';
            out << "rule." << id << ".rhs=" << display_counts(rule) << '\n';
            out << "rule." << id << ".lhs_coverage=" << format_fixed(lhs_coverage(rule, model), 6)
                << '\n';
            out << "rule." << id << ".rhs_coverage=" << display_coverage(rule, model) << '\n';
            out << "rule." << id << ".final=" << final_name << '\n';
        } else {
            char label[8];
            std::snprintf(label, sizeof(label), "%2zu. ", id);
            out << label << render_rule(rule, schema) << " [lhs=" << rule.lhs_support
                << "; rhs=" << display_counts(rule)
                << "; lhs_cov=" << format_fixed(lhs_coverage(rule, model), 6)
                << "; rhs_cov=" << display_coverage(rule, model) << "; final=" << final_name
                << "]\n";
        }
    }
}

DecisionTable load_table(const Options& options, const AttributeSchema& schema,
                         std::string& content_out) {
    content_out = read_file(options.table_path);
    std::istringstream in(content_out);
    try {
        return read_table(in, schema);
    } catch (const validation_error& e) {
        throw validation_error(options.table_path + ": " + e.what());
    }
}

RuleModel load_model(const std::string& name_or_path, std::string& content_out) {
    if (name_or_path == kEmbeddedModelName) {
        content_out = model_to_text(embedded_team_model());
        return embedded_team_model();
    }
    content_out = read_file(name_or_path);
    std::istringstream in(content_out);
    try {
        return read_model(in);
    } catch (const validation_error& e) {
        throw validation_error(name_or_path + ": " + e.what());
    }
}

std::optional<std::size_t> resolve_positive(const Options& options,
                                            const AttributeSchema& schema) {
    if (options.positive.empty()) return std::nullopt;
    const auto index = schema.class_index(options.positive);
    if (!index) {
        throw validation_error("'" + options.positive + "' is not a class of '" +
                               schema.decision().name + "'");
    }
    return index;
}

int cmd_induce(const Options& options, std::ostream& out) {
    const AttributeSchema schema = resolve_schema(options.schema_name);
    std::string table_bytes;
    const DecisionTable table = load_table(options, schema, table_bytes);

    InductionConfig config;
    config.scope = options.scope == "full" ? InductionScope::full_table
                                           : InductionScope::object_related;
    config.algorithm = options.technique == "ga_rules" ? InductionAlgorithm::genetic
                                                       : InductionAlgorithm::johnson;
    config.ga = effective_ga(options);
    config.policies = parse_policies(options);
    const RuleModel model = induce_rules(table, config);

    write_file_atomic(options.out_path, model_to_text(model));

    const std::string digest = config_digest("induce", options, {table_bytes});
    std::ostringstream report;
    emit_header(report, "induce", options, digest);
    if (options.format == "kv") {
        report << "seed=" << options.seed << '\n';
        report << "table=" << options.table_path << '\n';
        report << "n=" << table.object_count() << '\n';
        report << "technique=" << options.technique << '\n';
        report << "scope=" << options.scope << '\n';
        report << "out=" << options.out_path << '\n';
        report << "rules=" << model.rule_count() << '\n';
    } else {
        report << "table: " << options.table_path << " (" << table.object_count()
               << " objects)\n";
        report << "technique: " << options.technique << "  scope: " << options.scope << '\n';
        report << "model written: " << options.out_path << '\n';
        report << "rules: " << model.rule_count() << '\n';
    }
    emit_rules(report, model, options.format);
    out << report.str();
    return kExitOk;
}

int cmd_model_show(const Options& options, std::ostream& out) {
    std::string model_bytes;
    const RuleModel model = load_model(options.model_name, model_bytes);
    const std::string digest = config_digest("model show", options, {model_bytes});

    std::ostringstream report;
    emit_header(report, "model show", options, digest);
    const AttributeSchema& schema = model.schema();
    std::string sizes;
    for (std::size_t c = 0; c < schema.class_count(); ++c) {
        if (c > 0) sizes += ", ";
        sizes += schema.class_name(c) + "=" + std::to_string(model.class_sizes()[c]);
    }
    const RulePolicies& policies = model.policies();
    const std::string policy_text =
        std::string("default=") +
        (policies.default_policy == DefaultPolicy::abstain ? "abstain" : "majority_class") +
        ", conflict=" +
        (policies.conflict == ConflictPolicy::support_voting ? "support_voting" : "first_match") +
        ", tie=" + (policies.tie == TiePolicy::first_class ? "first_class" : "last_class");
    if (options.format == "kv") {
        report << "model=" << options.model_name << '\n';
        report << "n_train=" << model.n_train() << '\n';
        report << "class_sizes=" << sizes << '\n';
        report << "policies=" << policy_text << '\n';
        report << "rules=" << model.rule_count() << '\n';
    } else {
        report << "model: " << options.model_name << '\n';
        report << "n_train: " << model.n_train() << '\n';
        report << "class sizes: " << sizes << '\n';
        report << "policies: " << policy_text << '\n';
        report << "rules: " << model.rule_count() << '\n';
    }
    emit_rules(report, model, options.format);
    out << report.str();
    return kExitOk;
}

int cmd_classify(const Options& options, std::ostream& out) {
    std::string model_bytes;
    RuleModel model = load_model(options.model_name, model_bytes);

    const std::string table_bytes = read_file(options.table_path);
    RecordSet records;
    {
        std::istringstream in(table_bytes);
        try {
            records = read_records(in, model.schema());
        } catch (const validation_error& e) {
            throw validation_error(options.table_path + ": " + e.what());
        }
    }

    const std::string digest = config_digest("classify", options, {model_bytes, table_bytes});
    std::ostringstream report;
    emit_header(report, "classify", options, digest);

    const AttributeSchema& schema = model.schema();
    std::vector<std::size_t> per_class(schema.class_count(), 0);
    std::size_t abstained = 0;
    for (std::size_t i = 0; i < records.rows.size(); ++i) {
        const Classification result = classify(model, records.rows[i]);
        std::string fired = "-";
        if (!result.fired_rule_ids.empty()) {
            fired.clear();
            for (std::size_t f = 0; f < result.fired_rule_ids.size(); ++f) {
                if (f > 0) fired += ',';
                fired += std::to_string(result.fired_rule_ids[f]);
            }
        }
        std::string tally;
        for (std::size_t c = 0; c < result.tally.size(); ++c) {
            if (c > 0) tally += ',';
            tally += schema.class_name(c) + ":" + std::to_string(result.tally[c]);
        }
        std::string decision = "abstain";
        if (result.decision) {
            decision = schema.class_name(*result.decision);
            ++per_class[*result.decision];
        } else {
            ++abstained;
        }
        if (options.format == "kv") {
            report << "record." << i + 1 << ".decision=" << decision << '\n';
            report << "record." << i + 1 << ".fired=" << fired << '\n';
            report << "record." << i + 1 << ".tally=" << tally << '\n';
        } else {
            report << "record " << i + 1 << ": " << decision << " fired=" << fired
                   << " tally=" << tally << '\n';
        }
    }
    if (options.format == "kv") {
        for (std::size_t c = 0; c < schema.class_count(); ++c) {
            report << "summary." << schema.class_name(c) << '=' << per_class[c] << '\n';
        }
        report << "summary.abstain=" << abstained << '\n';
    } else {
        report << "summary:";
        for (std::size_t c = 0; c < schema.class_count(); ++c) {
            report << ' ' << schema.class_name(c) << '=' << per_class[c];
        }
        report << " abstain=" << abstained << '\n';
    }

    if (!options.out_path.empty()) {
        write_file_atomic(options.out_path, report.str());
    } else {
        out << report.str();
    }
    return kExitOk;
}

EvaluationConfig evaluation_config(const Options& options, const AttributeSchema& schema) {
    EvaluationConfig config;
    config.k = options.k;
    config.seed = options.seed;
    config.stratified = options.stratified;
    config.ga = effective_ga(options);
    config.policies = parse_policies(options);
    config.tree.min_leaf = options.tree_min_leaf;
    config.tree.confidence = options.tree_confidence;
    config.positive_class = resolve_positive(options, schema);
    return config;
}

ConfusionMatrix read_matrix_file(const std::string& content, const std::string& path) {
    ConfusionMatrix matrix;
    bool tp = false, tn = false, fp = false, fn = false;
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        const std::string text(trim(line));
        if (text.empty() || text.front() == '#') continue;
        const std::size_t eq = text.find('=');
        if (eq == std::string::npos) {
            throw validation_error(path + ": matrix line '" + text + "' is not key=value");
        }
        const std::string key(trim(text.substr(0, eq)));
        const auto value = detail::parse_integer(text.substr(eq + 1));
        if (!value || *value < 0) {
            throw validation_error(path + ": bad count in '" + text + "'");
        }
        const std::size_t count = static_cast<std::size_t>(*value);
        if (key == "tp") {
            matrix.tp = count;
            tp = true;
        } else if (key == "tn") {
            matrix.tn = count;
            tn = true;
        } else if (key == "fp") {
            matrix.fp = count;
            fp = true;
        } else if (key == "fn") {
            matrix.fn = count;
            fn = true;
        } else {
            throw validation_error(path + ": unknown matrix key '" + key + "'");
        }
    }
    if (!tp || !tn || !fp || !fn) {
        throw validation_error(path + ": matrix file needs tp, tn, fp and fn");
    }
    return matrix;
}

void emit_report(const Options& options, const std::string& command, const EvalReport& report,
                 const std::string& digest, std::ostream& out) {
    std::ostringstream text;
    emit_header(text, command, options, digest);
    text << (options.format == "kv" ? format_report_kv(report) : format_report_text(report));
    if (!options.out_path.empty()) {
        write_file_atomic(options.out_path, text.str());
    } else {
        out << text.str();
    }
}

int cmd_evaluate(const Options& options, std::ostream& out) {
    const int modes = (!options.matrix_path.empty() ? 1 : 0) +
                      (!options.model_name.empty() ? 1 : 0) +
                      (!options.techniques.empty() ? 1 : 0);
    if (modes != 1) {
        throw validation_error(
            "evaluate needs exactly one of --matrix, --model (with --table), or --technique "
            "(with --table)");
    }

    if (!options.matrix_path.empty()) {
        const std::string content = read_file(options.matrix_path);
        const ConfusionMatrix matrix = read_matrix_file(content, options.matrix_path);
        EvalReport report;
        report.technique = "matrix";
        report.matrix = matrix;
        report.scores = metrics(matrix);
        report.n = matrix.total();
        report.k = 0;
        report.seed = options.seed;
        report.stratified = false;
        report.positive_class = "positive";
        emit_report(options, "evaluate", report, config_digest("evaluate", options, {content}),
                    out);
        return kExitOk;
    }

    if (options.table_path.empty()) {
        throw validation_error("evaluate needs --table with --model or --technique");
    }

    if (!options.model_name.empty()) {
        std::string model_bytes;
        const RuleModel model = load_model(options.model_name, model_bytes);
        std::string table_bytes;
        const DecisionTable table = load_table(options, model.schema(), table_bytes);
        const EvalReport report =
            evaluate_model(model, table, resolve_positive(options, model.schema()));
        emit_report(options, "evaluate", report,
                    config_digest("evaluate", options, {model_bytes, table_bytes}), out);
        return kExitOk;
    }

    const auto technique = technique_from_name(options.techniques.front());
    if (!technique) {
        throw validation_error("unknown technique '" + options.techniques.front() + "'");
    }
    const AttributeSchema schema = resolve_schema(options.schema_name);
    std::string table_bytes;
    const DecisionTable table = load_table(options, schema, table_bytes);
    const EvalReport report =
        cross_validate(*technique, table, evaluation_config(options, schema));
    emit_report(options, "evaluate", report, config_digest("evaluate", options, {table_bytes}),
                out);
    return kExitOk;
}

TechniqueCandidate parse_candidate(const std::string& text) {
    const std::vector<std::string> parts = split(text, ':');
    if (parts.size() < 2 || parts.size() > 3) {
        throw validation_error("candidate '" + text + "' must be name:accuracy[:complexity]");
    }
    TechniqueCandidate candidate;
    candidate.name = std::string(trim(parts[0]));
    if (candidate.name.empty()) {
        throw validation_error("candidate '" + text + "' has an empty name");
    }
    const auto accuracy = detail::parse_double(parts[1]);
    if (!accuracy) {
        throw validation_error("candidate '" + text + "' has a bad accuracy");
    }
    candidate.accuracy = *accuracy;
    if (parts.size() == 3) {
        const auto complexity = detail::parse_integer(parts[2]);
        if (!complexity || *complexity < 0) {
            throw validation_error("candidate '" + text + "' has a bad complexity");
        }
        candidate.complexity = static_cast<std::size_t>(*complexity);
    }
    return candidate;
}

int cmd_compare(const Options& options, std::ostream& out) {
    const bool candidate_mode = !options.candidates.empty();
    if (candidate_mode && !options.techniques.empty()) {
        throw validation_error("compare takes either --candidate or --technique, not both");
    }
    if (!candidate_mode && options.techniques.size() < 2) {
        throw validation_error("compare needs at least two --technique names (or --candidate)");
    }

    std::vector<TechniqueCandidate> candidates;
    std::vector<std::pair<std::string, std::string>> failures;  // name, message
    std::string digest;

    if (candidate_mode) {
        for (const auto& text : options.candidates) candidates.push_back(parse_candidate(text));
        digest = config_digest("compare", options, {});
    } else {
        if (options.table_path.empty()) {
            throw validation_error("compare needs --table with --technique");
        }
        const AttributeSchema schema = resolve_schema(options.schema_name);
        std::string table_bytes;
        const DecisionTable table = load_table(options, schema, table_bytes);
        const EvaluationConfig config = evaluation_config(options, schema);
        for (const auto& name : options.techniques) {
            const auto technique = technique_from_name(name);
            if (!technique) {
                throw validation_error("unknown technique '" + name + "'");
            }
            try {
                const EvalReport report = cross_validate(*technique, table, config);
                candidates.push_back({name, report.scores.accuracy, report.complexity});
            } catch (const validation_error& e) {
                failures.emplace_back(name, e.what());
            }
        }
        digest = config_digest("compare", options, {table_bytes});
    }

    if (candidates.empty()) {
        std::string joined;
        for (const auto& [name, message] : failures) {
            joined += " " + name + ": " + message;
        }
        throw validation_error("no technique produced a result;" + joined);
    }

    const SelectionOutcome outcome = select_technique(candidates, options.benchmark);

    std::ostringstream report;
    emit_header(report, "compare", options, digest);
    if (options.format == "kv") {
        report << "seed=" << options.seed << '\n';
        report << "benchmark=" << detail::format_exact(options.benchmark) << '\n';
        for (std::size_t i = 0; i < outcome.ranking.size(); ++i) {
            const SelectionEntry& entry = outcome.ranking[i];
            report << "candidate." << i + 1 << ".name=" << entry.candidate.name << '\n';
            report << "candidate." << i + 1
                   << ".accuracy=" << detail::format_exact(entry.candidate.accuracy) << '\n';
            report << "candidate." << i + 1 << ".complexity="
                   << (entry.candidate.complexity ? std::to_string(*entry.candidate.complexity)
                                                  : "-")
                   << '\n';
            report << "candidate." << i + 1 << ".accepted="
                   << (entry.accepted ? "true" : "false") << '\n';
            report << "candidate." << i + 1 << ".reason=" << entry.reason << '\n';
        }
        for (std::size_t i = 0; i < failures.size(); ++i) {
            report << "failed." << i + 1 << '=' << failures[i].first << ": "
                   << failures[i].second << '\n';
        }
        report << "accepted=" << (outcome.accepted ? *outcome.accepted : "none") << '\n';
    } else {
        report << "seed: " << options.seed << '\n';
        report << "benchmark: " << format_fixed(options.benchmark, 2) << "%\n";
        for (const SelectionEntry& entry : outcome.ranking) {
            report << entry.candidate.name << ": accuracy="
                   << format_fixed(entry.candidate.accuracy, 4) << "% complexity="
                   << (entry.candidate.complexity ? std::to_string(*entry.candidate.complexity)
                                                  : "-")
                   << " " << entry.reason << '\n';
        }
        for (const auto& [name, message] : failures) {
            report << name << ": failed: " << message << '\n';
        }
        report << "accepted: " << (outcome.accepted ? *outcome.accepted : "none") << '\n';
    }

    if (!options.out_path.empty()) {
        write_file_atomic(options.out_path, report.str());
    } else {
        out << report.str();
    }
    return outcome.accepted ? kExitOk : kExitBenchmark;
}

void add_format_options(CLI::App* cmd, Options& options) {
    cmd->add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"text", "kv"}))
        ->capture_default_str();
    cmd->add_option("--out", options.out_path, "Write the output to this file (atomically)");
}

void add_seed_option(CLI::App* cmd, Options& options) {
    cmd->add_option("--seed", options.seed, "Random seed (also via ROUGHTEAM_SEED)")
        ->capture_default_str();
}

void add_policy_options(CLI::App* cmd, Options& options) {
    cmd->add_option("--policy-default", options.policy_default,
                    "What to do when no rule fires")
        ->check(CLI::IsMember({"abstain", "majority_class"}))
        ->capture_default_str();
    cmd->add_option("--policy-conflict", options.policy_conflict,
                    "How to combine several firing rules")
        ->check(CLI::IsMember({"support_voting", "first_match"}))
        ->capture_default_str();
    cmd->add_option("--policy-tie", options.policy_tie, "Which class wins exact ties")
        ->check(CLI::IsMember({"first_class", "last_class"}))
        ->capture_default_str();
}

void add_ga_options(CLI::App* cmd, Options& options) {
    cmd->add_option("--ga-population", options.ga.population_size, "GA population size")
        ->capture_default_str();
    cmd->add_option("--ga-generations", options.ga.generations, "GA generations")
        ->capture_default_str();
    cmd->add_option("--ga-crossover", options.ga.crossover_rate, "GA crossover rate")
        ->capture_default_str();
    cmd->add_option("--ga-mutation", options.ga_mutation,
                    "GA per-bit mutation rate (default 1/#attributes)");
    cmd->add_option("--ga-parsimony", options.ga.parsimony_weight, "GA parsimony weight")
        ->capture_default_str();
    cmd->add_option("--ga-elitism", options.ga.elitism, "GA elite survivors per generation")
        ->capture_default_str();
}

void add_eval_options(CLI::App* cmd, Options& options) {
    cmd->add_option("--k", options.k, "Cross-validation fold count")->capture_default_str();
    cmd->add_flag("--stratified,!--no-stratified", options.stratified,
                  "Keep class proportions per fold");
    cmd->add_option("--positive", options.positive,
                    "Decision class treated as positive (default: last)");
    cmd->add_option("--tree-min-leaf", options.tree_min_leaf,
                    "Smallest admissible branch size for tree splits")
        ->capture_default_str();
    cmd->add_option("--tree-confidence", options.tree_confidence,
                    "Pessimistic pruning confidence")
        ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        Options options;
        options.seed = default_seed_from_env();
        options.ga.seed = options.seed;

        CLI::App app{"rough-set rule induction and classifier comparison"};
        app.require_subcommand(1);

        CLI::App* induce = app.add_subcommand("induce", "Induce decision rules from a table");
        induce->add_option("--table", options.table_path, "Decision table (CSV)")->required();
        induce->add_option("--schema", options.schema_name,
                           "Schema: built-in name or file path")
            ->capture_default_str();
        induce->add_option("--technique", options.technique, "Rule induction algorithm")
            ->check(CLI::IsMember({"ja_rules", "ga_rules"}))
            ->capture_default_str();
        induce->add_option("--scope", options.scope, "Reduct scope")
            ->check(CLI::IsMember({"object", "full"}))
            ->capture_default_str();
        induce->add_option("--out", options.out_path, "Model file to write")->required();
        induce->add_option("--format", options.format, "Report format")
            ->check(CLI::IsMember({"text", "kv"}))
            ->capture_default_str();
        add_seed_option(induce, options);
        add_policy_options(induce, options);
        add_ga_options(induce, options);

        CLI::App* classify_cmd =
            app.add_subcommand("classify", "Classify records with a rule model");
        classify_cmd->add_option("--model", options.model_name,
                                 "Model file or built-in model name")
            ->required();
        classify_cmd->add_option("--table", options.table_path,
                                 "Records to classify (decision column optional)")
            ->required();
        add_format_options(classify_cmd, options);
        add_seed_option(classify_cmd, options);
        add_policy_options(classify_cmd, options);

        CLI::App* evaluate =
            app.add_subcommand("evaluate", "Evaluate a technique, a model, or a matrix");
        evaluate->add_option("--table", options.table_path, "Labeled decision table (CSV)");
        evaluate->add_option("--schema", options.schema_name,
                             "Schema: built-in name or file path")
            ->capture_default_str();
        evaluate->add_option("--technique", options.techniques,
                             "Technique to cross-validate")
            ->check(CLI::IsMember({"ja_rules", "ga_rules", "c45", "logistic"}));
        evaluate->add_option("--model", options.model_name,
                             "Rule model to apply to the table");
        evaluate->add_option("--matrix", options.matrix_path,
                             "Confusion matrix file (metrics only)");
        add_format_options(evaluate, options);
        add_seed_option(evaluate, options);
        add_eval_options(evaluate, options);
        add_policy_options(evaluate, options);
        add_ga_options(evaluate, options);

        CLI::App* compare = app.add_subcommand(
            "compare", "Cross-validate techniques and pick one against a benchmark");
        compare->add_option("--table", options.table_path, "Labeled decision table (CSV)");
        compare->add_option("--schema", options.schema_name,
                            "Schema: built-in name or file path")
            ->capture_default_str();
        compare->add_option("--technique", options.techniques,
                            "Technique to include (repeatable)")
            ->check(CLI::IsMember({"ja_rules", "ga_rules", "c45", "logistic"}));
        compare->add_option("--candidate", options.candidates,
                            "Precomputed candidate name:accuracy[:complexity] (repeatable)");
        compare->add_option("--benchmark", options.benchmark, "Accuracy benchmark in percent")
            ->capture_default_str();
        add_format_options(compare, options);
        add_seed_option(compare, options);
        add_eval_options(compare, options);
        add_policy_options(compare, options);
        add_ga_options(compare, options);

        CLI::App* model_cmd = app.add_subcommand("model", "Model utilities");
        model_cmd->require_subcommand(1);
        CLI::App* show = model_cmd->add_subcommand("show", "List a model's rules and statistics");
        show->add_option("model", options.model_name, "Model file or built-in model name")
            ->required();
        show->add_option("--format", options.format, "Output format")
            ->check(CLI::IsMember({"text", "kv"}))
            ->capture_default_str();
        add_seed_option(show, options);

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
        } catch (const CLI::CallForAllHelp& e) {
            return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
        } catch (const CLI::ParseError& e) {
            app.exit(e, out, err);
            return kExitUsage;
        }

        if (induce->parsed()) return cmd_induce(options, out);
        if (classify_cmd->parsed()) return cmd_classify(options, out);
        if (evaluate->parsed()) return cmd_evaluate(options, out);
        if (compare->parsed()) return cmd_compare(options, out);
        if (model_cmd->parsed() && show->parsed()) return cmd_model_show(options, out);
        err << "error: no command given\n";
        return kExitUsage;
    } catch (const validation_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "unexpected error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

}  // namespace roughteam::cli
