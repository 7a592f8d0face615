// Acceptance gate: ten checks covering the headline behaviours, one PASS or
// FAIL line each. Tolerances and time limits are pinned right here; the
// process exits non-zero if any check fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "roughteam/cli.hpp"
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
#include "test_util.hpp"

using namespace roughteam;

namespace {

int g_failures = 0;

using CheckFn = std::vector<std::string> (*)();

void run_criterion(int number, const std::string& title, double limit_seconds, CheckFn check) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::string> problems;
    try {
        problems = check();
    } catch (const std::exception& e) {
        problems.push_back(std::string("unexpected exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0.0 && seconds > limit_seconds) {
        problems.push_back("took " + std::to_string(seconds) + "s, limit " +
                           std::to_string(limit_seconds) + "s");
    }
    std::printf("criterion %2d: %s %s [%.3fs]\n", number, problems.empty() ? "PASS" : "FAIL",
                title.c_str(), seconds);
    for (std::size_t i = 0; i < problems.size() && i < 5; ++i) {
        std::printf("    - %s\n", problems[i].c_str());
    }
    if (problems.size() > 5) {
        std::printf("    - (%zu more)\n", problems.size() - 5);
    }
    if (!problems.empty()) ++g_failures;
}

double rounded6(double value) { return std::round(value * 1e6) / 1e6; }

// --- criterion 1: coverage and final decisions of the built-in model -------

struct PinnedCoverage {
    std::size_t id;
    double lhs;
    double ineffective;
    double effective;
    std::size_t final_class;
};

std::vector<std::string> check_model_coverage() {
    std::vector<std::string> problems;
    const RuleModel& model = embedded_team_model();
    const std::vector<PinnedCoverage> pinned = {
        {9, 0.019048, 0.016667, 0.022222, 1},  {11, 0.304762, 0.316667, 0.288889, 0},
        {12, 0.133333, 0.150000, 0.111111, 0}, {14, 0.133333, 0.150000, 0.111111, 0},
        {15, 0.019048, 0.016667, 0.022222, 1}, {17, 0.133333, 0.133333, 0.133333, 0},
        {19, 0.142857, 0.150000, 0.133333, 0},
    };
    const double tol = 5e-7;
    std::set<std::size_t> ambiguous;
    for (const PinnedCoverage& expect : pinned) {
        ambiguous.insert(expect.id);
        const DecisionRule& rule = model.rule(expect.id);
        const double lhs = rounded6(lhs_coverage(rule, model));
        const std::vector<double> rhs = rhs_coverage(rule, model);
        if (std::abs(lhs - expect.lhs) > tol) {
            problems.push_back("rule " + std::to_string(expect.id) + ": lhs coverage " +
                               std::to_string(lhs));
        }
        if (std::abs(rounded6(rhs[0]) - expect.ineffective) > tol ||
            std::abs(rounded6(rhs[1]) - expect.effective) > tol) {
            problems.push_back("rule " + std::to_string(expect.id) + ": rhs coverage off");
        }
        if (rule.final_decision != expect.final_class) {
            problems.push_back("rule " + std::to_string(expect.id) + ": wrong final decision");
        }
    }
    for (std::size_t id = 1; id <= model.rule_count(); ++id) {
        const DecisionRule& rule = model.rule(id);
        if (rule.bi_dimensional() != (ambiguous.count(id) > 0)) {
            problems.push_back("rule " + std::to_string(id) + ": unexpected dimensionality");
        }
        if (rule.uni_dimensional()) {
            std::size_t sole = 0;
            for (std::size_t c = 0; c < rule.rhs_support.size(); ++c) {
                if (rule.rhs_support[c] > 0) sole = c;
            }
            if (rule.final_decision != sole) {
                problems.push_back("rule " + std::to_string(id) + ": final != sole class");
            }
        }
    }
    return problems;
}

// --- criterion 2: the reference confusion matrix and its metrics -----------

std::vector<std::string> check_metrics() {
    std::vector<std::string> problems;
    const MetricSet scores = metrics({23, 60, 0, 22});
    const auto expect = [&](const char* name, std::optional<double> actual, double want,
                            double tol) {
        if (!actual || std::abs(*actual - want) > tol) {
            problems.push_back(std::string(name) + " = " +
                               (actual ? std::to_string(*actual) : "undefined") + ", want " +
                               std::to_string(want));
        }
    };
    expect("accuracy", scores.accuracy, 79.0476, 1e-4);
    if (!scores.precision || *scores.precision != 100.0) {
        problems.push_back("precision must be exactly 100");
    }
    expect("recall", scores.recall, 51.11, 0.01);
    expect("npv", scores.npv, 73.1707, 1e-4);
    expect("f1", scores.f1, 67.65, 0.01);
    return problems;
}

// --- criterion 3: technique selection against the benchmark ----------------

std::vector<std::string> check_selection() {
    std::vector<std::string> problems;
    const SelectionOutcome outcome = select_technique(
        {
            {"logistic", 67.6, std::nullopt},
            {"c45", 70.48, 8},
            {"ga_rules", 75.23, 48},
            {"ja_rules", 79.04, 24},
        },
        70.0);
    if (!outcome.accepted || *outcome.accepted != "ja_rules") {
        problems.push_back("accepted " + outcome.accepted.value_or("none") +
                           ", want ja_rules");
    }
    const std::vector<std::string> order = {"ja_rules", "ga_rules", "c45", "logistic"};
    for (std::size_t i = 0; i < outcome.ranking.size(); ++i) {
        if (outcome.ranking[i].candidate.name != order[i]) {
            problems.push_back("ranking position " + std::to_string(i + 1) + " is " +
                               outcome.ranking[i].candidate.name);
        }
    }
    if (outcome.ranking.size() == 4) {
        if (outcome.ranking[0].reason.find("accepted") != 0) {
            problems.push_back("winner reason missing 'accepted'");
        }
        if (outcome.ranking[3].reason.find("below") == std::string::npos) {
            problems.push_back("logistic reason must mention the benchmark miss");
        }
    }
    return problems;
}

// --- criterion 4: the CLI listing matches the checked-in transcription -----

struct ListedRule {
    std::string text;
    std::string lhs;
    std::string rhs;
};

std::vector<std::string> check_cli_listing() {
    std::vector<std::string> problems;
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"model", "show", kEmbeddedModelName}, out, err);
    if (code != 0) {
        problems.push_back("model show exited with " + std::to_string(code));
        return problems;
    }

    std::vector<ListedRule> listed;
    std::istringstream lines(out.str());
    std::string line;
    while (std::getline(lines, line)) {
        const std::size_t dot = line.find(". ");
        const std::size_t bracket = line.find(" [lhs=");
        if (dot == std::string::npos || bracket == std::string::npos || dot > 4) continue;
        ListedRule rule;
        rule.text = line.substr(dot + 2, bracket - dot - 2);
        const std::size_t lhs_end = line.find(';', bracket);
        rule.lhs = line.substr(bracket + 6, lhs_end - bracket - 6);
        const std::size_t rhs_start = line.find("rhs=", lhs_end) + 4;
        rule.rhs = line.substr(rhs_start, line.find(';', rhs_start) - rhs_start);
        listed.push_back(rule);
    }

    std::ifstream reference(std::string(TESTS_DATA_DIR) + "/table5_rules.txt");
    if (!reference) {
        problems.push_back("cannot open the transcription file");
        return problems;
    }
    std::vector<ListedRule> expected;
    while (std::getline(reference, line)) {
        if (line.empty() || line.front() == '#') continue;
        const std::size_t first = line.find(" | ");
        const std::size_t second = line.find(" | ", first + 3);
        if (first == std::string::npos || second == std::string::npos) {
            problems.push_back("malformed transcription line: " + line);
            continue;
        }
        expected.push_back({line.substr(0, first),
                            line.substr(first + 3, second - first - 3),
                            line.substr(second + 3)});
    }

    if (listed.size() != 24 || expected.size() != 24) {
        problems.push_back("rule count: listed " + std::to_string(listed.size()) +
                           ", transcription " + std::to_string(expected.size()) +
                           ", want 24 each");
        return problems;
    }
    for (std::size_t i = 0; i < 24; ++i) {
        if (listed[i].text != expected[i].text) {
            problems.push_back("rule " + std::to_string(i + 1) + " text: '" + listed[i].text +
                               "' vs '" + expected[i].text + "'");
        }
        if (listed[i].lhs != expected[i].lhs || listed[i].rhs != expected[i].rhs) {
            problems.push_back("rule " + std::to_string(i + 1) + " supports: " + listed[i].lhs +
                               "/" + listed[i].rhs + " vs " + expected[i].lhs + "/" +
                               expected[i].rhs);
        }
    }
    return problems;
}

// --- criterion 5: Johnson reducts are minimal covers -----------------------

std::vector<std::string> check_johnson_minimality() {
    std::vector<std::string> problems;
    RandomSource rng(20250815);
    for (int round = 0; round < 200; ++round) {
        const AttributeSchema schema = testutil::random_schema(rng, 5, 3, 3);
        const std::size_t n = 2 + rng.next_below(7);
        const DecisionTable table = testutil::random_table(rng, schema, n);
        const DiscernibilityMatrix matrix = discernibility_matrix(table, true);
        std::vector<AttrMask> masks;
        for (const auto& entry : matrix.entries) masks.push_back(entry.attrs);
        const Reduct reduct = johnson_reduct(matrix);
        if (!covers_all(reduct.attrs, masks)) {
            problems.push_back("table " + std::to_string(round) + ": reduct does not cover");
            continue;
        }
        for (std::size_t a = 0; a < matrix.attribute_count; ++a) {
            const AttrMask bit = AttrMask{1} << a;
            if ((reduct.attrs & bit) != 0 && covers_all(reduct.attrs & ~bit, masks)) {
                problems.push_back("table " + std::to_string(round) + ": attribute " +
                                   std::to_string(a) + " is redundant");
            }
        }
    }
    return problems;
}

// --- criterion 6: the GA recovers the exhaustive reduct sets ---------------

std::vector<std::string> check_ga_vs_exhaustive() {
    std::vector<std::string> problems;
    RandomSource rng(424242);
    int matches = 0;
    const int rounds = 50;
    for (int round = 0; round < rounds; ++round) {
        const AttributeSchema schema = testutil::random_schema(rng, 4, 3, 3);
        const std::size_t n = 2 + rng.next_below(7);
        const DecisionTable table = testutil::random_table(rng, schema, n);
        const DiscernibilityMatrix matrix = discernibility_matrix(table, true);

        std::set<AttrMask> exhaustive;
        for (const Reduct& reduct : exhaustive_reducts(matrix)) exhaustive.insert(reduct.attrs);
        GAParams params;
        params.seed = rng.next_u64();
        std::set<AttrMask> genetic;
        for (const Reduct& reduct : ga_reducts(matrix, params)) genetic.insert(reduct.attrs);

        for (const AttrMask mask : genetic) {
            if (exhaustive.count(mask) == 0) {
                problems.push_back("table " + std::to_string(round) +
                                   ": GA produced a non-minimal cover");
            }
        }
        if (genetic == exhaustive) ++matches;
    }
    if (matches < 48) {  // at least 95% of 50 runs
        problems.push_back("GA recovered the full reduct set in only " +
                           std::to_string(matches) + "/50 runs");
    }
    return problems;
}

// --- criterion 7: induced rules classify their training data perfectly -----

std::vector<std::string> check_training_consistency() {
    std::vector<std::string> problems;
    RandomSource rng(5150);
    for (int round = 0; round < 100; ++round) {
        const AttributeSchema schema = testutil::random_schema(rng, 5, 3, 3);
        const std::size_t n = 4 + rng.next_below(17);
        const DecisionTable table = testutil::consistent_table(rng, schema, n);
        const RuleModel model = induce_rules(table);

        for (std::size_t id = 1; id <= table.object_count(); ++id) {
            const Classification result = classify(model, table.row(id));
            if (result.decision != table.decision(id)) {
                problems.push_back("table " + std::to_string(round) + ": object " +
                                   std::to_string(id) + " misclassified");
            }
        }
        for (std::size_t r = 1; r <= model.rule_count(); ++r) {
            const DecisionRule& rule = model.rule(r);
            std::vector<std::size_t> rhs(schema.class_count(), 0);
            std::size_t lhs = 0;
            for (std::size_t id = 1; id <= table.object_count(); ++id) {
                bool match = true;
                for (const RuleConjunct& conjunct : rule.antecedent) {
                    if (table.value(id, conjunct.attribute) != conjunct.value) {
                        match = false;
                        break;
                    }
                }
                if (match) {
                    ++lhs;
                    ++rhs[table.decision(id)];
                }
            }
            if (lhs != rule.lhs_support || rhs != rule.rhs_support) {
                problems.push_back("table " + std::to_string(round) + ": rule " +
                                   std::to_string(r) + " supports disagree with a recount");
            }
        }
    }
    return problems;
}

// --- criterion 8: the logistic baseline ------------------------------------

std::vector<std::string> check_logistic() {
    std::vector<std::string> problems;
    const AttributeSchema schema({{"x", {"x1", "x2"}}}, {"d", {"n", "y"}});
    std::vector<TableRow> rows;
    for (int i = 0; i < 10; ++i) rows.push_back(TableRow{{0}, 0});
    for (int i = 0; i < 30; ++i) rows.push_back(TableRow{{0}, 1});
    for (int i = 0; i < 30; ++i) rows.push_back(TableRow{{1}, 0});
    for (int i = 0; i < 10; ++i) rows.push_back(TableRow{{1}, 1});
    const DecisionTable square(schema, rows);
    const LogisticModel closed = fit_logistic(square);
    if (std::abs(closed.intercept - std::log(27.0)) > 1e-6) {
        problems.push_back("intercept " + std::to_string(closed.intercept) + ", want ln 27");
    }
    if (std::abs(closed.coefficients[0] - std::log(1.0 / 9.0)) > 1e-6) {
        problems.push_back("slope " + std::to_string(closed.coefficients[0]) + ", want ln 1/9");
    }

    RandomSource rng(8086);
    for (int round = 0; round < 20; ++round) {
        AttributeSchema random = testutil::random_schema(rng, 3, 3, 2);
        while (random.class_count() != 2) random = testutil::random_schema(rng, 3, 3, 2);
        const DecisionTable table = testutil::random_table(rng, random, 10 + rng.next_below(21));

        std::vector<double> beta(random.attribute_count() + 1);
        for (double& b : beta) b = rng.next_double() * 2.0 - 1.0;
        const std::vector<double> score = logistic_score(table, beta);
        const double h = 1e-5;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            std::vector<double> up = beta;
            std::vector<double> down = beta;
            up[j] += h;
            down[j] -= h;
            const double fd =
                (logistic_log_likelihood(table, up) - logistic_log_likelihood(table, down)) /
                (2.0 * h);
            if (std::abs(score[j] - fd) > 1e-4 * std::max(1.0, std::abs(fd))) {
                problems.push_back("table " + std::to_string(round) + ": score[" +
                                   std::to_string(j) + "] disagrees with finite differences");
            }
        }

        const LogisticModel model = fit_logistic(table);
        for (std::size_t i = 1; i < model.log_likelihood_history.size(); ++i) {
            if (model.log_likelihood_history[i] <
                model.log_likelihood_history[i - 1] - 1e-12) {
                problems.push_back("table " + std::to_string(round) +
                                   ": log-likelihood decreased");
            }
        }
    }
    return problems;
}

// --- criterion 9: the decision-tree baseline --------------------------------

std::size_t depth_of(const TreeNode& node) {
    std::size_t deepest = 0;
    for (const auto& child : node.children) {
        if (child) deepest = std::max(deepest, depth_of(*child) + 1);
    }
    return deepest;
}

std::vector<std::string> check_tree() {
    std::vector<std::string> problems;
    const AttributeSchema xor_schema({{"a", {"a1", "a2"}}, {"b", {"b1", "b2"}}},
                                     {"d", {"n", "y"}});
    const DecisionTable parity(xor_schema, {TableRow{{0, 0}, 0}, TableRow{{0, 1}, 1},
                                            TableRow{{1, 0}, 1}, TableRow{{1, 1}, 0}});
    const DecisionTree grown = grow_tree(parity);
    if (rule_count(grown) != 4) {
        problems.push_back("parity tree has " + std::to_string(rule_count(grown)) +
                           " leaves, want 4");
    }
    if (depth_of(*grown.root) != 2) {
        problems.push_back("parity tree depth " + std::to_string(depth_of(*grown.root)) +
                           ", want 2");
    }
    for (std::size_t id = 1; id <= parity.object_count(); ++id) {
        if (predict_tree(grown, parity.row(id)) != parity.decision(id)) {
            problems.push_back("parity object " + std::to_string(id) + " misclassified");
        }
    }

    RandomSource rng(90210);
    for (int round = 0; round < 50; ++round) {
        const AttributeSchema schema = testutil::random_schema(rng, 4, 3, 3);
        const DecisionTable table = testutil::random_table(rng, schema, 6 + rng.next_below(15));
        std::vector<std::size_t> ids;
        for (std::size_t id = 1; id <= table.object_count(); ++id) ids.push_back(id);

        for (std::size_t a = 0; a < schema.attribute_count(); ++a) {
            const SplitScore score = evaluate_split(table, ids, a);
            std::vector<std::size_t> parent(schema.class_count(), 0);
            for (const std::size_t id : ids) ++parent[table.decision(id)];
            double child_term = 0.0;
            for (std::size_t v = 0; v < schema.condition(a).values.size(); ++v) {
                std::vector<std::size_t> child(schema.class_count(), 0);
                std::size_t size = 0;
                for (const std::size_t id : ids) {
                    if (table.value(id, a) == v) {
                        ++child[table.decision(id)];
                        ++size;
                    }
                }
                if (size > 0) {
                    child_term += static_cast<double>(size) /
                                  static_cast<double>(ids.size()) * entropy(child);
                }
            }
            const double oracle = entropy(parent) - child_term;
            if (std::abs(score.gain - oracle) > 1e-9) {
                problems.push_back("table " + std::to_string(round) + ": gain of attribute " +
                                   std::to_string(a) + " off by " +
                                   std::to_string(std::abs(score.gain - oracle)));
            }
        }

        const DecisionTree unpruned = grow_tree(table);
        DecisionTree pruned = grow_tree(table);
        prune_tree(pruned);
        if (rule_count(pruned) > rule_count(unpruned)) {
            problems.push_back("table " + std::to_string(round) + ": pruning added leaves");
        }
        const double before =
            pessimistic_error_estimate(*unpruned.root, unpruned.params.confidence);
        const double after = pessimistic_error_estimate(*pruned.root, pruned.params.confidence);
        if (after > before + 1e-9) {
            problems.push_back("table " + std::to_string(round) +
                               ": pruning raised the error estimate");
        }
    }
    return problems;
}

// --- criterion 10: seed-for-seed reproducibility ----------------------------
// The holdout records behind the original accuracy figures are not
// available, so this check substitutes what is verifiable here: identical
// seeds must reproduce byte-identical models and reports end to end.

std::vector<std::string> check_determinism() {
    std::vector<std::string> problems;
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "roughteam-acceptance";
    fs::create_directories(dir);
    const fs::path schema_path = dir / "accept.schema";
    const fs::path table_path = dir / "accept.csv";
    {
        std::ofstream schema(schema_path, std::ios::binary | std::ios::trunc);
        schema << "attribute=a:a1|a2\nattribute=b:b1|b2\nattribute=c:c1|c2\n"
               << "decision=d:n|y\n";
        std::ofstream table(table_path, std::ios::binary | std::ios::trunc);
        table << "a,b,c,d\n";
        RandomSource rng(64);
        for (int i = 0; i < 24; ++i) {
            const int a = static_cast<int>(rng.next_below(2));
            const int b = static_cast<int>(rng.next_below(2));
            const int c = static_cast<int>(rng.next_below(2));
            table << "a" << a + 1 << ",b" << b + 1 << ",c" << c + 1 << ","
                  << ((a ^ b) == 1 ? "y" : "n") << "\n";
        }
    }

    const auto run = [&](const std::vector<std::string>& args, std::string& captured) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        captured = out.str();
        if (code != 0) {
            problems.push_back("command exited with " + std::to_string(code) + ": " + err.str());
        }
        return code == 0;
    };

    const fs::path model_a = dir / "a.model";
    const fs::path model_b = dir / "b.model";
    const std::vector<std::string> induce_base = {
        "induce", "--table", table_path.string(), "--schema", schema_path.string(),
        "--technique", "ga_rules", "--seed", "31337"};
    std::string report_a;
    std::string report_b;
    auto with_out = [&](const fs::path& path) {
        std::vector<std::string> args = induce_base;
        args.push_back("--out");
        args.push_back(path.string());
        return args;
    };
    if (run(with_out(model_a), report_a) && run(with_out(model_b), report_b)) {
        std::ifstream first(model_a, std::ios::binary);
        std::ifstream second(model_b, std::ios::binary);
        std::stringstream content_a;
        std::stringstream content_b;
        content_a << first.rdbuf();
        content_b << second.rdbuf();
        if (content_a.str() != content_b.str()) {
            problems.push_back("identical induce runs wrote different model files");
        }
        if (content_a.str().empty()) {
            problems.push_back("induce wrote an empty model file");
        }
    }

    const std::vector<std::string> evaluate_args = {
        "evaluate", "--table", table_path.string(), "--schema", schema_path.string(),
        "--technique", "ga_rules", "--k", "4", "--seed", "31337", "--format", "kv"};
    std::string eval_a;
    std::string eval_b;
    if (run(evaluate_args, eval_a) && run(evaluate_args, eval_b)) {
        if (eval_a != eval_b) {
            problems.push_back("identical evaluate runs produced different reports");
        }
        const EvalReport parsed = parse_report_kv(eval_a);
        if (parsed.seed != 31337) {
            problems.push_back("report does not carry the requested seed");
        }
    }

    std::string seeded;
    std::string reseeded;
    const std::vector<std::string> other_seed = {
        "induce", "--table", table_path.string(), "--schema", schema_path.string(),
        "--technique", "ga_rules", "--seed", "7", "--out", (dir / "c.model").string()};
    if (run(other_seed, seeded) && !seeded.empty()) {
        // Different seeds may legitimately coincide in output; only the
        // header line must differ because it embeds the seed.
        if (seeded == report_a) {
            problems.push_back("reports do not embed the seed");
        }
    }
    (void)reseeded;

    const std::string text = model_to_text(embedded_team_model());
    std::istringstream in(text);
    if (model_to_text(read_model(in)) != text) {
        problems.push_back("embedded model text does not round-trip byte-identically");
    }
    return problems;
}

}  // namespace

int main() {
    std::printf("acceptance checks (library %s)\n", kVersion);
    run_criterion(1, "built-in model coverage and final decisions", 1.0, check_model_coverage);
    run_criterion(2, "confusion-matrix metrics", 1.0, check_metrics);
    run_criterion(3, "benchmark-driven technique selection", 1.0, check_selection);
    run_criterion(4, "CLI listing matches the checked-in 24 rules", 5.0, check_cli_listing);
    run_criterion(5, "Johnson reducts cover minimally (200 tables)", 10.0,
                  check_johnson_minimality);
    run_criterion(6, "GA reducts recover exhaustive sets (50 tables)", 30.0,
                  check_ga_vs_exhaustive);
    run_criterion(7, "induced rules replay their training data (100 tables)", 10.0,
                  check_training_consistency);
    run_criterion(8, "logistic closed form, score and likelihood climb", 10.0, check_logistic);
    run_criterion(9, "tree parity, gain oracle and pruning monotonicity", 10.0, check_tree);
    run_criterion(10, "seed-for-seed byte reproducibility (reference data unavailable)", 10.0,
                  check_determinism);
    if (g_failures > 0) {
        std::printf("%d of 10 criteria FAILED\n", g_failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
