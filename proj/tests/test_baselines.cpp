#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "roughteam/errors.hpp"
#include "roughteam/logistic.hpp"
#include "roughteam/table.hpp"
#include "roughteam/tree.hpp"
#include "test_util.hpp"

using namespace roughteam;

namespace {

AttributeSchema binary_schema() {
    return AttributeSchema({{"x", {"x1", "x2"}}}, {"d", {"n", "y"}});
}

DecisionTable counted_table(const AttributeSchema& schema,
                            const std::vector<std::pair<TableRow, std::size_t>>& groups) {
    std::vector<TableRow> rows;
    for (const auto& [row, count] : groups) {
        for (std::size_t i = 0; i < count; ++i) rows.push_back(row);
    }
    return {schema, rows};
}

AttributeSchema xor_schema() {
    return AttributeSchema({{"a", {"a1", "a2"}}, {"b", {"b1", "b2"}}}, {"d", {"n", "y"}});
}

DecisionTable xor_table(std::size_t copies) {
    return counted_table(xor_schema(), {
                                           {TableRow{{0, 0}, 0}, copies},
                                           {TableRow{{0, 1}, 1}, copies},
                                           {TableRow{{1, 0}, 1}, copies},
                                           {TableRow{{1, 1}, 0}, copies},
                                       });
}

std::size_t tree_depth(const TreeNode& node) {
    std::size_t deepest = 0;
    for (const auto& child : node.children) {
        if (child) deepest = std::max(deepest, tree_depth(*child) + 1);
    }
    return deepest;
}

}  // namespace

TEST_CASE("the 2x2 logistic fit matches the closed form") {
    // Group counts 10/30/30/10 give odds 3 at x=1 and 1/3 at x=2, hence
    // B = ln(1/9) and A = ln(27).
    const AttributeSchema schema = binary_schema();
    const DecisionTable table = counted_table(schema, {
                                                          {TableRow{{0}, 0}, 10},
                                                          {TableRow{{0}, 1}, 30},
                                                          {TableRow{{1}, 0}, 30},
                                                          {TableRow{{1}, 1}, 10},
                                                      });
    const LogisticModel model = fit_logistic(table);
    CHECK(model.converged);
    CHECK(!model.separated);
    CHECK(model.intercept == doctest::Approx(std::log(27.0)).epsilon(1e-6));
    REQUIRE(model.coefficients.size() == 1);
    CHECK(model.coefficients[0] == doctest::Approx(std::log(1.0 / 9.0)).epsilon(1e-6));
}

TEST_CASE("a symmetric table fits a near-zero slope") {
    const AttributeSchema schema = binary_schema();
    const DecisionTable table = counted_table(schema, {
                                                          {TableRow{{0}, 0}, 20},
                                                          {TableRow{{0}, 1}, 20},
                                                          {TableRow{{1}, 0}, 20},
                                                          {TableRow{{1}, 1}, 20},
                                                      });
    const LogisticModel model = fit_logistic(table);
    CHECK(std::abs(model.coefficients[0]) < 1e-6);
    CHECK(std::abs(model.intercept) < 1e-6);
}

TEST_CASE("a large intercept with zero slope predicts near certainty") {
    LogisticModel model{binary_schema()};
    model.intercept = 20.0;
    model.coefficients = {0.0};
    TableRow record;
    record.values = {0};
    const LogisticPrediction prediction = predict_logistic(model, record);
    CHECK(prediction.probability > 0.999999);
    CHECK(prediction.class_index == 1);
}

TEST_CASE("perfectly separated data is flagged, not fitted forever") {
    const AttributeSchema schema = binary_schema();
    const DecisionTable table = counted_table(schema, {
                                                          {TableRow{{0}, 0}, 10},
                                                          {TableRow{{1}, 1}, 10},
                                                      });
    const LogisticModel model = fit_logistic(table);
    CHECK(model.separated);
    for (const double value : {model.intercept, model.coefficients[0]}) {
        CHECK(std::isfinite(value));
    }
}

TEST_CASE("the likelihood history climbs monotonically") {
    RandomSource rng(31);
    for (int round = 0; round < 10; ++round) {
        AttributeSchema schema = testutil::random_schema(rng, 3, 3, 2);
        while (schema.class_count() != 2) schema = testutil::random_schema(rng, 3, 3, 2);
        const DecisionTable table =
            testutil::random_table(rng, schema, 12 + rng.next_below(20));
        const LogisticModel model = fit_logistic(table);
        REQUIRE(!model.log_likelihood_history.empty());
        for (std::size_t i = 1; i < model.log_likelihood_history.size(); ++i) {
            CHECK(model.log_likelihood_history[i] >=
                  model.log_likelihood_history[i - 1] - 1e-12);
        }
    }
}

TEST_CASE("the analytic score matches central finite differences") {
    RandomSource rng(57);
    for (int round = 0; round < 10; ++round) {
        AttributeSchema schema = testutil::random_schema(rng, 3, 3, 2);
        while (schema.class_count() != 2) schema = testutil::random_schema(rng, 3, 3, 2);
        const DecisionTable table =
            testutil::random_table(rng, schema, 10 + rng.next_below(15));
        std::vector<double> beta(schema.attribute_count() + 1);
        for (double& b : beta) b = rng.next_double() * 2.0 - 1.0;
        const std::vector<double> score = logistic_score(table, beta);
        REQUIRE(score.size() == beta.size());
        const double h = 1e-5;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            std::vector<double> up = beta;
            std::vector<double> down = beta;
            up[j] += h;
            down[j] -= h;
            const double fd = (logistic_log_likelihood(table, up) -
                               logistic_log_likelihood(table, down)) /
                              (2.0 * h);
            CHECK(std::abs(score[j] - fd) <= 1e-4 * std::max(1.0, std::abs(fd)));
        }
    }
}

TEST_CASE("predicted probability is monotone in a positively weighted input") {
    const AttributeSchema schema =
        AttributeSchema({{"x", {"x1", "x2", "x3"}}}, {"d", {"n", "y"}});
    LogisticModel model{schema};
    model.intercept = -1.0;
    model.coefficients = {2.0};
    double previous = 0.0;
    for (std::size_t v = 0; v < 3; ++v) {
        TableRow record;
        record.values = {v};
        const double p = predict_logistic(model, record).probability;
        CHECK(p > previous);
        previous = p;
    }
}

TEST_CASE("logistic fitting rejects unusable input") {
    const AttributeSchema three({{"x", {"x1", "x2"}}}, {"d", {"n", "y", "m"}});
    const DecisionTable multi(three, {TableRow{{0}, 0}, TableRow{{1}, 1}, TableRow{{0}, 2}});
    CHECK_THROWS_AS(fit_logistic(multi), validation_error);

    const DecisionTable tiny(binary_schema(), {TableRow{{0}, 0}});
    CHECK_THROWS_AS(fit_logistic(tiny), validation_error);

    const DecisionTable ok(binary_schema(), {TableRow{{0}, 0}, TableRow{{1}, 1}});
    LogisticConfig config;
    config.threshold = 1.0;
    CHECK_THROWS_AS(fit_logistic(ok, config), validation_error);
}

TEST_CASE("zero-gain splits still solve XOR before pruning") {
    const DecisionTable table = xor_table(1);
    const DecisionTree tree = grow_tree(table);
    REQUIRE(tree.root != nullptr);
    CHECK(tree_depth(*tree.root) == 2);
    CHECK(rule_count(tree) == 4);
    CHECK(tree.root->split_attribute == std::size_t{0});
    for (std::size_t id = 1; id <= table.object_count(); ++id) {
        CHECK(predict_tree(tree, table.row(id)) == table.decision(id));
    }
}

TEST_CASE("replicated XOR survives pruning intact") {
    const DecisionTable table = xor_table(10);
    const DecisionTree tree = fit_c45(table);
    CHECK(rule_count(tree) == 4);
    for (std::size_t id = 1; id <= table.object_count(); ++id) {
        CHECK(predict_tree(tree, table.row(id)) == table.decision(id));
    }
}

TEST_CASE("single-copy XOR collapses under pessimistic pruning") {
    const DecisionTable table = xor_table(1);
    const DecisionTree grown = grow_tree(table);
    DecisionTree pruned = grow_tree(table);
    prune_tree(pruned);
    CHECK(rule_count(pruned) <= rule_count(grown));
    CHECK(pessimistic_error_estimate(*pruned.root, pruned.params.confidence) <=
          pessimistic_error_estimate(*grown.root, grown.params.confidence) + 1e-9);
}

TEST_CASE("gain and split info match the entropy definition") {
    RandomSource rng(83);
    for (int round = 0; round < 25; ++round) {
        const AttributeSchema schema = testutil::random_schema(rng, 4, 3, 3);
        const DecisionTable table = testutil::random_table(rng, schema, 6 + rng.next_below(12));
        std::vector<std::size_t> ids;
        for (std::size_t id = 1; id <= table.object_count(); ++id) ids.push_back(id);
        for (std::size_t a = 0; a < schema.attribute_count(); ++a) {
            const SplitScore score = evaluate_split(table, ids, a);

            std::vector<std::size_t> parent(schema.class_count(), 0);
            for (const std::size_t id : ids) ++parent[table.decision(id)];
            const double parent_entropy = entropy(parent);
            const std::size_t values = schema.condition(a).values.size();
            double child_term = 0.0;
            double split_info = 0.0;
            for (std::size_t v = 0; v < values; ++v) {
                std::vector<std::size_t> child(schema.class_count(), 0);
                std::size_t size = 0;
                for (const std::size_t id : ids) {
                    if (table.value(id, a) == v) {
                        ++child[table.decision(id)];
                        ++size;
                    }
                }
                if (size == 0) continue;
                const double share =
                    static_cast<double>(size) / static_cast<double>(ids.size());
                child_term += share * entropy(child);
                split_info -= share * std::log2(share);
            }
            CHECK(score.gain == doctest::Approx(parent_entropy - child_term).epsilon(1e-9));
            CHECK(score.split_info == doctest::Approx(split_info).epsilon(1e-9));
            if (split_info > 0.0) {
                CHECK(score.gain_ratio ==
                      doctest::Approx(score.gain / split_info).epsilon(1e-9));
            } else {
                CHECK(score.gain_ratio == 0.0);
            }
        }
    }
}

TEST_CASE("the root split maximises gain ratio among admissible attributes") {
    RandomSource rng(101);
    for (int round = 0; round < 20; ++round) {
        const AttributeSchema schema = testutil::random_schema(rng, 5, 3, 3);
        const DecisionTable table = testutil::random_table(rng, schema, 8 + rng.next_below(12));
        const DecisionTree tree = grow_tree(table);
        if (tree.root->is_leaf()) continue;
        std::vector<std::size_t> ids;
        for (std::size_t id = 1; id <= table.object_count(); ++id) ids.push_back(id);
        const double chosen = evaluate_split(table, ids, *tree.root->split_attribute).gain_ratio;
        for (std::size_t a = 0; a < schema.attribute_count(); ++a) {
            std::vector<std::size_t> branch_sizes(schema.condition(a).values.size(), 0);
            for (const std::size_t id : ids) ++branch_sizes[table.value(id, a)];
            std::size_t branches = 0;
            for (const std::size_t size : branch_sizes) {
                if (size >= tree.params.min_leaf) ++branches;
            }
            if (branches < 2) continue;
            CHECK(chosen >= evaluate_split(table, ids, a).gain_ratio - 1e-12);
        }
    }
}

TEST_CASE("pruning never increases leaves or the error estimate") {
    RandomSource rng(113);
    for (int round = 0; round < 20; ++round) {
        const AttributeSchema schema = testutil::random_schema(rng, 4, 3, 3);
        const DecisionTable table = testutil::random_table(rng, schema, 8 + rng.next_below(20));
        const DecisionTree grown = grow_tree(table);
        DecisionTree pruned = grow_tree(table);
        prune_tree(pruned);
        CHECK(rule_count(pruned) <= rule_count(grown));
        CHECK(pessimistic_error_estimate(*pruned.root, pruned.params.confidence) <=
              pessimistic_error_estimate(*grown.root, grown.params.confidence) + 1e-9);
    }
}

TEST_CASE("unseen values fall back to the node majority") {
    const AttributeSchema schema =
        AttributeSchema({{"a", {"a1", "a2", "a3"}}}, {"d", {"n", "y"}});
    const DecisionTable table = counted_table(schema, {
                                                          {TableRow{{0}, 0}, 3},
                                                          {TableRow{{1}, 1}, 2},
                                                      });
    const DecisionTree tree = grow_tree(table);
    REQUIRE(!tree.root->is_leaf());
    TableRow unseen;
    unseen.values = {2};
    CHECK(predict_tree(tree, unseen) == 0);
}

TEST_CASE("min_leaf blocks splits that starve a branch") {
    const AttributeSchema schema =
        AttributeSchema({{"a", {"a1", "a2", "a3"}}}, {"d", {"n", "y"}});
    const DecisionTable table = counted_table(schema, {
                                                          {TableRow{{0}, 0}, 3},
                                                          {TableRow{{1}, 1}, 2},
                                                      });
    TreeParams params;
    params.min_leaf = 3;
    const DecisionTree tree = grow_tree(table, params);
    CHECK(tree.root->is_leaf());
    CHECK(rule_count(tree) == 1);
    CHECK(predict_tree(tree, table.row(4)) == 0);
}

TEST_CASE("pessimistic estimates use the error-free closed form") {
    TreeNode leaf;
    leaf.class_counts = {10, 0};
    leaf.majority = 0;
    const double expected = 10.0 * (1.0 - std::pow(0.25, 1.0 / 10.0));
    CHECK(pessimistic_error_estimate(leaf, 0.25) == doctest::Approx(expected).epsilon(1e-12));

    TreeNode mixed;
    mixed.class_counts = {9, 5};
    mixed.majority = 0;
    const double estimate = pessimistic_error_estimate(mixed, 0.25);
    CHECK(estimate > 5.0);
    CHECK(estimate < 14.0);
    // Lower confidence means a more pessimistic (larger) bound.
    CHECK(pessimistic_error_estimate(mixed, 0.1) > estimate);
    CHECK(estimate > pessimistic_error_estimate(mixed, 0.4));
}

TEST_CASE("entropy matches the textbook values") {
    const std::vector<std::size_t> balanced{4, 4};
    CHECK(entropy(balanced) == doctest::Approx(1.0).epsilon(1e-12));
    const std::vector<std::size_t> pure{4, 0};
    CHECK(entropy(pure) == doctest::Approx(0.0).epsilon(1e-12));
    const std::vector<std::size_t> uneven{9, 5};
    const double p = 9.0 / 14.0;
    const double q = 5.0 / 14.0;
    CHECK(entropy(uneven) ==
          doctest::Approx(-p * std::log2(p) - q * std::log2(q)).epsilon(1e-12));
}

TEST_CASE("tree parameters are validated") {
    const DecisionTable table = xor_table(1);
    TreeParams params;
    params.min_leaf = 0;
    CHECK_THROWS_AS(grow_tree(table, params), validation_error);
    params = {};
    params.confidence = 0.0;
    CHECK_THROWS_AS(grow_tree(table, params), validation_error);
    params = {};
    params.confidence = 0.75;
    CHECK_THROWS_AS(grow_tree(table, params), validation_error);
}

TEST_CASE("tree text shows splits, branches and counts") {
    const DecisionTable table = xor_table(1);
    const DecisionTree tree = grow_tree(table);
    const std::string text = tree_to_text(tree);
    CHECK(text.find("split a") != std::string::npos);
    CHECK(text.find("leaf") != std::string::npos);
    CHECK(text.find("a1:") != std::string::npos);
}
