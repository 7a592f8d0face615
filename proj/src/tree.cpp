#include "roughteam/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

#include "roughteam/errors.hpp"

namespace roughteam {

namespace {

// Acklam's rational approximation of the standard normal quantile, good to
// about 1e-9 relative error; plenty for confidence bounds.
double normal_quantile(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;
    if (p <= 0.0 || p >= 1.0) {
        throw validation_error("normal quantile needs a probability strictly inside (0, 1)");
    }
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - p_low) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

// Upper confidence bound on the error count of a leaf with N objects and E
// training errors (the C4.5 pessimistic estimate).
double leaf_error_estimate(std::size_t n, std::size_t e, double confidence) {
    if (n == 0) return 0.0;
    const double nd = static_cast<double>(n);
    if (e == 0) {
        return nd * (1.0 - std::pow(confidence, 1.0 / nd));
    }
    if (e >= n) return nd;
    const double f = static_cast<double>(e) / nd;
    const double z = normal_quantile(1.0 - confidence);
    const double z2 = z * z;
    const double upper = (f + z2 / (2.0 * nd) +
                          z * std::sqrt(f / nd - f * f / nd + z2 / (4.0 * nd * nd))) /
                         (1.0 + z2 / nd);
    return std::min(nd, upper * nd);
}

void check_params(const TreeParams& params) {
    if (params.min_leaf < 1) {
        throw validation_error("min_leaf must be at least 1");
    }
    if (params.confidence <= 0.0 || params.confidence > 0.5) {
        throw validation_error("pruning confidence must lie in (0, 0.5]");
    }
}

}  // namespace

std::size_t TreeNode::size() const {
    return std::accumulate(class_counts.begin(), class_counts.end(), std::size_t{0});
}

std::size_t TreeNode::errors() const { return size() - class_counts[majority]; }

double entropy(std::span<const std::size_t> counts) {
    const std::size_t total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
    if (total == 0) return 0.0;
    double h = 0.0;
    for (const std::size_t count : counts) {
        if (count == 0) continue;
        const double p = static_cast<double>(count) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    return h;
}

SplitScore evaluate_split(const DecisionTable& table, std::span<const std::size_t> object_ids,
                          std::size_t attribute) {
    const AttributeSchema& schema = table.schema();
    if (attribute >= schema.attribute_count()) {
        throw validation_error("attribute index " + std::to_string(attribute) + " out of range");
    }
    if (object_ids.empty()) {
        throw validation_error("cannot score a split over zero objects");
    }
    const std::size_t classes = schema.class_count();
    const std::size_t values = schema.condition(attribute).values.size();

    std::vector<std::size_t> parent(classes, 0);
    std::vector<std::vector<std::size_t>> child(values, std::vector<std::size_t>(classes, 0));
    for (const std::size_t id : object_ids) {
        const TableRow& row = table.row(id);
        ++parent[row.decision];
        ++child[row.values[attribute]][row.decision];
    }

    const double m = static_cast<double>(object_ids.size());
    SplitScore score;
    score.gain = entropy(parent);
    for (const auto& counts : child) {
        const std::size_t m_v =
            std::accumulate(counts.begin(), counts.end(), std::size_t{0});
        if (m_v == 0) continue;
        const double share = static_cast<double>(m_v) / m;
        score.gain -= share * entropy(counts);
        score.split_info -= share * std::log2(share);
    }
    score.gain_ratio = score.split_info > 0.0 ? score.gain / score.split_info : 0.0;
    return score;
}

namespace {

std::unique_ptr<TreeNode> build_node(const DecisionTable& table,
                                     const std::vector<std::size_t>& ids,
                                     std::vector<bool>& available, const TreeParams& params) {
    const AttributeSchema& schema = table.schema();
    auto node = std::make_unique<TreeNode>();
    node->class_counts.assign(schema.class_count(), 0);
    for (const std::size_t id : ids) ++node->class_counts[table.decision(id)];
    node->majority = 0;
    for (std::size_t c = 1; c < node->class_counts.size(); ++c) {
        if (node->class_counts[c] > node->class_counts[node->majority]) node->majority = c;
    }
    if (node->class_counts[node->majority] == ids.size()) return node;  // pure

    // Split on the admissible attribute with the best gain ratio. Admissible
    // means at least two branches would receive min_leaf objects; zero gain
    // does not disqualify (pruning deals with useless splits later).
    std::optional<std::size_t> best;
    double best_ratio = 0.0;
    for (std::size_t a = 0; a < schema.attribute_count(); ++a) {
        if (!available[a]) continue;
        std::vector<std::size_t> sizes(schema.condition(a).values.size(), 0);
        for (const std::size_t id : ids) ++sizes[table.value(id, a)];
        std::size_t viable = 0;
        for (const std::size_t s : sizes) {
            if (s >= params.min_leaf) ++viable;
        }
        if (viable < 2) continue;
        const double ratio = evaluate_split(table, ids, a).gain_ratio;
        if (!best || ratio > best_ratio) {
            best = a;
            best_ratio = ratio;
        }
    }
    if (!best) return node;  // no admissible split; stays a leaf

    node->split_attribute = *best;
    const std::size_t values = schema.condition(*best).values.size();
    std::vector<std::vector<std::size_t>> branch(values);
    for (const std::size_t id : ids) branch[table.value(id, *best)].push_back(id);
    node->children.resize(values);
    available[*best] = false;
    for (std::size_t v = 0; v < values; ++v) {
        if (branch[v].empty()) continue;
        node->children[v] = build_node(table, branch[v], available, params);
    }
    available[*best] = true;
    return node;
}

}  // namespace

DecisionTree grow_tree(const DecisionTable& table, const TreeParams& params) {
    check_params(params);
    DecisionTree tree{table.schema(), params, nullptr};
    std::vector<std::size_t> ids(table.object_count());
    std::iota(ids.begin(), ids.end(), 1);
    std::vector<bool> available(table.schema().attribute_count(), true);
    tree.root = build_node(table, ids, available, params);
    return tree;
}

double pessimistic_error_estimate(const TreeNode& node, double confidence) {
    if (node.is_leaf()) {
        return leaf_error_estimate(node.size(), node.errors(), confidence);
    }
    double total = 0.0;
    for (const auto& child : node.children) {
        if (child) total += pessimistic_error_estimate(*child, confidence);
    }
    return total;
}

namespace {

void prune_node(TreeNode& node, double confidence) {
    if (node.is_leaf()) return;
    for (auto& child : node.children) {
        if (child) prune_node(*child, confidence);
    }
    const double as_leaf = leaf_error_estimate(node.size(), node.errors(), confidence);
    const double as_subtree = pessimistic_error_estimate(node, confidence);
    if (as_leaf <= as_subtree + 1e-9) {
        node.split_attribute.reset();
        node.children.clear();
    }
}

}  // namespace

void prune_tree(DecisionTree& tree) {
    if (!tree.root) {
        throw validation_error("cannot prune an empty tree");
    }
    prune_node(*tree.root, tree.params.confidence);
}

DecisionTree fit_c45(const DecisionTable& table, const TreeParams& params) {
    DecisionTree tree = grow_tree(table, params);
    prune_tree(tree);
    return tree;
}

std::size_t predict_tree(const DecisionTree& tree, const TableRow& record) {
    if (record.values.size() != tree.schema.attribute_count()) {
        throw validation_error("record has " + std::to_string(record.values.size()) +
                               " values, tree expects " +
                               std::to_string(tree.schema.attribute_count()));
    }
    const TreeNode* node = tree.root.get();
    while (!node->is_leaf()) {
        const std::size_t value = record.values[*node->split_attribute];
        if (value >= node->children.size() || !node->children[value]) {
            return node->majority;  // value unseen in training
        }
        node = node->children[value].get();
    }
    return node->majority;
}

namespace {

std::size_t count_leaves(const TreeNode& node) {
    if (node.is_leaf()) return 1;
    std::size_t total = 0;
    for (const auto& child : node.children) {
        if (child) total += count_leaves(*child);
    }
    return total;
}

void write_node(std::ostream& out, const TreeNode& node, const AttributeSchema& schema,
                const std::string& label, std::size_t depth) {
    out << std::string(depth * 2, ' ') << label;
    if (node.is_leaf()) {
        out << "leaf " << schema.class_name(node.majority);
    } else {
        out << "split " << schema.condition(*node.split_attribute).name;
    }
    out << " [";
    for (std::size_t c = 0; c < node.class_counts.size(); ++c) {
        if (c > 0) out << ',';
        out << node.class_counts[c];
    }
    out << "]\n";
    if (node.is_leaf()) return;
    const Attribute& attribute = schema.condition(*node.split_attribute);
    for (std::size_t v = 0; v < node.children.size(); ++v) {
        if (!node.children[v]) continue;
        write_node(out, *node.children[v], schema, attribute.values[v] + ": ", depth + 1);
    }
}

}  // namespace

std::size_t rule_count(const DecisionTree& tree) {
    if (!tree.root) {
        throw validation_error("cannot count rules of an empty tree");
    }
    return count_leaves(*tree.root);
}

void write_tree(std::ostream& out, const DecisionTree& tree) {
    if (!tree.root) {
        throw validation_error("cannot serialize an empty tree");
    }
    write_node(out, *tree.root, tree.schema, "", 0);
}

std::string tree_to_text(const DecisionTree& tree) {
    std::ostringstream out;
    write_tree(out, tree);
    return out.str();
}

}  // namespace roughteam
