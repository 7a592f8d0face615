#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "roughteam/table.hpp"

namespace roughteam {

struct TreeParams {
    std::size_t min_leaf = 1;   // a split must leave >= 2 children this big
    double confidence = 0.25;   // pessimistic-error pruning confidence
};

/// Multiway split node. Internal nodes hold one child per observed value of
/// the split attribute (slot order = value order, unobserved slots empty); no
/// attribute repeats on a root-to-leaf path. Every node keeps its training
/// class distribution for majority fallback on unseen values.
struct TreeNode {
    std::vector<std::size_t> class_counts;  // schema class order
    std::size_t majority = 0;
    std::optional<std::size_t> split_attribute;
    std::vector<std::unique_ptr<TreeNode>> children;  // indexed by value

    bool is_leaf() const { return !split_attribute.has_value(); }
    std::size_t size() const;    // training objects at this node
    std::size_t errors() const;  // objects not of the majority class
};

struct DecisionTree {
    AttributeSchema schema;
    TreeParams params;
    std::unique_ptr<TreeNode> root;
};

struct SplitScore {
    double gain = 0.0;
    double split_info = 0.0;
    double gain_ratio = 0.0;
};

/// Entropy (base 2) of a class-count vector.
double entropy(std::span<const std::size_t> counts);

/// Gain / split info / gain ratio of splitting the given objects on one
/// attribute. Exposed for the entropy-by-definition oracle.
SplitScore evaluate_split(const DecisionTable& table, std::span<const std::size_t> object_ids,
                          std::size_t attribute);

/// Top-down induction on the attribute with maximum gain ratio (ties to the
/// earliest schema attribute), stopping at purity, attribute exhaustion, or
/// when no split leaves two children of min_leaf objects. No pruning.
DecisionTree grow_tree(const DecisionTable& table, const TreeParams& params = {});

/// Bottom-up pessimistic pruning: a subtree collapses to a leaf when the
/// leaf's error estimate does not exceed the subtree's. Never increases the
/// estimate or the leaf count.
void prune_tree(DecisionTree& tree);

/// grow_tree + prune_tree.
DecisionTree fit_c45(const DecisionTable& table, const TreeParams& params = {});

/// Follow splits to a leaf; an unseen value stops at that node's majority.
std::size_t predict_tree(const DecisionTree& tree, const TableRow& record);

/// Number of leaves; each root-to-leaf path is one rule.
std::size_t rule_count(const DecisionTree& tree);

/// Upper-confidence-bound training-error estimate (summed over leaves).
double pessimistic_error_estimate(const TreeNode& node, double confidence);

/// Indented text, one node per line.
void write_tree(std::ostream& out, const DecisionTree& tree);
std::string tree_to_text(const DecisionTree& tree);

}  // namespace roughteam
