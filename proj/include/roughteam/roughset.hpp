#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "roughteam/rng.hpp"
#include "roughteam/rules.hpp"
#include "roughteam/table.hpp"

namespace roughteam {

/// Condition-attribute subset as a bitmask (bit i = schema attribute i).
/// Schemas are capped at 64 condition attributes.
using AttrMask = std::uint64_t;

AttrMask attr_mask_all(std::size_t attribute_count);
std::vector<std::string> attr_mask_names(AttrMask mask, const AttributeSchema& schema);
AttrMask attr_mask_from_names(const std::vector<std::string>& names, const AttributeSchema& schema);

/// Blocks of the indiscernibility relation: disjoint, non-empty, covering all
/// object ids. Block order follows the smallest id in each block.
struct Partition {
    std::vector<std::vector<std::size_t>> blocks;
};

/// Objects sharing a block iff they agree on every attribute in the mask.
Partition indiscernibility(const DecisionTable& table, AttrMask attrs);

struct Approximation {
    std::vector<std::size_t> lower;  // blocks fully inside the class
    std::vector<std::size_t> upper;  // blocks intersecting the class
};

/// Lower/upper approximation of a decision class under the given attributes.
/// lower <= class objects <= upper always holds.
Approximation approximations(const DecisionTable& table, AttrMask attrs, std::size_t target_class);

/// Per object pair, the attributes telling them apart. In modulo-decision
/// mode only pairs with different decisions are recorded. Pairs with
/// identical condition values but different decisions are inconsistent: they
/// get no entry and are listed separately.
struct DiscernibilityMatrix {
    struct Entry {
        std::size_t first = 0;  // 1-based ids, first < second
        std::size_t second = 0;
        AttrMask attrs = 0;
    };

    std::vector<Entry> entries;
    std::vector<std::pair<std::size_t, std::size_t>> inconsistent_pairs;
    bool modulo_decision = true;
    std::size_t attribute_count = 0;
};

DiscernibilityMatrix discernibility_matrix(const DecisionTable& table, bool modulo_decision);

enum class ReductOrigin { johnson, genetic, exhaustive };

/// Attribute subset preserving all required discernibility. Object-related
/// reducts (used by rule induction) preserve it for one object against the
/// rest; those carry the object id.
struct Reduct {
    AttrMask attrs = 0;
    ReductOrigin origin = ReductOrigin::johnson;
    std::optional<std::size_t> object_id;

    bool operator==(const Reduct& other) const { return attrs == other.attrs; }
    bool operator<(const Reduct& other) const { return attrs < other.attrs; }
};

/// Greedy cover: repeatedly take the attribute hitting the most uncovered
/// entries (ties to the earliest schema attribute), then shrink the result
/// back to a true reduct by dropping attributes in reverse selection order
/// whenever coverage survives.
Reduct johnson_reduct(const DiscernibilityMatrix& matrix);

/// All minimal hitting sets of the matrix entries. Guarded to <= 20
/// attributes. Results sorted by (size, mask).
std::vector<Reduct> exhaustive_reducts(const DiscernibilityMatrix& matrix);

struct GAParams {
    std::size_t population_size = 64;
    std::size_t generations = 100;
    double crossover_rate = 0.9;
    std::optional<double> mutation_rate;  // default 1/|C|
    double parsimony_weight = 0.05;
    std::size_t elitism = 2;
    std::uint64_t seed = kDefaultSeed;
};

/// Evolves attribute bitmasks; fitness is hit fraction minus
/// parsimony_weight * |subset|/|C|. Every fully covering individual is shrunk
/// to a minimal cover and collected. Deterministic per seed; results sorted
/// by (size, mask).
std::vector<Reduct> ga_reducts(const DiscernibilityMatrix& matrix, const GAParams& params);

enum class InductionScope { object_related, full_table };
enum class InductionAlgorithm { johnson, genetic };

struct InductionConfig {
    InductionScope scope = InductionScope::object_related;
    InductionAlgorithm algorithm = InductionAlgorithm::johnson;
    GAParams ga;
    RulePolicies policies;
};

/// ROSETTA-style rule generation. Per object a modulo-decision reduct is
/// computed (one Johnson reduct, or every GA reduct); the object emits the
/// rule (its values on the reduct attributes => its class). Duplicate
/// antecedents merge; supports are recounted against the whole table, so
/// antecedents matched by several classes come out bi-dimensional. Rules
/// appear in first-generator order; final decisions are resolved.
RuleModel induce_rules(const DecisionTable& table, const InductionConfig& config = {});

/// Internal cover machinery, exposed for the oracle suites: entries are
/// attribute masks; attribute_count bounds the universe.
AttrMask johnson_cover(const std::vector<AttrMask>& entries, std::size_t attribute_count);
bool covers_all(AttrMask candidate, const std::vector<AttrMask>& entries);

}  // namespace roughteam
