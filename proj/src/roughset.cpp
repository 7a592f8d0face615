#include "roughteam/roughset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "roughteam/errors.hpp"

namespace roughteam {

AttrMask attr_mask_all(std::size_t attribute_count) {
    if (attribute_count > 64) {
        throw validation_error("attribute masks support at most 64 attributes");
    }
    if (attribute_count == 64) return ~AttrMask{0};
    return (AttrMask{1} << attribute_count) - 1;
}

std::vector<std::string> attr_mask_names(AttrMask mask, const AttributeSchema& schema) {
    if ((mask & ~attr_mask_all(schema.attribute_count())) != 0) {
        throw validation_error("attribute mask has bits beyond the schema");
    }
    std::vector<std::string> names;
    for (std::size_t a = 0; a < schema.attribute_count(); ++a) {
        if (mask & (AttrMask{1} << a)) names.push_back(schema.condition(a).name);
    }
    return names;
}

AttrMask attr_mask_from_names(const std::vector<std::string>& names,
                              const AttributeSchema& schema) {
    AttrMask mask = 0;
    for (const auto& name : names) {
        const auto index = schema.condition_index(name);
        if (!index) {
            throw validation_error("unknown attribute '" + name + "'");
        }
        mask |= AttrMask{1} << *index;
    }
    return mask;
}

Partition indiscernibility(const DecisionTable& table, AttrMask attrs) {
    const std::size_t c = table.schema().attribute_count();
    if (attrs == 0) {
        throw validation_error("indiscernibility needs a non-empty attribute set");
    }
    if ((attrs & ~attr_mask_all(c)) != 0) {
        throw validation_error("attribute mask has bits beyond the schema");
    }
    Partition partition;
    std::map<std::vector<std::size_t>, std::size_t> block_of;
    for (std::size_t id = 1; id <= table.object_count(); ++id) {
        std::vector<std::size_t> key;
        for (std::size_t a = 0; a < c; ++a) {
            if (attrs & (AttrMask{1} << a)) key.push_back(table.value(id, a));
        }
        const auto [it, fresh] = block_of.try_emplace(std::move(key), partition.blocks.size());
        if (fresh) partition.blocks.emplace_back();
        partition.blocks[it->second].push_back(id);
    }
    return partition;
}

Approximation approximations(const DecisionTable& table, AttrMask attrs,
                             std::size_t target_class) {
    if (target_class >= table.schema().class_count()) {
        throw validation_error("unknown decision class index " + std::to_string(target_class));
    }
    Approximation result;
    for (const auto& block : indiscernibility(table, attrs).blocks) {
        std::size_t inside = 0;
        for (const std::size_t id : block) {
            if (table.decision(id) == target_class) ++inside;
        }
        if (inside == block.size()) {
            result.lower.insert(result.lower.end(), block.begin(), block.end());
        }
        if (inside > 0) {
            result.upper.insert(result.upper.end(), block.begin(), block.end());
        }
    }
    std::sort(result.lower.begin(), result.lower.end());
    std::sort(result.upper.begin(), result.upper.end());
    return result;
}

DiscernibilityMatrix discernibility_matrix(const DecisionTable& table, bool modulo_decision) {
    const std::size_t c = table.schema().attribute_count();
    DiscernibilityMatrix matrix;
    matrix.modulo_decision = modulo_decision;
    matrix.attribute_count = c;
    const std::size_t n = table.object_count();
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            const bool same_decision = table.decision(i) == table.decision(j);
            if (modulo_decision && same_decision) continue;
            AttrMask mask = 0;
            for (std::size_t a = 0; a < c; ++a) {
                if (table.value(i, a) != table.value(j, a)) mask |= AttrMask{1} << a;
            }
            if (mask == 0) {
                if (!same_decision) matrix.inconsistent_pairs.emplace_back(i, j);
                continue;
            }
            matrix.entries.push_back({i, j, mask});
        }
    }
    return matrix;
}

bool covers_all(AttrMask candidate, const std::vector<AttrMask>& entries) {
    for (const AttrMask entry : entries) {
        if ((entry & candidate) == 0) return false;
    }
    return true;
}

AttrMask johnson_cover(const std::vector<AttrMask>& entries, std::size_t attribute_count) {
    for (const AttrMask entry : entries) {
        if (entry == 0) {
            throw validation_error("an empty discernibility entry cannot be covered");
        }
    }
    std::vector<AttrMask> uncovered = entries;
    std::vector<std::size_t> selection;
    while (!uncovered.empty()) {
        std::vector<std::size_t> hits(attribute_count, 0);
        for (const AttrMask entry : uncovered) {
            for (std::size_t a = 0; a < attribute_count; ++a) {
                if (entry & (AttrMask{1} << a)) ++hits[a];
            }
        }
        std::size_t best = 0;
        for (std::size_t a = 1; a < attribute_count; ++a) {
            if (hits[a] > hits[best]) best = a;
        }
        selection.push_back(best);
        const AttrMask bit = AttrMask{1} << best;
        std::erase_if(uncovered, [bit](AttrMask entry) { return (entry & bit) != 0; });
    }
    AttrMask mask = 0;
    for (const std::size_t a : selection) mask |= AttrMask{1} << a;
    for (auto it = selection.rbegin(); it != selection.rend(); ++it) {
        const AttrMask without = mask & ~(AttrMask{1} << *it);
        if (covers_all(without, entries)) mask = without;
    }
    return mask;
}

namespace {

std::vector<AttrMask> entry_masks(const DiscernibilityMatrix& matrix) {
    std::vector<AttrMask> masks;
    masks.reserve(matrix.entries.size());
    for (const auto& entry : matrix.entries) masks.push_back(entry.attrs);
    return masks;
}

// Drop attributes in reverse schema order while coverage survives; the result
// is irreducible, hence a minimal cover.
AttrMask shrink_cover(AttrMask mask, const std::vector<AttrMask>& entries,
                      std::size_t attribute_count) {
    for (std::size_t a = attribute_count; a-- > 0;) {
        const AttrMask bit = AttrMask{1} << a;
        if ((mask & bit) == 0) continue;
        const AttrMask without = mask & ~bit;
        if (covers_all(without, entries)) mask = without;
    }
    return mask;
}

}  // namespace

Reduct johnson_reduct(const DiscernibilityMatrix& matrix) {
    return {johnson_cover(entry_masks(matrix), matrix.attribute_count), ReductOrigin::johnson,
            std::nullopt};
}

std::vector<Reduct> exhaustive_reducts(const DiscernibilityMatrix& matrix) {
    const std::size_t c = matrix.attribute_count;
    if (c > 20) {
        throw validation_error("exhaustive reduct search is limited to 20 attributes");
    }
    std::vector<AttrMask> masks = entry_masks(matrix);
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

    std::vector<AttrMask> candidates(std::size_t{1} << c);
    for (std::size_t m = 0; m < candidates.size(); ++m) candidates[m] = m;
    std::sort(candidates.begin(), candidates.end(), [](AttrMask a, AttrMask b) {
        const int pa = std::popcount(a);
        const int pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    std::vector<Reduct> reducts;
    for (const AttrMask candidate : candidates) {
        bool superset = false;
        for (const Reduct& found : reducts) {
            if ((candidate & found.attrs) == found.attrs) {
                superset = true;
                break;
            }
        }
        if (superset) continue;
        if (covers_all(candidate, masks)) {
            reducts.push_back({candidate, ReductOrigin::exhaustive, std::nullopt});
        }
    }
    return reducts;
}

namespace {

void check_ga_params(const GAParams& params) {
    if (params.population_size < 2) {
        throw validation_error("GA population size must be at least 2");
    }
    if (params.elitism >= params.population_size) {
        throw validation_error("GA elitism must be smaller than the population size");
    }
    if (params.crossover_rate < 0.0 || params.crossover_rate > 1.0) {
        throw validation_error("GA crossover rate must be a probability");
    }
    if (params.mutation_rate && (*params.mutation_rate < 0.0 || *params.mutation_rate > 1.0)) {
        throw validation_error("GA mutation rate must be a probability");
    }
    if (params.parsimony_weight < 0.0) {
        throw validation_error("GA parsimony weight must be non-negative");
    }
}

}  // namespace

std::vector<Reduct> ga_reducts(const DiscernibilityMatrix& matrix, const GAParams& params) {
    check_ga_params(params);
    const std::size_t c = matrix.attribute_count;
    std::vector<AttrMask> masks = entry_masks(matrix);
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    if (masks.empty()) {
        return {{AttrMask{0}, ReductOrigin::genetic, std::nullopt}};
    }

    const AttrMask all = attr_mask_all(c);
    const double mutation = params.mutation_rate.value_or(1.0 / static_cast<double>(c));
    RandomSource rng(params.seed);

    // Individual 0 is the full attribute set, so a covering individual exists
    // from generation zero; the rest start random.
    std::vector<AttrMask> population(params.population_size);
    population[0] = all;
    for (std::size_t i = 1; i < population.size(); ++i) population[i] = rng.next_u64() & all;

    const auto fitness = [&](AttrMask individual) {
        std::size_t hit = 0;
        for (const AttrMask entry : masks) {
            if (entry & individual) ++hit;
        }
        const double coverage = static_cast<double>(hit) / static_cast<double>(masks.size());
        const double size_share = static_cast<double>(std::popcount(individual)) /
                                  static_cast<double>(c);
        return coverage - params.parsimony_weight * size_share;
    };

    std::set<AttrMask> seen_covering;
    std::set<AttrMask> collected;
    const auto collect = [&](AttrMask individual) {
        if (!covers_all(individual, masks)) return;
        if (!seen_covering.insert(individual).second) return;
        collected.insert(shrink_cover(individual, masks, c));
    };

    std::vector<double> scores(population.size());
    for (std::size_t generation = 0;; ++generation) {
        for (std::size_t i = 0; i < population.size(); ++i) {
            scores[i] = fitness(population[i]);
            collect(population[i]);
        }
        if (generation == params.generations) break;

        std::vector<std::size_t> order(population.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (scores[a] != scores[b]) return scores[a] > scores[b];
            if (population[a] != population[b]) return population[a] < population[b];
            return a < b;
        });

        const auto tournament = [&]() {
            const std::size_t a = rng.next_below(population.size());
            const std::size_t b = rng.next_below(population.size());
            if (scores[a] != scores[b]) return scores[a] > scores[b] ? a : b;
            return population[a] <= population[b] ? a : b;
        };

        std::vector<AttrMask> next;
        next.reserve(population.size());
        for (std::size_t e = 0; e < params.elitism; ++e) next.push_back(population[order[e]]);
        while (next.size() < population.size()) {
            const AttrMask p1 = population[tournament()];
            const AttrMask p2 = population[tournament()];
            AttrMask child = p1;
            if (rng.next_bool(params.crossover_rate)) {
                const AttrMask pick = rng.next_u64();
                child = (p1 & pick) | (p2 & ~pick);
            }
            for (std::size_t a = 0; a < c; ++a) {
                if (rng.next_bool(mutation)) child ^= AttrMask{1} << a;
            }
            next.push_back(child & all);
        }
        population = std::move(next);
    }

    std::vector<Reduct> reducts;
    reducts.reserve(collected.size());
    for (const AttrMask mask : collected) {
        reducts.push_back({mask, ReductOrigin::genetic, std::nullopt});
    }
    std::sort(reducts.begin(), reducts.end(), [](const Reduct& a, const Reduct& b) {
        const int pa = std::popcount(a.attrs);
        const int pb = std::popcount(b.attrs);
        return pa != pb ? pa < pb : a.attrs < b.attrs;
    });
    return reducts;
}

namespace {

// Per-object constraints: masks discerning the object from every
// differently-classed object. Inconsistent pairs impose none.
std::vector<AttrMask> object_constraints(const DecisionTable& table, std::size_t object_id) {
    const std::size_t c = table.schema().attribute_count();
    std::vector<AttrMask> masks;
    for (std::size_t other = 1; other <= table.object_count(); ++other) {
        if (other == object_id) continue;
        if (table.decision(other) == table.decision(object_id)) continue;
        AttrMask mask = 0;
        for (std::size_t a = 0; a < c; ++a) {
            if (table.value(object_id, a) != table.value(other, a)) mask |= AttrMask{1} << a;
        }
        if (mask != 0) masks.push_back(mask);
    }
    return masks;
}

std::vector<RuleConjunct> antecedent_for(const DecisionTable& table, std::size_t object_id,
                                         AttrMask mask) {
    std::vector<RuleConjunct> antecedent;
    for (std::size_t a = 0; a < table.schema().attribute_count(); ++a) {
        if (mask & (AttrMask{1} << a)) antecedent.push_back({a, table.value(object_id, a)});
    }
    return antecedent;
}

std::uint64_t mix_seed(std::uint64_t seed, std::size_t object_id) {
    return seed ^ (static_cast<std::uint64_t>(object_id) * 0x9E3779B97F4A7C15ULL);
}

}  // namespace

RuleModel induce_rules(const DecisionTable& table, const InductionConfig& config) {
    const std::size_t c = table.schema().attribute_count();
    const std::size_t n = table.object_count();

    // Distinct antecedents in first-generator order.
    std::map<std::vector<RuleConjunct>, std::size_t> rule_of;
    std::vector<std::vector<RuleConjunct>> antecedents;
    const auto emit = [&](std::vector<RuleConjunct> antecedent) {
        const auto [it, fresh] = rule_of.try_emplace(std::move(antecedent), antecedents.size());
        if (fresh) antecedents.push_back(it->first);
    };

    if (config.scope == InductionScope::object_related) {
        for (std::size_t id = 1; id <= n; ++id) {
            const std::vector<AttrMask> constraints = object_constraints(table, id);
            if (config.algorithm == InductionAlgorithm::johnson) {
                emit(antecedent_for(table, id, johnson_cover(constraints, c)));
            } else {
                DiscernibilityMatrix local;
                local.modulo_decision = true;
                local.attribute_count = c;
                for (const AttrMask mask : constraints) local.entries.push_back({0, 0, mask});
                GAParams params = config.ga;
                params.seed = mix_seed(config.ga.seed, id);
                for (const Reduct& reduct : ga_reducts(local, params)) {
                    emit(antecedent_for(table, id, reduct.attrs));
                }
            }
        }
    } else {
        const DiscernibilityMatrix matrix = discernibility_matrix(table, true);
        std::vector<Reduct> reducts;
        if (config.algorithm == InductionAlgorithm::johnson) {
            reducts.push_back(johnson_reduct(matrix));
        } else {
            reducts = ga_reducts(matrix, config.ga);
        }
        for (const Reduct& reduct : reducts) {
            for (std::size_t id = 1; id <= n; ++id) {
                emit(antecedent_for(table, id, reduct.attrs));
            }
        }
    }

    std::vector<DecisionRule> rules;
    rules.reserve(antecedents.size());
    for (const auto& antecedent : antecedents) {
        DecisionRule rule;
        rule.antecedent = antecedent;
        rule.rhs_support.assign(table.schema().class_count(), 0);
        for (std::size_t id = 1; id <= n; ++id) {
            bool match = true;
            for (const RuleConjunct& conjunct : antecedent) {
                if (table.value(id, conjunct.attribute) != conjunct.value) {
                    match = false;
                    break;
                }
            }
            if (match) {
                ++rule.lhs_support;
                ++rule.rhs_support[table.decision(id)];
            }
        }
        rules.push_back(std::move(rule));
    }

    return RuleModel(table.schema(), std::move(rules), n, table.class_counts(), config.policies);
}

}  // namespace roughteam
