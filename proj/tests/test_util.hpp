#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "roughteam/rng.hpp"
#include "roughteam/schema.hpp"
#include "roughteam/table.hpp"

namespace testutil {

/// Random schema with 1..max_attrs conditions, 2..max_values values each and
/// 2..max_classes decision classes. All names unique by construction.
inline roughteam::AttributeSchema random_schema(roughteam::RandomSource& rng,
                                                std::size_t max_attrs, std::size_t max_values,
                                                std::size_t max_classes) {
    const std::size_t attrs = 1 + rng.next_below(max_attrs);
    std::vector<roughteam::Attribute> conditions;
    for (std::size_t a = 0; a < attrs; ++a) {
        roughteam::Attribute attribute;
        attribute.name = "c" + std::to_string(a);
        const std::size_t values = 2 + rng.next_below(max_values - 1);
        for (std::size_t v = 0; v < values; ++v) {
            attribute.values.push_back("c" + std::to_string(a) + "v" + std::to_string(v));
        }
        conditions.push_back(attribute);
    }
    roughteam::Attribute decision;
    decision.name = "d";
    const std::size_t classes = 2 + rng.next_below(max_classes - 1);
    for (std::size_t c = 0; c < classes; ++c) {
        decision.values.push_back("k" + std::to_string(c));
    }
    return {std::move(conditions), std::move(decision)};
}

inline roughteam::DecisionTable random_table(roughteam::RandomSource& rng,
                                             const roughteam::AttributeSchema& schema,
                                             std::size_t n) {
    std::vector<roughteam::TableRow> rows;
    for (std::size_t i = 0; i < n; ++i) {
        roughteam::TableRow row;
        for (std::size_t a = 0; a < schema.attribute_count(); ++a) {
            row.values.push_back(rng.next_below(schema.condition(a).values.size()));
        }
        row.decision = rng.next_below(schema.class_count());
        rows.push_back(std::move(row));
    }
    return {schema, std::move(rows)};
}

/// The decision is a fixed hash of the condition values, so equal rows always
/// carry equal decisions and the table is consistent.
inline roughteam::DecisionTable consistent_table(roughteam::RandomSource& rng,
                                                 const roughteam::AttributeSchema& schema,
                                                 std::size_t n) {
    std::vector<roughteam::TableRow> rows;
    for (std::size_t i = 0; i < n; ++i) {
        roughteam::TableRow row;
        std::uint64_t mix = 0x9E3779B97F4A7C15ULL;
        for (std::size_t a = 0; a < schema.attribute_count(); ++a) {
            const std::size_t v = rng.next_below(schema.condition(a).values.size());
            row.values.push_back(v);
            mix = (mix ^ (v + 1)) * 0x100000001B3ULL;
        }
        row.decision = mix % schema.class_count();
        rows.push_back(std::move(row));
    }
    return {schema, std::move(rows)};
}

}  // namespace testutil
