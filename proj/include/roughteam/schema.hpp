#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace roughteam {

/// One categorical attribute: a name plus its ordered value list. The value
/// order fixes the integer codes accepted in data files: condition values are
/// coded 1..m, decision values 0..m-1 (matching the built-in team schema,
/// where the outcome is coded 0/1).
struct Attribute {
    std::string name;
    std::vector<std::string> values;

    bool operator==(const Attribute&) const = default;
};

/// Immutable description of a decision table: ordered condition attributes
/// plus one decision attribute. The decision value order is significant; all
/// per-class vectors downstream (supports, coverage, class sizes) follow it,
/// and class-tie rules resolve toward the earlier class.
class AttributeSchema {
public:
    AttributeSchema(std::vector<Attribute> conditions, Attribute decision);

    std::size_t attribute_count() const { return conditions_.size(); }
    const std::vector<Attribute>& conditions() const { return conditions_; }
    const Attribute& condition(std::size_t index) const { return conditions_.at(index); }
    const Attribute& decision() const { return decision_; }
    std::size_t class_count() const { return decision_.values.size(); }
    const std::string& class_name(std::size_t index) const { return decision_.values.at(index); }

    std::optional<std::size_t> condition_index(std::string_view name) const;

    /// Resolve a cell token to a value index. Accepts the literal value name,
    /// its integer code, or the name with '_' in place of ' '.
    std::optional<std::size_t> condition_value_index(std::size_t attribute, std::string_view token) const;
    std::optional<std::size_t> class_index(std::string_view token) const;

    /// Integer codes accepted in data files alongside value names.
    int condition_code(std::size_t value_index) const { return static_cast<int>(value_index) + 1; }
    int class_code(std::size_t class_index) const { return static_cast<int>(class_index); }

    /// True when no value name appears under two different attributes (nor as
    /// a class name). Such schemas support the bare rule phrasing
    /// ("team leader AND sensing AND female").
    bool value_names_globally_unique() const;

    bool operator==(const AttributeSchema&) const = default;

private:
    std::vector<Attribute> conditions_;
    Attribute decision_;
};

/// The built-in team-composition schema, addressable by name "mbti-team-v1":
/// role, the four MBTI dimensions, gender, and the binary team-performance
/// outcome with the integer codes 1/2 (conditions) and 0/1 (outcome).
const AttributeSchema& mbti_team_schema();

/// Resolve a built-in schema name; empty for unknown names.
std::optional<AttributeSchema> find_builtin_schema(std::string_view name);

/// Schema file format: '#' comments, then `attribute=name:v1|v2|...` lines in
/// order and one `decision=name:c1|c2|...` line.
AttributeSchema read_schema(std::istream& in);
void write_schema(std::ostream& out, const AttributeSchema& schema);

}  // namespace roughteam
