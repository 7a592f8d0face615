#include "roughteam/schema.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "roughteam/errors.hpp"
#include "text_util.hpp"

namespace roughteam {

namespace {

using detail::split;
using detail::trim;

// Names and values must survive the file grammars unquoted, so everything
// that acts as a delimiter somewhere (CSV cells, v1|v2 lists, key=value
// lines, rule antecedents, support brackets) is rejected up front.
void check_token(const std::string& token, const char* what) {
    if (token.empty()) {
        throw validation_error(std::string(what) + " must not be empty");
    }
    if (token != std::string(trim(token))) {
        throw validation_error(std::string(what) + " '" + token +
                               "' must not start or end with whitespace");
    }
    if (token == "*") {
        throw validation_error(std::string(what) + " must not be '*'");
    }
    for (const char c : token) {
        static const std::string forbidden = ",|=[]#:";
        if (forbidden.find(c) != std::string::npos || c == '\n' || c == '\t') {
            throw validation_error(std::string(what) + " '" + token +
                                   "' contains the reserved character '" + c + "'");
        }
    }
    for (const char* phrase : {" AND ", " OR "}) {
        if (token.find(phrase) != std::string::npos) {
            throw validation_error(std::string(what) + " '" + token + "' contains the reserved phrase '" +
                                   phrase + "'");
        }
    }
}

void check_attribute(const Attribute& attribute, const char* kind) {
    check_token(attribute.name, kind);
    if (attribute.values.size() < 2) {
        throw validation_error("attribute '" + attribute.name + "' needs at least two values");
    }
    std::set<std::string> seen;
    for (const auto& value : attribute.values) {
        check_token(value, "attribute value");
        if (!seen.insert(value).second) {
            throw validation_error("attribute '" + attribute.name + "' repeats the value '" + value +
                                   "'");
        }
    }
}

std::string underscores_to_spaces(std::string_view token) {
    std::string out(token);
    for (char& c : out) {
        if (c == '_') c = ' ';
    }
    return out;
}

// Shared by condition_value_index and class_index: literal name first, then
// the integer code, then the underscore spelling ("team_leader").
std::optional<std::size_t> resolve_value(const Attribute& attribute, std::string_view raw,
                                         long long code_base) {
    const std::string token(trim(raw));
    if (token.empty()) return std::nullopt;
    for (std::size_t i = 0; i < attribute.values.size(); ++i) {
        if (attribute.values[i] == token) return i;
    }
    if (const auto code = detail::parse_integer(token)) {
        const long long index = *code - code_base;
        if (index >= 0 && index < static_cast<long long>(attribute.values.size())) {
            return static_cast<std::size_t>(index);
        }
        return std::nullopt;
    }
    const std::string spaced = underscores_to_spaces(token);
    for (std::size_t i = 0; i < attribute.values.size(); ++i) {
        if (attribute.values[i] == spaced) return i;
    }
    return std::nullopt;
}

}  // namespace

AttributeSchema::AttributeSchema(std::vector<Attribute> conditions, Attribute decision)
    : conditions_(std::move(conditions)), decision_(std::move(decision)) {
    if (conditions_.empty()) {
        throw validation_error("a schema needs at least one condition attribute");
    }
    if (conditions_.size() > 64) {
        throw validation_error("schemas are limited to 64 condition attributes");
    }
    std::set<std::string> names;
    for (const auto& attribute : conditions_) {
        check_attribute(attribute, "attribute name");
        if (!names.insert(attribute.name).second) {
            throw validation_error("duplicate attribute name '" + attribute.name + "'");
        }
    }
    check_attribute(decision_, "decision attribute name");
    if (!names.insert(decision_.name).second) {
        throw validation_error("duplicate attribute name '" + decision_.name + "'");
    }
}

std::optional<std::size_t> AttributeSchema::condition_index(std::string_view name) const {
    const std::string_view wanted = trim(name);
    for (std::size_t i = 0; i < conditions_.size(); ++i) {
        if (conditions_[i].name == wanted) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> AttributeSchema::condition_value_index(std::size_t attribute,
                                                                  std::string_view token) const {
    if (attribute >= conditions_.size()) {
        throw validation_error("condition attribute index out of range");
    }
    return resolve_value(conditions_[attribute], token, 1);
}

std::optional<std::size_t> AttributeSchema::class_index(std::string_view token) const {
    return resolve_value(decision_, token, 0);
}

bool AttributeSchema::value_names_globally_unique() const {
    std::set<std::string> seen;
    for (const auto& attribute : conditions_) {
        for (const auto& value : attribute.values) {
            if (!seen.insert(value).second) return false;
        }
    }
    for (const auto& value : decision_.values) {
        if (!seen.insert(value).second) return false;
    }
    return true;
}

const AttributeSchema& mbti_team_schema() {
    static const AttributeSchema schema(
        {
            {"role", {"team leader", "programmer"}},
            {"ie", {"introvert", "extrovert"}},
            {"sn", {"sensing", "intuiting"}},
            {"tf", {"thinking", "feeling"}},
            {"jp", {"judging", "perceiving"}},
            {"gender", {"male", "female"}},
        },
        {"performance", {"ineffective", "effective"}});
    return schema;
}

std::optional<AttributeSchema> find_builtin_schema(std::string_view name) {
    if (trim(name) == "mbti-team-v1") return mbti_team_schema();
    return std::nullopt;
}

AttributeSchema read_schema(std::istream& in) {
    std::vector<Attribute> conditions;
    std::optional<Attribute> decision;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view content = trim(line);
        if (content.empty() || content.front() == '#') continue;
        const std::size_t eq = content.find('=');
        if (eq == std::string_view::npos) {
            throw validation_error("schema line " + std::to_string(line_no) +
                                   ": expected key=name:v1|v2|...");
        }
        const std::string key(trim(content.substr(0, eq)));
        const std::string_view rest = content.substr(eq + 1);
        const std::size_t colon = rest.find(':');
        if (colon == std::string_view::npos) {
            throw validation_error("schema line " + std::to_string(line_no) +
                                   ": missing ':' between name and values");
        }
        Attribute attribute;
        attribute.name = std::string(trim(rest.substr(0, colon)));
        for (const auto& value : split(rest.substr(colon + 1), '|')) {
            attribute.values.emplace_back(trim(value));
        }
        if (key == "attribute") {
            conditions.push_back(std::move(attribute));
        } else if (key == "decision") {
            if (decision) {
                throw validation_error("schema line " + std::to_string(line_no) +
                                       ": second decision attribute");
            }
            decision = std::move(attribute);
        } else {
            throw validation_error("schema line " + std::to_string(line_no) + ": unknown key '" +
                                   key + "'");
        }
    }
    if (!decision) {
        throw validation_error("schema has no decision line");
    }
    return AttributeSchema(std::move(conditions), std::move(*decision));
}

namespace {

void write_attribute_line(std::ostream& out, const char* key, const Attribute& attribute) {
    out << key << '=' << attribute.name << ':';
    for (std::size_t i = 0; i < attribute.values.size(); ++i) {
        if (i > 0) out << '|';
        out << attribute.values[i];
    }
    out << '\n';
}

}  // namespace

void write_schema(std::ostream& out, const AttributeSchema& schema) {
    for (const auto& attribute : schema.conditions()) {
        write_attribute_line(out, "attribute", attribute);
    }
    write_attribute_line(out, "decision", schema.decision());
}

}  // namespace roughteam
