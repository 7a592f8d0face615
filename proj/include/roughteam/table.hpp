#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "roughteam/schema.hpp"

namespace roughteam {

/// One object: value indices per condition attribute (schema order) plus the
/// decision class index.
struct TableRow {
    std::vector<std::size_t> values;
    std::size_t decision = 0;

    bool operator==(const TableRow&) const = default;
};

/// The information system: objects described by categorical condition
/// attributes plus one decision attribute. Immutable after construction and
/// safe to read from any number of threads. Object ids are stable and
/// 1-based.
class DecisionTable {
public:
    DecisionTable(AttributeSchema schema, std::vector<TableRow> rows);

    const AttributeSchema& schema() const { return schema_; }
    std::size_t object_count() const { return rows_.size(); }
    const TableRow& row(std::size_t object_id) const;  // 1-based
    std::size_t value(std::size_t object_id, std::size_t attribute) const;
    std::size_t decision(std::size_t object_id) const;

    /// Object counts per decision class, schema class order. Sums to n.
    std::vector<std::size_t> class_counts() const;

    /// New table holding the given objects (ids renumbered 1..m in the given
    /// order); used by the fold harness.
    DecisionTable subset(const std::vector<std::size_t>& object_ids) const;

private:
    AttributeSchema schema_;
    std::vector<TableRow> rows_;
};

/// Comma-separated text with a mandatory header naming every schema attribute
/// plus the decision attribute (any column order). Cells hold value names or
/// integer codes; '#' lines are comments. Errors carry row/column positions.
DecisionTable read_table(std::istream& in, const AttributeSchema& schema);
DecisionTable read_table_file(const std::filesystem::path& path, const AttributeSchema& schema);

/// Canonical form: header in schema order (decision last), cells as value
/// names, '\n' line endings. Loading then writing a canonical file is the
/// identity.
void write_table(std::ostream& out, const DecisionTable& table);
std::string table_to_text(const DecisionTable& table);

/// Records for classification: same format as read_table, but the decision
/// column may be absent. TableRow::decision is meaningful only when labeled.
struct RecordSet {
    std::vector<TableRow> rows;
    bool labeled = false;
};

RecordSet read_records(std::istream& in, const AttributeSchema& schema);
RecordSet read_records_file(const std::filesystem::path& path, const AttributeSchema& schema);

enum class Role { team_leader, programmer };
enum class Energy { introvert, extrovert };
enum class Perception { sensing, intuiting };
enum class Judgment { thinking, feeling };
enum class Lifestyle { judging, perceiving };
enum class Gender { male, female };
enum class Outcome { ineffective, effective };

/// One record of the team schema. The integer encoding is role 1/2,
/// introvert/extrovert 1/2, sensing/intuiting 1/2, thinking/feeling 1/2,
/// judging/perceiving 1/2, male/female 1/2.
struct CandidateProfile {
    Role role = Role::team_leader;
    Energy ie = Energy::introvert;
    Perception sn = Perception::sensing;
    Judgment tf = Judgment::thinking;
    Lifestyle jp = Lifestyle::judging;
    Gender gender = Gender::male;

    bool operator==(const CandidateProfile&) const = default;
};

/// Codes in schema order: role, IE, SN, TF, JP, gender.
std::array<int, 6> encode_profile(const CandidateProfile& profile);
/// Inverse of encode_profile; rejects codes outside {1,2}.
CandidateProfile decode_profile(const std::array<int, 6>& codes);

/// Bridge to the generic row representation under mbti_team_schema().
std::vector<std::size_t> profile_values(const CandidateProfile& profile);
CandidateProfile profile_from_values(const std::vector<std::size_t>& values);

}  // namespace roughteam
