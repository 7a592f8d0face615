#include "roughteam/table.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "roughteam/errors.hpp"
#include "text_util.hpp"

namespace roughteam {

namespace {

using detail::split;
using detail::trim;

}  // namespace

DecisionTable::DecisionTable(AttributeSchema schema, std::vector<TableRow> rows)
    : schema_(std::move(schema)), rows_(std::move(rows)) {
    if (rows_.empty()) {
        throw validation_error("a decision table needs at least one object");
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const TableRow& row = rows_[i];
        if (row.values.size() != schema_.attribute_count()) {
            throw validation_error("object " + std::to_string(i + 1) + " has " +
                                   std::to_string(row.values.size()) + " values, schema has " +
                                   std::to_string(schema_.attribute_count()) + " attributes");
        }
        for (std::size_t a = 0; a < row.values.size(); ++a) {
            if (row.values[a] >= schema_.condition(a).values.size()) {
                throw validation_error("object " + std::to_string(i + 1) +
                                       ": value index out of range for attribute '" +
                                       schema_.condition(a).name + "'");
            }
        }
        if (row.decision >= schema_.class_count()) {
            throw validation_error("object " + std::to_string(i + 1) +
                                   ": decision class index out of range");
        }
    }
}

const TableRow& DecisionTable::row(std::size_t object_id) const {
    if (object_id < 1 || object_id > rows_.size()) {
        throw validation_error("object id " + std::to_string(object_id) + " out of range 1.." +
                               std::to_string(rows_.size()));
    }
    return rows_[object_id - 1];
}

std::size_t DecisionTable::value(std::size_t object_id, std::size_t attribute) const {
    const TableRow& r = row(object_id);
    if (attribute >= r.values.size()) {
        throw validation_error("attribute index " + std::to_string(attribute) + " out of range");
    }
    return r.values[attribute];
}

std::size_t DecisionTable::decision(std::size_t object_id) const { return row(object_id).decision; }

std::vector<std::size_t> DecisionTable::class_counts() const {
    std::vector<std::size_t> counts(schema_.class_count(), 0);
    for (const TableRow& r : rows_) ++counts[r.decision];
    return counts;
}

DecisionTable DecisionTable::subset(const std::vector<std::size_t>& object_ids) const {
    std::vector<TableRow> rows;
    rows.reserve(object_ids.size());
    for (const std::size_t id : object_ids) rows.push_back(row(id));
    return DecisionTable(schema_, std::move(rows));
}

namespace {

// Shared CSV scanner behind read_table and read_records. Column order is
// free; require_decision makes the decision column mandatory.
RecordSet read_csv(std::istream& in, const AttributeSchema& schema, bool require_decision) {
    std::string line;
    std::size_t line_no = 0;

    // header
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view content = trim(line);
        if (content.empty() || content.front() == '#') continue;
        for (const auto& cell : split(content, ',')) header.emplace_back(trim(cell));
        break;
    }
    if (header.empty()) {
        throw validation_error("table has no header row");
    }

    // map header columns to schema slots; slot attribute_count = decision
    const std::size_t decision_slot = schema.attribute_count();
    std::vector<std::size_t> column_slot(header.size());
    std::vector<bool> seen(schema.attribute_count() + 1, false);
    for (std::size_t c = 0; c < header.size(); ++c) {
        std::size_t slot;
        if (const auto idx = schema.condition_index(header[c])) {
            slot = *idx;
        } else if (trim(header[c]) == schema.decision().name) {
            slot = decision_slot;
        } else {
            throw validation_error("line " + std::to_string(line_no) + ": unknown attribute '" +
                                   header[c] + "' in header");
        }
        if (seen[slot]) {
            throw validation_error("line " + std::to_string(line_no) + ": attribute '" + header[c] +
                                   "' appears twice in header");
        }
        seen[slot] = true;
        column_slot[c] = slot;
    }
    for (std::size_t a = 0; a < schema.attribute_count(); ++a) {
        if (!seen[a]) {
            throw validation_error("header is missing attribute '" + schema.condition(a).name + "'");
        }
    }
    const bool labeled = seen[decision_slot];
    if (require_decision && !labeled) {
        throw validation_error("header is missing the decision attribute '" +
                               schema.decision().name + "'");
    }

    RecordSet out;
    out.labeled = labeled;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view content = trim(line);
        if (content.empty() || content.front() == '#') continue;
        const std::vector<std::string> cells = split(content, ',');
        if (cells.size() != header.size()) {
            throw validation_error("line " + std::to_string(line_no) + ": expected " +
                                   std::to_string(header.size()) + " cells, found " +
                                   std::to_string(cells.size()));
        }
        TableRow row;
        row.values.assign(schema.attribute_count(), 0);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const std::size_t slot = column_slot[c];
            const std::string& cell = cells[c];
            if (trim(cell).empty()) {
                throw validation_error("line " + std::to_string(line_no) + ": missing value for '" +
                                       header[c] + "'");
            }
            if (slot == decision_slot) {
                const auto idx = schema.class_index(cell);
                if (!idx) {
                    throw validation_error("line " + std::to_string(line_no) + ": '" +
                                           std::string(trim(cell)) + "' is not a class of '" +
                                           schema.decision().name + "'");
                }
                row.decision = *idx;
            } else {
                const auto idx = schema.condition_value_index(slot, cell);
                if (!idx) {
                    throw validation_error("line " + std::to_string(line_no) + ": '" +
                                           std::string(trim(cell)) + "' is not a value of '" +
                                           schema.condition(slot).name + "'");
                }
                row.values[slot] = *idx;
            }
        }
        out.rows.push_back(std::move(row));
    }
    if (out.rows.empty()) {
        throw validation_error("table has no data rows");
    }
    return out;
}

}  // namespace

DecisionTable read_table(std::istream& in, const AttributeSchema& schema) {
    RecordSet records = read_csv(in, schema, /*require_decision=*/true);
    return DecisionTable(schema, std::move(records.rows));
}

DecisionTable read_table_file(const std::filesystem::path& path, const AttributeSchema& schema) {
    std::ifstream in(path);
    if (!in) {
        throw validation_error("cannot open table file '" + path.string() + "'");
    }
    try {
        return read_table(in, schema);
    } catch (const validation_error& e) {
        throw validation_error(path.string() + ": " + e.what());
    }
}

RecordSet read_records(std::istream& in, const AttributeSchema& schema) {
    return read_csv(in, schema, /*require_decision=*/false);
}

RecordSet read_records_file(const std::filesystem::path& path, const AttributeSchema& schema) {
    std::ifstream in(path);
    if (!in) {
        throw validation_error("cannot open records file '" + path.string() + "'");
    }
    try {
        return read_records(in, schema);
    } catch (const validation_error& e) {
        throw validation_error(path.string() + ": " + e.what());
    }
}

void write_table(std::ostream& out, const DecisionTable& table) {
    const AttributeSchema& schema = table.schema();
    for (std::size_t a = 0; a < schema.attribute_count(); ++a) {
        out << schema.condition(a).name << ',';
    }
    out << schema.decision().name << '\n';
    for (std::size_t id = 1; id <= table.object_count(); ++id) {
        const TableRow& row = table.row(id);
        for (std::size_t a = 0; a < row.values.size(); ++a) {
            out << schema.condition(a).values[row.values[a]] << ',';
        }
        out << schema.class_name(row.decision) << '\n';
    }
}

std::string table_to_text(const DecisionTable& table) {
    std::ostringstream out;
    write_table(out, table);
    return out.str();
}

namespace {

int code_of(int zero_based) { return zero_based + 1; }

int checked_code(int code, const char* field) {
    if (code != 1 && code != 2) {
        throw validation_error(std::string("profile field ") + field + " must be 1 or 2, got " +
                               std::to_string(code));
    }
    return code;
}

}  // namespace

std::array<int, 6> encode_profile(const CandidateProfile& profile) {
    return {
        code_of(static_cast<int>(profile.role)), code_of(static_cast<int>(profile.ie)),
        code_of(static_cast<int>(profile.sn)),   code_of(static_cast<int>(profile.tf)),
        code_of(static_cast<int>(profile.jp)),   code_of(static_cast<int>(profile.gender)),
    };
}

CandidateProfile decode_profile(const std::array<int, 6>& codes) {
    CandidateProfile profile;
    profile.role = static_cast<Role>(checked_code(codes[0], "role") - 1);
    profile.ie = static_cast<Energy>(checked_code(codes[1], "ie") - 1);
    profile.sn = static_cast<Perception>(checked_code(codes[2], "sn") - 1);
    profile.tf = static_cast<Judgment>(checked_code(codes[3], "tf") - 1);
    profile.jp = static_cast<Lifestyle>(checked_code(codes[4], "jp") - 1);
    profile.gender = static_cast<Gender>(checked_code(codes[5], "gender") - 1);
    return profile;
}

std::vector<std::size_t> profile_values(const CandidateProfile& profile) {
    return {
        static_cast<std::size_t>(profile.role), static_cast<std::size_t>(profile.ie),
        static_cast<std::size_t>(profile.sn),   static_cast<std::size_t>(profile.tf),
        static_cast<std::size_t>(profile.jp),   static_cast<std::size_t>(profile.gender),
    };
}

CandidateProfile profile_from_values(const std::vector<std::size_t>& values) {
    if (values.size() != 6) {
        throw validation_error("a profile needs exactly 6 values, got " +
                               std::to_string(values.size()));
    }
    std::array<int, 6> codes{};
    for (std::size_t i = 0; i < 6; ++i) {
        codes[i] = static_cast<int>(values[i]) + 1;
    }
    return decode_profile(codes);
}

}  // namespace roughteam
