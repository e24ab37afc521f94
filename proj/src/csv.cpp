#include "tabforge/csv.hpp"

#include "tabforge/common.hpp"

#include <fstream>
#include <sstream>

namespace tabforge::csv {

namespace {

std::vector<std::vector<std::string>> parse(const std::string& text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool in_quotes = false;
    bool any_field = false;

    auto end_field = [&] {
        record.push_back(field);
        field.clear();
        any_field = false;
    };
    auto end_record = [&] {
        end_field();
        records.push_back(std::move(record));
        record.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                in_quotes = true;
                any_field = true;
                break;
            case ',':
                end_field();
                any_field = true; // the comma implies a following field
                break;
            case '\r':
                break;
            case '\n':
                end_record();
                break;
            default:
                field.push_back(c);
                any_field = true;
                break;
        }
    }
    if (in_quotes) fail("UnterminatedQuote", "csv: unterminated quoted field");
    if (!field.empty() || any_field || !record.empty()) end_record();
    return records;
}

} // namespace

Document read_string(const std::string& text) {
    Document doc;
    auto records = parse(text);
    if (records.empty()) fail("EmptyDocument", "csv: no header row");
    doc.header = std::move(records.front());
    doc.rows.assign(std::make_move_iterator(records.begin() + 1),
                    std::make_move_iterator(records.end()));
    return doc;
}

Document read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("MissingFile", "csv: cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return read_string(buffer.str());
}

std::string escape_field(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

void write_file(const std::string& path, const Document& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("WriteFailure", "csv: cannot write " + path);
    auto write_row = [&out](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << escape_field(row[i]);
        }
        out << '\n';
    };
    write_row(doc.header);
    for (const auto& row : doc.rows) write_row(row);
}

} // namespace tabforge::csv
