#pragma once

#include <string>
#include <vector>

namespace tabforge::csv {

struct Document {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Minimal RFC-4180-ish parser: comma separated, optional double-quote
/// quoting with "" escapes, tolerates a trailing newline and CRLF endings.
Document read_file(const std::string& path);

Document read_string(const std::string& text);

/// Quotes a field only when it contains a comma, quote or newline.
std::string escape_field(const std::string& field);

void write_file(const std::string& path, const Document& doc);

} // namespace tabforge::csv
