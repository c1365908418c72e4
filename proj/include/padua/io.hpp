#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace padua::io {

using Value = std::variant<std::string, double, std::int64_t>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Value>> rows;
};

enum class Format { csv, json };

Format format_from_string(const std::string& s);

// 17 significant digits; round-trips bit-exactly and is locale independent.
std::string format_double(double v);
std::string format_value(const Value& v);

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

// Atomic write (temp file + rename). A destination of "-" writes to stdout.
void write_output(const Table& t, Format format, const std::string& destination);

// Minimal CSV reader for files this tool writes (no quoting/escapes).
struct CsvData {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvData read_csv(const std::string& path);

double parse_double(const std::string& s);

} // namespace padua::io
