#include "padua/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace padua::io {

Format format_from_string(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw std::invalid_argument("unknown output format '" + s + "'");
}

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string format_value(const Value& v) {
    if (std::holds_alternative<std::string>(v)) return std::get<std::string>(v);
    if (std::holds_alternative<double>(v)) return format_double(std::get<double>(v));
    return std::to_string(std::get<std::int64_t>(v));
}

std::string to_csv(const Table& t) {
    std::string out;
    for (std::size_t c = 0; c < t.header.size(); ++c) {
        if (c) out += ',';
        out += t.header[c];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        if (row.size() != t.header.size())
            throw std::invalid_argument("to_csv: row width does not match header");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_value(row[c]);
        }
        out += '\n';
    }
    return out;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += ch;
        }
    }
    return out;
}

} // namespace

std::string to_json(const Table& t) {
    std::string out = "[\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        if (row.size() != t.header.size())
            throw std::invalid_argument("to_json: row width does not match header");
        out += "  {";
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ", ";
            out += '"' + json_escape(t.header[c]) + "\": ";
            if (std::holds_alternative<std::string>(row[c]))
                out += '"' + json_escape(std::get<std::string>(row[c])) + '"';
            else
                out += format_value(row[c]);
        }
        out += r + 1 < t.rows.size() ? "},\n" : "}\n";
    }
    out += "]\n";
    return out;
}

void write_output(const Table& t, Format format, const std::string& destination) {
    const std::string body = format == Format::csv ? to_csv(t) : to_json(t);
    if (destination.empty() || destination == "-") {
        std::fwrite(body.data(), 1, body.size(), stdout);
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(destination);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("write_output: cannot open '" + tmp.string() + "'");
        out.write(body.data(), static_cast<std::streamsize>(body.size()));
        if (!out)
            throw std::runtime_error("write_output: short write to '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("write_output: cannot rename into '" + destination +
                                 "': " + ec.message());
    }
}

CsvData read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_csv: cannot open '" + path + "'");
    CsvData data;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (line.back() == ',') cells.push_back("");
        if (first) {
            data.header = std::move(cells);
            first = false;
        } else {
            data.rows.push_back(std::move(cells));
        }
    }
    return data;
}

double parse_double(const std::string& s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::invalid_argument("parse_double: '" + s + "' is not a number");
    return v;
}

} // namespace padua::io
