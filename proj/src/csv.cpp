#include "csv.hpp"

#include "error.hpp"

#include <cstdio>
#include <cstdlib>

namespace kgfrac {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string CsvTable::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        out += header[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

CsvTable CsvTable::parse(std::string_view text) {
    CsvTable table;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        if (line_no == 1) {
            for (std::string_view cell : split(line)) table.header.emplace_back(cell);
            continue;
        }
        if (line.empty()) continue;
        std::vector<double> row;
        for (std::string_view cell : split(line)) {
            const std::string s(cell);
            char* end = nullptr;
            const double v = std::strtod(s.c_str(), &end);
            if (s.empty() || end != s.c_str() + s.size())
                fail(ErrorKind::io, "csv line " + std::to_string(line_no) + ": bad number '" + s + "'");
            row.push_back(v);
        }
        if (row.size() != table.header.size())
            fail(ErrorKind::io, "csv line " + std::to_string(line_no) + ": expected " +
                                    std::to_string(table.header.size()) + " fields");
        table.rows.push_back(std::move(row));
    }
    if (line_no == 0) fail(ErrorKind::io, "empty csv");
    return table;
}

}  // namespace kgfrac
