#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kgfrac {

/// Numeric CSV: one header line, comma delimiter, LF endings, numbers with
/// 15 significant digits.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::string to_string() const;
    static CsvTable parse(std::string_view text);
};

std::string format_number(double v);

}  // namespace kgfrac
