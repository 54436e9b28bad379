#pragma once

#include "config.hpp"
#include "csv.hpp"

#include <string>
#include <vector>

namespace kgfrac {

enum class Command { solve, table, surface, sweep };

struct ErrorRow {
    double t;
    double a;    // method under test
    double b;    // reference column
    double abs;  // |a - b|
    double rel;  // abs / |b|
};

struct ErrorTable {
    std::string column_a;
    std::string column_b;
    std::vector<ErrorRow> rows;

    CsvTable to_csv() const;
};

struct RunOutput {
    CsvTable csv;
    std::vector<std::string> warnings;
};

/// (t, u) at the probe x: the series, or the printed closed form in printed mode.
RunOutput run_series(const RunConfig& cfg);

/// Series against the reference integrator (mode table) or against the
/// printed closed form (mode compare).
ErrorTable run_table(const RunConfig& cfg, std::vector<std::string>* warnings = nullptr);

/// (x, t, u) triples, x-major.
RunOutput run_surface(const RunConfig& cfg, unsigned threads);

/// One column per alpha at the probe x.
RunOutput run_alpha_sweep(const RunConfig& cfg);

RunOutput run(const RunConfig& cfg, Command command, unsigned threads);

}  // namespace kgfrac
