#pragma once

#include "problem.hpp"
#include "reference.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kgfrac {

enum class Mode { series, compare, table, surface, printed };
enum class SurfaceSource { series, reference };

/// "start:end:step" or a single value.
struct Range {
    double start = 0.0;
    double end = 0.0;
    double step = 1.0;

    bool single() const noexcept { return start == end; }
    std::vector<double> values() const;
};

struct RunConfig {
    std::optional<BuiltinId> builtin;
    ProblemSpec custom;  // used when builtin is empty; order set per alpha
    std::vector<double> alphas;
    int n_max = 12;
    Range x;
    Range t;
    std::optional<Mode> mode;
    std::string output;

    // Reference integrator
    int cells = 1024;
    double dt = 1e-4;
    std::optional<std::pair<double, double>> domain;
    std::optional<Boundary> boundary;
    SurfaceSource surface_source = SurfaceSource::series;

    ProblemSpec problem(double alpha) const;
    Grid1D reference_grid() const;
};

/// Parses the line-oriented "key = value" format ('#' starts a comment).
/// Errors name the offending line and column.
RunConfig parse_config(std::string_view text);

RunConfig load_config(const std::string& path);

std::string_view mode_name(Mode m);

}  // namespace kgfrac
