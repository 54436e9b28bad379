#include "config.hpp"

#include "error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

namespace kgfrac {

std::vector<double> Range::values() const {
    if (single()) return {start};
    const auto count = static_cast<std::size_t>(std::floor((end - start) / step + 1e-9)) + 1;
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = start + static_cast<double>(i) * step;
    return out;
}

std::string_view mode_name(Mode m) {
    switch (m) {
        case Mode::series: return "series";
        case Mode::compare: return "compare";
        case Mode::table: return "table";
        case Mode::surface: return "surface";
        case Mode::printed: return "printed";
    }
    return "?";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

class LineError {
public:
    LineError(std::size_t line, std::size_t column) : line_(line), column_(column) {}
    [[noreturn]] void operator()(const std::string& msg) const {
        fail(ErrorKind::config, "line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + msg);
    }

private:
    std::size_t line_;
    std::size_t column_;
};

double to_number(std::string_view text, const LineError& err) {
    const std::string s(trim(text));
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) err("expected a number, got '" + s + "'");
    return v;
}

int to_int(std::string_view text, const LineError& err) {
    const double v = to_number(text, err);
    if (std::nearbyint(v) != v) err("expected an integer");
    return static_cast<int>(v);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t at = s.find(sep, start);
        out.push_back(trim(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start)));
        if (at == std::string_view::npos) break;
        start = at + 1;
    }
    return out;
}

Range to_range(std::string_view text, const LineError& err, const char* what) {
    const auto parts = split(text, ':');
    Range r;
    if (parts.size() == 1) {
        r.start = r.end = to_number(parts[0], err);
        return r;
    }
    if (parts.size() != 3) err(std::string(what) + " must be a value or start:end:step");
    r.start = to_number(parts[0], err);
    r.end = to_number(parts[1], err);
    r.step = to_number(parts[2], err);
    if (!(r.step > 0.0)) err(std::string(what) + " step must be positive");
    if (r.end < r.start) err(std::string(what) + " range must be increasing");
    return r;
}

std::string format_alpha(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

bool to_bool(std::string_view text, const LineError& err) {
    const std::string_view v = trim(text);
    if (v == "true" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "no" || v == "0") return false;
    err("expected true or false");
}

}  // namespace

ProblemSpec RunConfig::problem(double alpha) const {
    if (builtin) return builtin_problem(*builtin, alpha);
    ProblemSpec p = custom;
    p.order = FracOrder::from_mu(alpha);
    p.validate();
    return p;
}

Grid1D RunConfig::reference_grid() const {
    const auto xs = x.values();
    const double lo = xs.front();
    const double hi = xs.back();
    if (builtin && !domain) return kgfrac::reference_grid(*builtin, lo, hi, cells);
    if (domain) {
        const Boundary b = boundary.value_or(Boundary::periodic);
        return Grid1D(domain->first, domain->second, cells, b);
    }
    const double half = 3.141592653589793;
    const double centre = 0.5 * (lo + hi);
    return Grid1D(centre - half, centre + half, cells, boundary.value_or(Boundary::periodic));
}

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::set<std::string> seen;
    bool have_problem = false;
    bool have_x = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        if (trim(raw).empty()) continue;

        const std::size_t eq = raw.find('=');
        if (eq == std::string_view::npos) LineError(line_no, 1)("expected 'key = value'");
        const std::string key(trim(raw.substr(0, eq)));
        const std::string_view value = trim(raw.substr(eq + 1));
        const std::size_t key_col = raw.find_first_not_of(" \t") + 1;
        const std::size_t value_col = eq + 2 + (raw.substr(eq + 1).find_first_not_of(" \t") == std::string_view::npos
                                                    ? 0
                                                    : raw.substr(eq + 1).find_first_not_of(" \t"));
        const LineError key_err(line_no, key_col);
        const LineError err(line_no, value_col);
        if (key.empty()) key_err("missing key");
        if (!seen.insert(key).second) key_err("duplicate key '" + key + "'");
        if (value.empty()) err("missing value for '" + key + "'");

        if (key == "problem") {
            have_problem = true;
            if (value != "custom") {
                cfg.builtin = builtin_from_name(value);
                if (!cfg.builtin) err("unknown problem '" + std::string(value) + "' (ex41, ex42, ex43, ex44, custom)");
            }
        } else if (key == "alpha") {
            for (std::string_view part : split(value, ',')) cfg.alphas.push_back(to_number(part, err));
        } else if (key == "N") {
            cfg.n_max = to_int(value, err);
            if (cfg.n_max < 1) err("N must be at least 1");
        } else if (key == "x") {
            cfg.x = to_range(value, err, "x");
            have_x = true;
        } else if (key == "t") {
            cfg.t = to_range(value, err, "t");
            if (cfg.t.start < 0.0) err("times must be nonnegative");
        } else if (key == "mode") {
            if (value == "series") cfg.mode = Mode::series;
            else if (value == "compare") cfg.mode = Mode::compare;
            else if (value == "table") cfg.mode = Mode::table;
            else if (value == "surface") cfg.mode = Mode::surface;
            else if (value == "printed") cfg.mode = Mode::printed;
            else err("unknown mode '" + std::string(value) + "'");
        } else if (key == "output") {
            cfg.output = std::string(value);
        } else if (key == "a") {
            cfg.custom.a = to_number(value, err);
        } else if (key == "b") {
            cfg.custom.b = to_number(value, err);
        } else if (key == "nonlinearity") {
            if (value == "none") {
                cfg.custom.g.kind = NonlinearityKind::none;
            } else if (value == "square") {
                cfg.custom.g.kind = NonlinearityKind::square;
            } else if (value == "cube") {
                cfg.custom.g.kind = NonlinearityKind::cube;
            } else if (value.starts_with("poly:")) {
                cfg.custom.g.kind = NonlinearityKind::poly;
                for (std::string_view c : split(value.substr(5), ',')) cfg.custom.g.poly.push_back(to_number(c, err));
            } else {
                err("nonlinearity must be none, square, cube or poly: c1, c2, ...");
            }
        } else if (key == "g0" || key == "g1") {
            try {
                (key == "g0" ? cfg.custom.g0 : cfg.custom.g1) = InitialData::parse(value);
            } catch (const Error& e) {
                err(e.what());
            }
        } else if (key == "source") {
            for (std::string_view term : split(value, ',')) {
                const auto parts = split(term, ':');
                if (parts.size() != 3) err("source terms are coeff:x_power:t_index");
                cfg.custom.source.push_back({to_number(parts[0], err), to_int(parts[1], err), to_int(parts[2], err)});
            }
        } else if (key == "allow_fractional_g1") {
            cfg.custom.allow_fractional_g1 = to_bool(value, err);
        } else if (key == "cells") {
            cfg.cells = to_int(value, err);
            if (cfg.cells < 4) err("cells must be at least 4");
        } else if (key == "dt") {
            cfg.dt = to_number(value, err);
            if (!(cfg.dt > 0.0)) err("dt must be positive");
        } else if (key == "domain") {
            const auto parts = split(value, ':');
            if (parts.size() != 2) err("domain must be lo:hi");
            cfg.domain = std::pair{to_number(parts[0], err), to_number(parts[1], err)};
            if (!(cfg.domain->second > cfg.domain->first)) err("domain must satisfy lo < hi");
        } else if (key == "boundary") {
            if (value == "periodic") cfg.boundary = Boundary::periodic;
            else if (value == "dirichlet") cfg.boundary = Boundary::dirichlet_frozen;
            else err("boundary must be periodic or dirichlet");
        } else if (key == "surface_source") {
            if (value == "series") cfg.surface_source = SurfaceSource::series;
            else if (value == "reference") cfg.surface_source = SurfaceSource::reference;
            else err("surface_source must be series or reference");
        } else {
            key_err("unknown key '" + key + "'");
        }
    }

    for (double alpha : cfg.alphas) {
        if (cfg.builtin) {
            if (!builtin_alpha_admissible(*cfg.builtin, alpha))
                fail(ErrorKind::config, "alpha = " + format_alpha(alpha) + " is outside the admissible range of " +
                                            std::string(builtin_name(*cfg.builtin)));
        } else if (!(alpha > 0.0 && alpha <= 2.0)) {
            fail(ErrorKind::config, "alpha = " + format_alpha(alpha) + " is outside the admissible range (0, 2]");
        }
    }
    auto missing = [](const char* what) { fail(ErrorKind::config, std::string("missing required key '") + what + "'"); };
    if (!have_problem) missing("problem");
    if (cfg.alphas.empty()) missing("alpha");
    if (!have_x) missing("x");
    if (!cfg.builtin) {
        if (cfg.custom.g0.terms().empty()) missing("g0");
        for (double alpha : cfg.alphas) cfg.problem(alpha);
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::io, "cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace kgfrac
