#include "runner.hpp"

#include "closedforms.hpp"
#include "error.hpp"
#include "solver.hpp"

#include <cmath>
#include <limits>

namespace kgfrac {

CsvTable ErrorTable::to_csv() const {
    CsvTable csv{{"t", column_a, column_b, "abs_err", "rel_err"}, {}};
    for (const ErrorRow& r : rows) csv.rows.push_back({r.t, r.a, r.b, r.abs, r.rel});
    return csv;
}

namespace {

Mode resolve_mode(const RunConfig& cfg, Command command) {
    switch (command) {
        case Command::solve: {
            const Mode m = cfg.mode.value_or(Mode::series);
            if (m != Mode::series && m != Mode::printed)
                fail(ErrorKind::config, "solve runs in mode series or printed, not " + std::string(mode_name(m)));
            return m;
        }
        case Command::table: {
            const Mode m = cfg.mode.value_or(Mode::table);
            if (m != Mode::table && m != Mode::compare)
                fail(ErrorKind::config, "table runs in mode table or compare, not " + std::string(mode_name(m)));
            return m;
        }
        case Command::surface: {
            const Mode m = cfg.mode.value_or(Mode::surface);
            if (m != Mode::surface)
                fail(ErrorKind::config, "surface runs in mode surface, not " + std::string(mode_name(m)));
            return m;
        }
        case Command::sweep: {
            const Mode m = cfg.mode.value_or(Mode::series);
            if (m != Mode::series && m != Mode::printed)
                fail(ErrorKind::config, "sweep runs in mode series or printed, not " + std::string(mode_name(m)));
            return m;
        }
    }
    fail(ErrorKind::config, "unknown command");
}

double single_alpha(const RunConfig& cfg, const char* command) {
    if (cfg.alphas.size() != 1)
        fail(ErrorKind::config, std::string(command) + " takes exactly one alpha; use sweep for several");
    return cfg.alphas.front();
}

double probe_x(const RunConfig& cfg) {
    if (!cfg.x.single()) fail(ErrorKind::config, "this command needs a single probe x, not a range");
    return cfg.x.start;
}

BuiltinId require_builtin(const RunConfig& cfg) {
    if (!cfg.builtin) fail(ErrorKind::config, "printed closed forms exist only for the builtin examples");
    return *cfg.builtin;
}

void append(std::vector<std::string>* sink, const std::vector<std::string>& items) {
    if (sink) sink->insert(sink->end(), items.begin(), items.end());
}

}  // namespace

RunOutput run_series(const RunConfig& cfg) {
    const Mode mode = resolve_mode(cfg, Command::solve);
    const double alpha = single_alpha(cfg, "solve");
    const double x = probe_x(cfg);
    RunOutput out{{{"t", "u"}, {}}, {}};
    if (mode == Mode::printed) {
        const BuiltinId id = require_builtin(cfg);
        for (double t : cfg.t.values()) out.csv.rows.push_back({t, printed::eval(id, alpha, x, t, cfg.n_max)});
        return out;
    }
    const SeriesSolution s = solve_frdtm(cfg.problem(alpha), x, cfg.n_max);
    out.warnings = s.warnings;
    for (double t : cfg.t.values()) out.csv.rows.push_back({t, eval_series(s, t)});
    return out;
}

ErrorTable run_table(const RunConfig& cfg, std::vector<std::string>* warnings) {
    const Mode mode = resolve_mode(cfg, Command::table);
    const double alpha = single_alpha(cfg, "table");
    const double x = probe_x(cfg);
    const std::vector<double> ts = cfg.t.values();
    const ProblemSpec problem = cfg.problem(alpha);
    const SeriesSolution s = solve_frdtm(problem, x, cfg.n_max);
    append(warnings, s.warnings);

    ErrorTable table;
    table.column_a = "frdtm";
    std::vector<double> reference(ts.size());
    if (mode == Mode::compare) {
        const BuiltinId id = require_builtin(cfg);
        table.column_b = "printed";
        for (std::size_t i = 0; i < ts.size(); ++i) reference[i] = printed::eval(id, alpha, x, ts[i], cfg.n_max);
    } else {
        if (alpha != 1.0 && alpha != 2.0)
            fail(ErrorKind::config, "the reference column needs an integer order (alpha = 1 or 2)");
        table.column_b = "irk";
        const Grid1D grid = cfg.reference_grid();
        const GridSolution sol = integrate(problem, grid, ts.back(), cfg.dt, ts);
        // Rows of sol follow t = 0 and then the sorted record times.
        for (std::size_t i = 0; i < ts.size(); ++i) {
            std::size_t row = 0;
            for (std::size_t r = 0; r < sol.times.size(); ++r)
                if (sol.times[r] == ts[i]) row = r;
            reference[i] = sol.at(row, x);
        }
    }
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double a = eval_series(s, ts[i]);
        const double b = reference[i];
        const double abs = std::abs(a - b);
        const double rel = abs == 0.0 ? 0.0 : abs / std::abs(b);
        table.rows.push_back({ts[i], a, b, abs, rel});
    }
    return table;
}

RunOutput run_surface(const RunConfig& cfg, unsigned threads) {
    resolve_mode(cfg, Command::surface);
    const double alpha = single_alpha(cfg, "surface");
    const std::vector<double> xs = cfg.x.values();
    const std::vector<double> ts = cfg.t.values();
    const ProblemSpec problem = cfg.problem(alpha);
    RunOutput out{{{"x", "t", "u"}, {}}, {}};
    out.csv.rows.reserve(xs.size() * ts.size());
    if (cfg.surface_source == SurfaceSource::series) {
        const std::vector<double> u = eval_grid(problem, xs, ts, cfg.n_max, threads);
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = 0; j < ts.size(); ++j) out.csv.rows.push_back({xs[i], ts[j], u[i * ts.size() + j]});
        return out;
    }
    const GridSolution sol = integrate(problem, cfg.reference_grid(), ts.back(), cfg.dt, ts);
    for (double x : xs)
        for (std::size_t j = 0; j < ts.size(); ++j) {
            std::size_t row = 0;
            for (std::size_t r = 0; r < sol.times.size(); ++r)
                if (sol.times[r] == ts[j]) row = r;
            out.csv.rows.push_back({x, ts[j], sol.at(row, x)});
        }
    return out;
}

RunOutput run_alpha_sweep(const RunConfig& cfg) {
    const Mode mode = resolve_mode(cfg, Command::sweep);
    const double x = probe_x(cfg);
    const std::vector<double> ts = cfg.t.values();
    RunOutput out{{{"t"}, {}}, {}};
    std::vector<std::vector<double>> columns;
    for (double alpha : cfg.alphas) {
        out.csv.header.push_back("alpha=" + format_number(alpha));
        std::vector<double> col(ts.size());
        if (mode == Mode::printed) {
            const BuiltinId id = require_builtin(cfg);
            for (std::size_t j = 0; j < ts.size(); ++j) col[j] = printed::eval(id, alpha, x, ts[j], cfg.n_max);
        } else {
            const SeriesSolution s = solve_frdtm(cfg.problem(alpha), x, cfg.n_max);
            out.warnings.insert(out.warnings.end(), s.warnings.begin(), s.warnings.end());
            for (std::size_t j = 0; j < ts.size(); ++j) col[j] = eval_series(s, ts[j]);
        }
        columns.push_back(std::move(col));
    }
    for (std::size_t j = 0; j < ts.size(); ++j) {
        std::vector<double> row{ts[j]};
        for (const auto& col : columns) row.push_back(col[j]);
        out.csv.rows.push_back(std::move(row));
    }
    return out;
}

RunOutput run(const RunConfig& cfg, Command command, unsigned threads) {
    switch (command) {
        case Command::solve: return run_series(cfg);
        case Command::table: {
            RunOutput out;
            out.csv = run_table(cfg, &out.warnings).to_csv();
            return out;
        }
        case Command::surface: return run_surface(cfg, threads);
        case Command::sweep: return run_alpha_sweep(cfg);
    }
    fail(ErrorKind::config, "unknown command");
}

}  // namespace kgfrac
