#include "kgfrac.h"

#include "closedforms.hpp"
#include "config.hpp"
#include "error.hpp"
#include "runner.hpp"
#include "solver.hpp"

#include <fstream>
#include <new>
#include <string>
#include <thread>

struct kgf_config {
    kgfrac::RunConfig cfg;
};

struct kgf_output {
    std::string csv;
    std::vector<std::string> warnings;
};

struct kgf_series {
    kgfrac::SeriesSolution solution;
};

namespace {

thread_local std::string last_error;

kgf_status status_of(kgfrac::ErrorKind kind) {
    switch (kind) {
        case kgfrac::ErrorKind::config: return KGF_CONFIG;
        case kgfrac::ErrorKind::io: return KGF_IO;
        case kgfrac::ErrorKind::numerical:
        case kgfrac::ErrorKind::insufficient_order: return KGF_NUMERICAL;
        case kgfrac::ErrorKind::domain:
        case kgfrac::ErrorKind::structural: return KGF_INVALID_ARGUMENT;
    }
    return KGF_INTERNAL;
}

template <class F>
kgf_status guarded(F&& body) {
    try {
        body();
        last_error.clear();
        return KGF_OK;
    } catch (const kgfrac::Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return KGF_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return KGF_INTERNAL;
    }
}

kgf_status null_argument(const char* name) {
    last_error = std::string(name) + " is null";
    return KGF_INVALID_ARGUMENT;
}

kgfrac::BuiltinId builtin_of(kgf_problem p) {
    switch (p) {
        case KGF_EX41: return kgfrac::BuiltinId::ex41;
        case KGF_EX42: return kgfrac::BuiltinId::ex42;
        case KGF_EX43: return kgfrac::BuiltinId::ex43;
        case KGF_EX44: return kgfrac::BuiltinId::ex44;
    }
    kgfrac::fail(kgfrac::ErrorKind::domain, "unknown problem id");
}

}  // namespace

extern "C" {

const char* kgf_version(void) { return "1.0.0"; }

const char* kgf_last_error(void) { return last_error.c_str(); }

kgf_status kgf_config_parse(const char* text, kgf_config** out) {
    if (!text) return null_argument("text");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] { *out = new kgf_config{kgfrac::parse_config(text)}; });
}

kgf_status kgf_config_load(const char* path, kgf_config** out) {
    if (!path) return null_argument("path");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] { *out = new kgf_config{kgfrac::load_config(path)}; });
}

const char* kgf_config_output_path(const kgf_config* cfg) { return cfg ? cfg->cfg.output.c_str() : ""; }

void kgf_config_free(kgf_config* cfg) { delete cfg; }

kgf_status kgf_run(const kgf_config* cfg, kgf_command command, unsigned threads, kgf_output** out) {
    if (!cfg) return null_argument("cfg");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        kgfrac::Command c;
        switch (command) {
            case KGF_SOLVE: c = kgfrac::Command::solve; break;
            case KGF_TABLE: c = kgfrac::Command::table; break;
            case KGF_SURFACE: c = kgfrac::Command::surface; break;
            case KGF_SWEEP: c = kgfrac::Command::sweep; break;
            default: kgfrac::fail(kgfrac::ErrorKind::domain, "unknown command");
        }
        if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
        kgfrac::RunOutput r = kgfrac::run(cfg->cfg, c, threads);
        *out = new kgf_output{r.csv.to_string(), std::move(r.warnings)};
    });
}

const char* kgf_output_csv(const kgf_output* out) { return out ? out->csv.c_str() : ""; }

size_t kgf_output_size(const kgf_output* out) { return out ? out->csv.size() : 0; }

size_t kgf_output_warning_count(const kgf_output* out) { return out ? out->warnings.size() : 0; }

const char* kgf_output_warning(const kgf_output* out, size_t i) {
    if (!out || i >= out->warnings.size()) return nullptr;
    return out->warnings[i].c_str();
}

kgf_status kgf_output_write(const kgf_output* out, const char* path) {
    if (!out) return null_argument("out");
    if (!path) return null_argument("path");
    return guarded([&] {
        std::ofstream f(path, std::ios::binary);
        if (!f) kgfrac::fail(kgfrac::ErrorKind::io, std::string("cannot open ") + path + " for writing");
        f << out->csv;
        f.flush();
        if (!f) kgfrac::fail(kgfrac::ErrorKind::io, std::string("write to ") + path + " failed");
    });
}

void kgf_output_free(kgf_output* out) { delete out; }

kgf_status kgf_solve_builtin(kgf_problem problem, double alpha, double x, int n_max, kgf_series** out) {
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        const kgfrac::ProblemSpec p = kgfrac::builtin_problem(builtin_of(problem), alpha);
        *out = new kgf_series{kgfrac::solve_frdtm(p, x, n_max)};
    });
}

size_t kgf_series_length(const kgf_series* s) { return s ? s->solution.seq.size() : 0; }

double kgf_series_beta(const kgf_series* s) { return s ? s->solution.seq.order().beta() : 0.0; }

kgf_status kgf_series_coefficient(const kgf_series* s, size_t k, double* value) {
    if (!s) return null_argument("s");
    if (!value) return null_argument("value");
    if (k >= s->solution.seq.size()) {
        last_error = "coefficient index out of range";
        return KGF_INVALID_ARGUMENT;
    }
    *value = s->solution.seq[k].value();
    last_error.clear();
    return KGF_OK;
}

kgf_status kgf_series_eval(const kgf_series* s, double t, double* value) {
    if (!s) return null_argument("s");
    if (!value) return null_argument("value");
    return guarded([&] { *value = kgfrac::eval_series(s->solution, t); });
}

void kgf_series_free(kgf_series* s) { delete s; }

kgf_status kgf_printed_eval(kgf_problem problem, double alpha, double x, double t, int n, double* value) {
    if (!value) return null_argument("value");
    return guarded([&] { *value = kgfrac::printed::eval(builtin_of(problem), alpha, x, t, n); });
}

}  // extern "C"
