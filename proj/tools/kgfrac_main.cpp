#include "kgfrac.h"

#include <CLI11.hpp>

#include <cstdio>
#include <string>

namespace {

int exit_code(kgf_status s) {
    switch (s) {
        case KGF_OK: return 0;
        case KGF_NUMERICAL: return 3;
        case KGF_INTERNAL: return 1;
        default: return 2;
    }
}

int report(kgf_status s) {
    std::fprintf(stderr, "kgfrac: %s\n", kgf_last_error());
    return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Series solutions of time-fractional Klein-Gordon equations"};
    app.set_version_flag("--version", kgf_version());
    app.require_subcommand(1, 1);

    std::string config_path;
    std::string out_path;
    unsigned threads = 0;
    const struct {
        const char* name;
        const char* help;
        kgf_command command;
    } commands[] = {
        {"solve", "series solution u(x, t) at the probe point", KGF_SOLVE},
        {"table", "series against the reference integrator or the closed form", KGF_TABLE},
        {"surface", "u over an (x, t) grid", KGF_SURFACE},
        {"sweep", "series at the probe point for every alpha", KGF_SWEEP},
    };
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("config", config_path, "configuration file")->required();
        sub->add_option("--out", out_path, "write CSV here instead of stdout or the config's output key");
        sub->add_option("--threads", threads, "worker threads for surface (0 = all cores)")
            ->check(CLI::NonNegativeNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    kgf_command command = KGF_SOLVE;
    for (const auto& c : commands)
        if (app.got_subcommand(c.name)) command = c.command;

    kgf_config* cfg = nullptr;
    kgf_status s = kgf_config_load(config_path.c_str(), &cfg);
    if (s != KGF_OK) return report(s);

    kgf_output* out = nullptr;
    s = kgf_run(cfg, command, threads, &out);
    if (s != KGF_OK) {
        kgf_config_free(cfg);
        return report(s);
    }
    for (size_t i = 0; i < kgf_output_warning_count(out); ++i)
        std::fprintf(stderr, "warning: %s\n", kgf_output_warning(out, i));

    if (out_path.empty()) out_path = kgf_config_output_path(cfg);
    int rc = 0;
    if (out_path.empty()) {
        std::fwrite(kgf_output_csv(out), 1, kgf_output_size(out), stdout);
    } else if ((s = kgf_output_write(out, out_path.c_str())) != KGF_OK) {
        rc = report(s);
    }
    kgf_output_free(out);
    kgf_config_free(cfg);
    return rc;
}
