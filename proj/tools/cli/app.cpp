#include "cli/app.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "cli/commands.hpp"
#include "twinga/errors.hpp"
#include "twinga/functions.hpp"

namespace twinga::cli {

namespace {

struct Flags {
    std::string function;
    std::string mode;
    int trials = 0;
    std::uint64_t seed = 0;
    std::string config;
    std::string out;
    unsigned jobs = 0;
    std::vector<std::string> sets;
    bool all = false;
};

void add_common(CLI::App& cmd, Flags& f) {
    std::string presets;
    for (auto n : preset_names()) presets += (presets.empty() ? "" : ", ") + std::string(n);
    cmd.add_option("--function", f.function, "Benchmark preset (" + presets + ")");
    cmd.add_option("--trials", f.trials, "Number of independent trials (default 25)");
    cmd.add_option("--seed", f.seed, "Master seed (default 1)");
    cmd.add_option("--config", f.config, "key = value config file");
    cmd.add_option("--out", f.out, "Output directory for CSV files (default results)");
    cmd.add_option("--jobs", f.jobs, "Worker threads for trials, 0 = all cores (default 1)");
    cmd.add_option("--set", f.sets, "Override a setting, key=value (repeatable)")->take_all();
}

/// Merges config file, explicit flags and --set overrides, in that order.
RunSpec resolve(const CLI::App& cmd, const Flags& f) {
    RunSpec spec;
    if (!f.config.empty()) spec = load_config(f.config);
    if (cmd.count("--function")) apply_setting(spec, "function", f.function);
    if (const auto* mode = cmd.get_option_no_throw("--mode"); mode && mode->count() > 0)
        apply_setting(spec, "mode", f.mode);
    if (cmd.count("--trials")) spec.trials = f.trials;
    if (cmd.count("--seed")) spec.seed = f.seed;
    if (cmd.count("--out")) apply_setting(spec, "out", f.out);
    if (cmd.count("--jobs")) spec.jobs = f.jobs;
    for (const auto& s : f.sets) apply_assignment(spec, s);
    return spec;
}

}  // namespace

int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Genetic algorithm with the advanced twin operator and adaptive twin probability"};
    app.require_subcommand(1);

    Flags run_flags;
    auto* run = app.add_subcommand("run", "Run repeated trials of one function in one mode");
    add_common(*run, run_flags);
    run->add_option("--mode", run_flags.mode, "sga or atga (default sga)");

    Flags cmp_flags;
    auto* compare = app.add_subcommand("compare", "Run SGA and ATGA side by side");
    add_common(*compare, cmp_flags);
    compare->add_flag("--all", cmp_flags.all, "Compare on every preset");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (run->parsed()) return command_run(resolve(*run, run_flags), out, err);
        return command_compare(resolve(*compare, cmp_flags), cmp_flags.all, out, err);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace twinga::cli
