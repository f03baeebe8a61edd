#include "cli/commands.hpp"

#include <iomanip>
#include <ostream>
#include <vector>

#include "twinga/errors.hpp"
#include "twinga/experiment.hpp"
#include "twinga/functions.hpp"

namespace twinga::cli {

namespace {

SummaryLine execute(const RunSpec& spec, const GaConfig& config) {
    const auto records = run_trials(config, spec.trials, spec.jobs);
    const auto stats = aggregate(records);
    const RunLabel label{spec.function, spec.mode, spec.seed};
    export_csv(records, stats, label, spec.output_dir);
    return {label, stats};
}

void print_table(std::ostream& out, const std::string& function, const SummaryLine& sga,
                 const SummaryLine& atga) {
    struct Row {
        const char* name;
        double sga;
        double atga;
    };
    const Row rows[] = {
        {"Mean of Best Individual", sga.stats.mean_best, atga.stats.mean_best},
        {"Max. of Best Individual", sga.stats.max_best, atga.stats.max_best},
        {"Coefficient of Variance", sga.stats.cv_percent, atga.stats.cv_percent},
        {"Mean Convergence Generation", sga.stats.mean_convergence_generation,
         atga.stats.mean_convergence_generation},
    };
    out << function << " (" << sga.stats.n_trials << " trials, seed " << sga.label.seed << ")\n";
    out << std::left << std::setw(30) << "statistic" << std::right << std::setw(12) << "SGA" << std::setw(12)
        << "ATGA" << '\n';
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::fixed << std::setprecision(4);
    for (const auto& r : rows)
        out << std::left << std::setw(30) << r.name << std::right << std::setw(12) << r.sga << std::setw(12)
            << r.atga << '\n';
    out.flags(flags);
    out.precision(precision);
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kRuntimeFailure;
    }
}

}  // namespace

int command_run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        validate(spec);
        const GaConfig config = build_config(spec);
        const auto line = execute(spec, config);
        out << kSummaryHeader << '\n' << summary_row(line.label, line.stats) << '\n';
        return kSuccess;
    });
}

int command_compare(const RunSpec& spec, bool all_functions, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::vector<std::string> functions;
        if (all_functions) {
            for (auto name : preset_names()) functions.emplace_back(name);
        } else {
            functions.push_back(spec.function);
        }

        // Validate every pairing before the first run starts.
        std::vector<std::pair<RunSpec, GaConfig>> plan;
        for (const auto& f : functions) {
            for (Mode m : {Mode::SGA, Mode::ATGA}) {
                RunSpec s = spec;
                s.function = f;
                s.mode = m;
                validate(s);
                plan.emplace_back(s, build_config(s));
            }
        }

        std::vector<SummaryLine> lines;
        for (const auto& [s, config] : plan) lines.push_back(execute(s, config));
        for (std::size_t i = 0; i + 1 < lines.size(); i += 2) {
            if (i > 0) out << '\n';
            print_table(out, lines[i].label.function, lines[i], lines[i + 1]);
        }

        const std::string scope = all_functions ? "all" : spec.function;
        const auto file = spec.output_dir / ("compare_" + scope + "_" + std::to_string(spec.seed) + ".summary.csv");
        write_summary_csv(lines, file);
        out << "\nwrote " << file.string() << '\n';
        return kSuccess;
    });
}

}  // namespace twinga::cli
