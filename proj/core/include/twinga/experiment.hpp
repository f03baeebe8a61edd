#pragma once

/// @file experiment.hpp
/// @brief Multi-trial runner, summary statistics and CSV export.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "twinga/ga.hpp"

namespace twinga {

/// Runs `n_trials` independent trials; trial i uses derive_seed(master_seed, i).
/// `workers` > 1 spreads trials over threads; the result is identical to a
/// serial run. 0 means std::thread::hardware_concurrency().
std::vector<TrialRecord> run_trials(const GaConfig& config, int n_trials, unsigned workers = 1);

/// First generation whose best fitness reaches the run's final best (within 1e-12).
int convergence_generation(const TrialRecord& record);

struct AggregateStats {
    int n_trials = 0;
    double mean_best = 0.0;
    double max_best = 0.0;
    /// 100 * sample standard deviation / mean.
    double cv_percent = 0.0;
    double mean_convergence_generation = 0.0;
    /// Set when the mean was zero and cv_percent was forced to 0.
    bool cv_undefined = false;
};

/// Statistics over TrialRecord::reported_best and convergence generations.
AggregateStats aggregate(std::span<const TrialRecord> records);

/// Same statistics from raw per-trial values (used when reading exports back).
AggregateStats aggregate_values(std::span<const double> final_bests,
                                std::span<const int> convergence_generations);

struct RunLabel {
    std::string function;
    Mode mode = Mode::SGA;
    std::uint64_t seed = 0;

    /// `<function>_<mode>_<seed>`
    std::string stem() const;
};

struct ExportPaths {
    std::filesystem::path generations;
    std::filesystem::path trials;
    std::filesystem::path summary;
};

inline constexpr const char* kGenerationsHeader =
    "trial,generation,best_fitness,second_best_fitness,avg_fitness,p_twin";
inline constexpr const char* kTrialsHeader = "trial,final_best_fitness,convergence_generation";
inline constexpr const char* kSummaryHeader =
    "function,mode,n_trials,mean_best,max_best,cv_percent,mean_convergence_gen";

/// Writes `<stem>.generations.csv`, `<stem>.trials.csv` and `<stem>.summary.csv`
/// into `directory` (created if missing). Throws ExportError on I/O failure.
ExportPaths export_csv(std::span<const TrialRecord> records, const AggregateStats& stats,
                       const RunLabel& label, const std::filesystem::path& directory);

/// One summary row without header or newline.
std::string summary_row(const RunLabel& label, const AggregateStats& stats);

struct SummaryLine {
    RunLabel label;
    AggregateStats stats;
};

/// Writes a summary CSV holding one row per entry. Throws ExportError.
void write_summary_csv(std::span<const SummaryLine> lines, const std::filesystem::path& file);

/// Shortest-round-trip-safe rendering with 17 significant digits, '.' separator.
std::string format_number(double value);

// Readers for the exported files. They throw ExportError on malformed input.

struct TrialsFile {
    std::vector<int> trial;
    std::vector<double> final_best;
    std::vector<int> convergence_generation;
};

TrialsFile read_trials_csv(const std::filesystem::path& file);

struct GenerationRow {
    int trial = 0;
    GenerationEntry entry;
};

std::vector<GenerationRow> read_generations_csv(const std::filesystem::path& file);

std::vector<SummaryLine> read_summary_csv(const std::filesystem::path& file);

}  // namespace twinga
