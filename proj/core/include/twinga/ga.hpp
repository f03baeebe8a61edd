#pragma once

/// @file ga.hpp
/// @brief Binary generational GA: evaluation, selection, crossover, mutation
/// and the elitist generation loop (SGA and ATGA modes).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "twinga/chromosome.hpp"
#include "twinga/functions.hpp"
#include "twinga/random.hpp"
#include "twinga/twin_params.hpp"

namespace twinga {

struct Individual {
    Chromosome chromosome;
    std::vector<double> variables;
    double objective = 0.0;
    double fitness = 0.0;
};

/// Decodes, evaluates and scales `c`. Throws EvaluationError on a non-finite objective.
Individual evaluate(Chromosome c, const BenchmarkSpec& spec);

struct Population {
    std::vector<Individual> members;
    int generation = 0;

    std::size_t size() const noexcept { return members.size(); }
};

/// Member indices ordered by descending fitness. Ties keep population order,
/// so rank 1 is the earliest of the fittest members.
std::vector<std::size_t> rank_members(const Population& pop);

enum class Mode { SGA, ATGA };

std::string_view to_string(Mode mode) noexcept;
std::optional<Mode> parse_mode(std::string_view text) noexcept;

struct GaConfig {
    BenchmarkSpec benchmark;
    int pop_size = 40;
    double p_c = 1.0;
    double p_m = 0.01;
    int tournament_size = 2;
    int max_generations = 15;
    Mode mode = Mode::SGA;
    TwinParams twin;
    /// Replaces the adaptive twin probability with a constant. Only meant for
    /// regression runs (e.g. forcing 0 to compare ATGA against SGA).
    std::optional<double> fixed_p_twin;
    std::uint64_t master_seed = 0;

    /// Throws ConfigError on any out-of-range field.
    void validate() const;
};

/// Table I setup for one benchmark: population 40, binary tournament with
/// replacement, single-point crossover with p_c = 1, p_m = 0.01, and 15
/// generations (20 for Schwefel).
GaConfig preset_config(const BenchmarkSpec& benchmark, Mode mode);

/// Draws k members uniformly with replacement and returns the fittest;
/// ties go to the earliest draw.
const Individual& tournament_select(const Population& pop, int k, Rng& rng);

/// Single-point crossover with the cut drawn from {1, ..., L-1}.
std::pair<Chromosome, Chromosome> single_point_crossover(const Chromosome& p1,
                                                         const Chromosome& p2,
                                                         Rng& rng);

/// Crossover at a given cut. child1 = p1[0..cut) ++ p2[cut..L).
std::pair<Chromosome, Chromosome> single_point_crossover_at(const Chromosome& p1,
                                                            const Chromosome& p2,
                                                            std::size_t cut);

/// Flips each gene independently with probability p_m. One uniform draw per gene.
Chromosome mutate(Chromosome c, double p_m, Rng& rng);

/// Twin probability the next step will use: 0 for SGA, the fixed override if
/// set, otherwise the adaptive rule applied to the two best members.
double step_p_twin(const Population& pop, const GaConfig& config);

struct TwinEvent;

/// Produces the next generation: the elite copied unchanged, then (ATGA only)
/// the twin-eligible mating of the rank-2 member with a random member, then
/// standard tournament matings until pop_size members exist. Offspring are
/// mutated (never the elite) and evaluated.
///
/// If `event_out` is non-null it receives the twin-eligible mating of this
/// step (ATGA only).
Population step_generation(const Population& pop, const GaConfig& config, Rng& rng,
                           TwinEvent* event_out = nullptr);

Population initial_population(const GaConfig& config, Rng& rng);

struct GenerationEntry {
    int generation = 0;
    double best_fitness = 0.0;
    double second_best_fitness = 0.0;
    double avg_fitness = 0.0;
    /// Twin probability computed from this generation (0 in SGA mode).
    double p_twin = 0.0;
};

struct TrialRecord {
    int trial_index = 0;
    std::vector<GenerationEntry> entries;
    Individual final_best;
    /// Value reported for this trial: scaled fitness, or the raw magnitude
    /// -F for the Schwefel function.
    double reported_best = 0.0;
    int convergence_generation = 0;
};

/// Runs one trial on the stream derive_seed(config.master_seed, trial_index).
TrialRecord run_trial(const GaConfig& config, int trial_index);

/// Same as run_trial(config, 0).
TrialRecord run(const GaConfig& config);

}  // namespace twinga
