#include "twinga/ga.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "twinga/errors.hpp"
#include "twinga/experiment.hpp"
#include "twinga/twin.hpp"

namespace twinga {

namespace {

void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0))
        throw ConfigError(std::string(name) + " must lie in [0, 1], got " + std::to_string(p));
}

}  // namespace

void TwinParams::validate() const {
    if (!(k1 > 0.0 && k1 < k1_prime && k1_prime <= 1.0))
        throw ConfigError("twin fitness gate requires 0 < k1 < k1_prime <= 1 (k1=" + std::to_string(k1) +
                          ", k1_prime=" + std::to_string(k1_prime) + ")");
    if (!(k2 > 0.0 && k2 < k3 && k3 <= 1.0))
        throw ConfigError("twin probability bounds require 0 < k2 < k3 <= 1 (k2=" + std::to_string(k2) +
                          ", k3=" + std::to_string(k3) + ")");
    if (!(separability > 0.0 && separability <= 1.0))
        throw ConfigError("separability must lie in (0, 1], got " + std::to_string(separability));
}

void GaConfig::validate() const {
    if (pop_size < 4) throw ConfigError("pop_size must be at least 4, got " + std::to_string(pop_size));
    check_probability(p_c, "p_c");
    check_probability(p_m, "p_m");
    if (tournament_size < 1)
        throw ConfigError("tournament_size must be at least 1, got " + std::to_string(tournament_size));
    if (max_generations < 1)
        throw ConfigError("max_generations must be at least 1, got " + std::to_string(max_generations));
    if (benchmark.n_variables < 1) throw ConfigError("benchmark needs at least one variable");
    if (benchmark.bits_per_variable < 1 || benchmark.bits_per_variable > 62)
        throw ConfigError("bits_per_variable must lie in [1, 62], got " +
                          std::to_string(benchmark.bits_per_variable));
    if (benchmark.chromosome_length() < 2) throw ConfigError("chromosome must have at least 2 genes");
    if (!(benchmark.lo < benchmark.hi)) throw ConfigError("benchmark bounds require lo < hi");
    if (fixed_p_twin) check_probability(*fixed_p_twin, "fixed_p_twin");
    twin.validate();
}

GaConfig preset_config(const BenchmarkSpec& benchmark, Mode mode) {
    GaConfig c;
    c.benchmark = benchmark;
    c.mode = mode;
    c.max_generations = benchmark.id == FunctionId::NormalizedSchwefel ? 20 : 15;
    return c;
}

std::string_view to_string(Mode mode) noexcept { return mode == Mode::SGA ? "sga" : "atga"; }

std::optional<Mode> parse_mode(std::string_view text) noexcept {
    if (text == "sga" || text == "SGA") return Mode::SGA;
    if (text == "atga" || text == "ATGA") return Mode::ATGA;
    return std::nullopt;
}

Individual evaluate(Chromosome c, const BenchmarkSpec& spec) {
    Individual ind;
    ind.variables = decode_genome(c, spec);
    ind.chromosome = std::move(c);
    ind.objective = evaluate_objective(spec, ind.variables);
    if (!std::isfinite(ind.objective))
        throw EvaluationError("non-finite objective for " + spec.name, ind.variables);
    ind.fitness = objective_to_fitness(ind.objective, spec);
    return ind;
}

std::vector<std::size_t> rank_members(const Population& pop) {
    std::vector<std::size_t> order(pop.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pop.members[a].fitness > pop.members[b].fitness;
    });
    return order;
}

const Individual& tournament_select(const Population& pop, int k, Rng& rng) {
    if (pop.members.empty()) throw InvalidState("tournament selection on an empty population");
    if (k < 1) throw InvalidInput("tournament size must be at least 1");
    const Individual* winner = &pop.members[rng.uniform_index(pop.size())];
    for (int i = 1; i < k; ++i) {
        const Individual& contender = pop.members[rng.uniform_index(pop.size())];
        if (contender.fitness > winner->fitness) winner = &contender;
    }
    return *winner;
}

namespace {

void check_crossover_parents(const Chromosome& p1, const Chromosome& p2) {
    if (p1.size() != p2.size())
        throw InvalidEncoding("crossover parents differ in length (" + std::to_string(p1.size()) + " vs " +
                              std::to_string(p2.size()) + ")");
    if (p1.size() < 2) throw InvalidEncoding("crossover needs chromosomes of at least 2 genes");
}

}  // namespace

std::pair<Chromosome, Chromosome> single_point_crossover_at(const Chromosome& p1, const Chromosome& p2,
                                                            std::size_t cut) {
    check_crossover_parents(p1, p2);
    if (cut < 1 || cut >= p1.size())
        throw InvalidEncoding("cut point " + std::to_string(cut) + " outside [1, " +
                              std::to_string(p1.size() - 1) + "]");
    Chromosome c1 = p1;
    Chromosome c2 = p2;
    for (std::size_t i = cut; i < p1.size(); ++i) {
        c1.set(i, p2[i]);
        c2.set(i, p1[i]);
    }
    return {std::move(c1), std::move(c2)};
}

std::pair<Chromosome, Chromosome> single_point_crossover(const Chromosome& p1, const Chromosome& p2,
                                                         Rng& rng) {
    check_crossover_parents(p1, p2);
    const std::size_t cut = 1 + rng.uniform_index(p1.size() - 1);
    return single_point_crossover_at(p1, p2, cut);
}

Chromosome mutate(Chromosome c, double p_m, Rng& rng) {
    for (std::size_t i = 0; i < c.size(); ++i)
        if (rng.uniform01() < p_m) c.flip(i);
    return c;
}

double step_p_twin(const Population& pop, const GaConfig& config) {
    if (config.mode == Mode::SGA) return 0.0;
    if (config.fixed_p_twin) return *config.fixed_p_twin;
    if (pop.size() < 2) throw InvalidState("twin probability needs at least two members");
    const auto order = rank_members(pop);
    return adaptive_p_twin(pop.members[order[0]].fitness, pop.members[order[1]].fitness, config.twin);
}

Population step_generation(const Population& pop, const GaConfig& config, Rng& rng, TwinEvent* event_out) {
    const auto target = static_cast<std::size_t>(config.pop_size);
    if (pop.size() != target)
        throw InvalidState("population has " + std::to_string(pop.size()) + " members, expected " +
                           std::to_string(target));

    const auto order = rank_members(pop);
    Population next;
    next.generation = pop.generation + 1;
    next.members.reserve(target);
    next.members.push_back(pop.members[order[0]]);

    auto add_offspring = [&](const Chromosome& child) {
        if (next.size() < target)
            next.members.push_back(evaluate(mutate(child, config.p_m, rng), config.benchmark));
    };

    if (config.mode == Mode::ATGA) {
        TwinEvent event = twin_reproduction(pop, config, step_p_twin(pop, config), rng);
        for (const auto& child : event.children) add_offspring(child);
        if (event_out) *event_out = std::move(event);
    }

    while (next.size() < target) {
        const Individual& a = tournament_select(pop, config.tournament_size, rng);
        const Individual& b = tournament_select(pop, config.tournament_size, rng);
        if (rng.uniform01() < config.p_c) {
            auto [c1, c2] = single_point_crossover(a.chromosome, b.chromosome, rng);
            add_offspring(c1);
            add_offspring(c2);
        } else {
            add_offspring(a.chromosome);
            add_offspring(b.chromosome);
        }
    }
    return next;
}

Population initial_population(const GaConfig& config, Rng& rng) {
    Population pop;
    pop.members.reserve(static_cast<std::size_t>(config.pop_size));
    for (int i = 0; i < config.pop_size; ++i)
        pop.members.push_back(
            evaluate(Chromosome::random(config.benchmark.chromosome_length(), rng), config.benchmark));
    return pop;
}

namespace {

GenerationEntry summarize(const Population& pop, const GaConfig& config) {
    const auto order = rank_members(pop);
    GenerationEntry e;
    e.generation = pop.generation;
    e.best_fitness = pop.members[order[0]].fitness;
    e.second_best_fitness = pop.members[order[1]].fitness;
    double sum = 0.0;
    for (const auto& m : pop.members) sum += m.fitness;
    e.avg_fitness = sum / static_cast<double>(pop.size());
    e.p_twin = step_p_twin(pop, config);
    return e;
}

}  // namespace

TrialRecord run_trial(const GaConfig& config, int trial_index) {
    config.validate();
    Rng rng(derive_seed(config.master_seed, static_cast<std::uint64_t>(trial_index)));

    TrialRecord record;
    record.trial_index = trial_index;
    record.entries.reserve(static_cast<std::size_t>(config.max_generations) + 1);

    Population pop = initial_population(config, rng);
    record.entries.push_back(summarize(pop, config));
    for (int g = 0; g < config.max_generations; ++g) {
        pop = step_generation(pop, config, rng);
        record.entries.push_back(summarize(pop, config));
    }

    record.final_best = pop.members[rank_members(pop).front()];
    record.reported_best = config.benchmark.fitness_kind == FitnessKind::SchwefelNormalized
                               ? -record.final_best.objective
                               : record.final_best.fitness;
    record.convergence_generation = convergence_generation(record);
    return record;
}

TrialRecord run(const GaConfig& config) { return run_trial(config, 0); }

}  // namespace twinga
