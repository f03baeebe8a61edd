#include "twinga/functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "twinga/errors.hpp"

namespace twinga {

namespace {

void require_non_empty(std::span<const double> x, const char* name) {
    if (x.empty()) throw InvalidInput(std::string(name) + " needs at least one variable");
}

constexpr std::array<std::string_view, 5> kPresetNames{"himmelblau", "sphere", "rosenbrock",
                                                        "rastrigin", "schwefel"};

}  // namespace

double himmelblau(double x1, double x2) {
    const double a = x1 * x1 + x2 - 11.0;
    const double b = x1 + x2 * x2 - 7.0;
    return a * a + b * b;
}

double sphere(std::span<const double> x) {
    require_non_empty(x, "sphere");
    double sum = 0.0;
    for (double xi : x) sum += xi * xi;
    return sum;
}

double rosenbrock(std::span<const double> x) {
    if (x.size() < 2) throw InvalidInput("rosenbrock needs at least two variables");
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double ridge = x[i + 1] - x[i] * x[i];
        const double valley = 1.0 - x[i];
        sum += 100.0 * ridge * ridge + valley * valley;
    }
    return sum;
}

double rastrigin(std::span<const double> x) {
    require_non_empty(x, "rastrigin");
    double sum = 10.0 * static_cast<double>(x.size());
    for (double xi : x) sum += xi * xi - 10.0 * std::cos(2.0 * std::numbers::pi * xi);
    return sum;
}

double normalized_schwefel(std::span<const double> x) {
    require_non_empty(x, "normalized_schwefel");
    double sum = 0.0;
    for (double xi : x) sum += -xi * std::sin(std::sqrt(std::abs(xi)));
    return sum / static_cast<double>(x.size());
}

double evaluate_objective(const BenchmarkSpec& spec, std::span<const double> x) {
    switch (spec.id) {
    case FunctionId::Himmelblau:
        if (x.size() != 2) throw InvalidInput("himmelblau takes exactly two variables");
        return himmelblau(x[0], x[1]);
    case FunctionId::Sphere:
        return sphere(x);
    case FunctionId::Rosenbrock:
        return rosenbrock(x);
    case FunctionId::Rastrigin:
        return rastrigin(x);
    case FunctionId::NormalizedSchwefel:
        return normalized_schwefel(x);
    }
    throw InvalidInput("unknown benchmark function");
}

std::vector<double> decode_genome(const Chromosome& c, const BenchmarkSpec& spec) {
    if (spec.n_variables < 1 || spec.bits_per_variable < 1)
        throw InvalidEncoding("benchmark spec has no variables or zero-width fields");
    if (c.size() != spec.chromosome_length())
        throw InvalidEncoding("chromosome length " + std::to_string(c.size()) + " does not match " +
                              std::to_string(spec.chromosome_length()) + " bits expected by " + spec.name);
    const auto width = static_cast<std::size_t>(spec.bits_per_variable);
    std::vector<double> vars;
    vars.reserve(static_cast<std::size_t>(spec.n_variables));
    const auto genes = c.genes();
    for (int i = 0; i < spec.n_variables; ++i)
        vars.push_back(decode_variable(genes.subspan(static_cast<std::size_t>(i) * width, width), spec.lo,
                                       spec.hi));
    return vars;
}

double objective_to_fitness(double objective, const BenchmarkSpec& spec) {
    if (!std::isfinite(objective)) throw EvaluationError("non-finite objective for " + spec.name, {});
    switch (spec.fitness_kind) {
    case FitnessKind::MinimizeToZero:
        return 1.0 / (1.0 + objective);
    case FitnessKind::SchwefelNormalized:
        return std::max(0.0, -objective / -kSchwefelOptimumValue);
    }
    return 0.0;
}

std::span<const std::string_view> preset_names() { return kPresetNames; }

BenchmarkSpec preset(FunctionId id) {
    BenchmarkSpec s;
    s.id = id;
    switch (id) {
    case FunctionId::Himmelblau:
        // 40-bit string (20 per variable); Table I's "20" contradicts the prose.
        s = {id, "himmelblau", 2, 0.0, 6.0, 20, 0.0, {3.0, 2.0}, FitnessKind::MinimizeToZero};
        break;
    case FunctionId::Sphere:
        s = {id, "sphere", 3, -5.12, 5.12, 20, 0.0, {0.0, 0.0, 0.0}, FitnessKind::MinimizeToZero};
        break;
    case FunctionId::Rosenbrock:
        s = {id, "rosenbrock", 2, -2.048, 2.048, 20, 0.0, {1.0, 1.0}, FitnessKind::MinimizeToZero};
        break;
    case FunctionId::Rastrigin:
        s = {id, "rastrigin", 2, -5.12, 5.12, 10, 0.0, {0.0, 0.0}, FitnessKind::MinimizeToZero};
        break;
    case FunctionId::NormalizedSchwefel:
        s = {id,
             "schwefel",
             2,
             -500.0,
             500.0,
             22,
             kSchwefelOptimumValue,
             {kSchwefelOptimumCoordinate, kSchwefelOptimumCoordinate},
             FitnessKind::SchwefelNormalized};
        break;
    }
    return s;
}

std::optional<BenchmarkSpec> find_preset(std::string_view name) {
    static constexpr std::array<FunctionId, 5> ids{FunctionId::Himmelblau, FunctionId::Sphere,
                                                   FunctionId::Rosenbrock, FunctionId::Rastrigin,
                                                   FunctionId::NormalizedSchwefel};
    for (std::size_t i = 0; i < kPresetNames.size(); ++i)
        if (kPresetNames[i] == name) return preset(ids[i]);
    return std::nullopt;
}

BenchmarkSpec preset(std::string_view name) {
    if (auto s = find_preset(name)) return *std::move(s);
    std::string valid;
    for (auto n : kPresetNames) {
        if (!valid.empty()) valid += ", ";
        valid += n;
    }
    throw ConfigError("unknown function '" + std::string(name) + "' (valid presets: " + valid + ")");
}

}  // namespace twinga
