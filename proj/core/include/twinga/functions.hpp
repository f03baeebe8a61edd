#pragma once

/// @file functions.hpp
/// @brief The five benchmark objectives with their search boxes, encodings and optima.
///
/// All objectives are minimized. Himmelblau, Sphere, Rosenbrock and Rastrigin
/// reach zero at their optimum; the normalized Schwefel function reaches
/// -418.9829 (its per-dimension minimum, since the sum is divided by D).

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twinga/chromosome.hpp"

namespace twinga {

enum class FunctionId { Himmelblau, Sphere, Rosenbrock, Rastrigin, NormalizedSchwefel };

/// How a raw objective is turned into a maximization fitness.
enum class FitnessKind {
    MinimizeToZero,      ///< 1 / (1 + F)
    SchwefelNormalized,  ///< max(0, -F / 418.9829)
};

inline constexpr double kSchwefelOptimumValue = -418.9829;
inline constexpr double kSchwefelOptimumCoordinate = 420.968;

struct BenchmarkSpec {
    FunctionId id = FunctionId::Sphere;
    std::string name;
    int n_variables = 0;
    double lo = 0.0;
    double hi = 0.0;
    int bits_per_variable = 0;
    double global_optimum_value = 0.0;
    std::vector<double> global_optimum_point;
    FitnessKind fitness_kind = FitnessKind::MinimizeToZero;

    std::size_t chromosome_length() const noexcept {
        return static_cast<std::size_t>(n_variables) * static_cast<std::size_t>(bits_per_variable);
    }
};

double himmelblau(double x1, double x2);
double sphere(std::span<const double> x);
double rosenbrock(std::span<const double> x);
double rastrigin(std::span<const double> x);
double normalized_schwefel(std::span<const double> x);

/// Evaluates the objective identified by `spec.id` at `x`.
double evaluate_objective(const BenchmarkSpec& spec, std::span<const double> x);

/// Splits `c` into n_variables consecutive fields and decodes each onto [lo, hi].
std::vector<double> decode_genome(const Chromosome& c, const BenchmarkSpec& spec);

/// Maps a finite objective to a fitness where larger is better and the
/// global optimum scores 1.
double objective_to_fitness(double objective, const BenchmarkSpec& spec);

/// Preset names accepted by find_preset: himmelblau, sphere, rosenbrock,
/// rastrigin, schwefel.
std::span<const std::string_view> preset_names();

std::optional<BenchmarkSpec> find_preset(std::string_view name);

/// Like find_preset but throws ConfigError listing the valid names.
BenchmarkSpec preset(std::string_view name);

BenchmarkSpec preset(FunctionId id);

}  // namespace twinga
