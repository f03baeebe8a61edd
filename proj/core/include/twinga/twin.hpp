#pragma once

/// @file twin.hpp
/// @brief Advanced twin operator and the adaptive twin probability.
///
/// A twin-eligible mating crosses the rank-2 member with a random member.
/// With probability p_twin each crossover child gets a twin mate: a copy in
/// which a `separability` fraction of the genes that differ from parent 1
/// and, separately, of the genes that differ from parent 2 are flipped.

#include <cstddef>
#include <vector>

#include "twinga/ga.hpp"

namespace twinga {

using PositionSet = std::vector<std::size_t>;

struct TwinEvent {
    std::size_t parent1_index = 0;  ///< rank-2 member
    std::size_t parent2_index = 0;  ///< uniform draw, may equal parent1_index
    Individual parent1;
    Individual parent2;
    std::size_t cut = 0;
    double p_twin_used = 0.0;
    bool applied = false;
    /// child1, child2 and, when applied, child3 (twin of child1) and child4
    /// (twin of child2). Pre-mutation.
    std::vector<Chromosome> children;
    /// Positions where child1 differs from parent1 / parent2. Recorded
    /// whether or not the operator fired.
    PositionSet h1;
    PositionSet h2;
    /// Same for child2.
    PositionSet h1_second;
    PositionSet h2_second;
};

/// Ascending positions i with a[i] != b[i].
PositionSet unequal_positions(const Chromosome& a, const Chromosome& b);

/// Number of positions picked from a set of `set_size` unequal genes:
/// floor(separability * set_size).
std::size_t twin_flip_count(std::size_t set_size, double separability) noexcept;

/// Copies `child` and flips twin_flip_count(|h|) positions drawn without
/// replacement from each of h1 and h2.
Chromosome make_twin_mate(const Chromosome& child, const PositionSet& h1, const PositionSet& h2,
                          double separability, Rng& rng);

/// Eq. form P = f_max - f_max', live only while k1 < f_max < k1'. Inside the
/// gate the result is clamped to [k2, k3); outside it is 0.
double adaptive_p_twin(double f_max, double f_max_prime, const TwinParams& params);

/// The twin-eligible mating. Draw order: parent-2 index, cut point, the
/// twin uniform, then the twin-mate selections.
TwinEvent twin_reproduction(const Population& pop, const GaConfig& config, double p_twin,
                            Rng& rng);

/// Uses step_p_twin(pop, config) as the probability.
TwinEvent twin_reproduction(const Population& pop, const GaConfig& config, Rng& rng);

}  // namespace twinga
