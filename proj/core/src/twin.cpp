#include "twinga/twin.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "twinga/errors.hpp"

namespace twinga {

namespace {

// Keeps k3 out of the half-open range [k2, k3).
constexpr double kUpperClampEpsilon = 1e-9;

// Absorbs products such as 0.29 * 100 = 28.999999999999996.
constexpr double kFlipCountSlack = 1e-9;

void flip_random_subset(Chromosome& c, PositionSet pool, std::size_t count, Rng& rng) {
    // Partial Fisher-Yates: the first `count` slots become a uniform sample.
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + rng.uniform_index(pool.size() - i);
        std::swap(pool[i], pool[j]);
        c.flip(pool[i]);
    }
}

void check_positions(const Chromosome& c, const PositionSet& h) {
    for (auto p : h)
        if (p >= c.size())
            throw InvalidEncoding("twin position " + std::to_string(p) + " out of range for length " +
                                  std::to_string(c.size()));
}

}  // namespace

PositionSet unequal_positions(const Chromosome& a, const Chromosome& b) {
    if (a.size() != b.size())
        throw InvalidEncoding("unequal_positions on chromosomes of lengths " + std::to_string(a.size()) +
                              " and " + std::to_string(b.size()));
    PositionSet out;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) out.push_back(i);
    return out;
}

std::size_t twin_flip_count(std::size_t set_size, double separability) noexcept {
    const double raw = separability * static_cast<double>(set_size);
    const auto n = static_cast<std::size_t>(std::floor(raw + kFlipCountSlack));
    return std::min(n, set_size);
}

Chromosome make_twin_mate(const Chromosome& child, const PositionSet& h1, const PositionSet& h2,
                          double separability, Rng& rng) {
    if (!(separability > 0.0 && separability <= 1.0))
        throw InvalidInput("separability must lie in (0, 1]");
    check_positions(child, h1);
    check_positions(child, h2);
    Chromosome mate = child;
    flip_random_subset(mate, h1, twin_flip_count(h1.size(), separability), rng);
    flip_random_subset(mate, h2, twin_flip_count(h2.size(), separability), rng);
    return mate;
}

double adaptive_p_twin(double f_max, double f_max_prime, const TwinParams& params) {
    if (f_max_prime > f_max)
        throw InvalidRanking("second-best fitness " + std::to_string(f_max_prime) + " exceeds best fitness " +
                             std::to_string(f_max));
    if (f_max <= params.k1 || f_max >= params.k1_prime) return 0.0;
    const double p = f_max - f_max_prime;
    if (p < params.k2) return params.k2;
    return std::min(p, params.k3 - kUpperClampEpsilon);
}

TwinEvent twin_reproduction(const Population& pop, const GaConfig& config, double p_twin, Rng& rng) {
    if (pop.size() < 2) throw InvalidState("twin reproduction needs at least two members");

    const auto order = rank_members(pop);
    TwinEvent ev;
    ev.parent1_index = order[1];
    ev.parent2_index = rng.uniform_index(pop.size());
    ev.parent1 = pop.members[ev.parent1_index];
    ev.parent2 = pop.members[ev.parent2_index];
    ev.p_twin_used = p_twin;

    const Chromosome& p1 = ev.parent1.chromosome;
    const Chromosome& p2 = ev.parent2.chromosome;
    if (p1.size() != p2.size() || p1.size() < 2)
        throw InvalidEncoding("twin reproduction needs equal-length chromosomes of at least 2 genes");
    ev.cut = 1 + rng.uniform_index(p1.size() - 1);
    auto [child1, child2] = single_point_crossover_at(p1, p2, ev.cut);

    ev.h1 = unequal_positions(child1, p1);
    ev.h2 = unequal_positions(child1, p2);
    ev.h1_second = unequal_positions(child2, p1);
    ev.h2_second = unequal_positions(child2, p2);
    assert(ev.h1.size() + ev.h2.size() == hamming_distance(p1, p2));

    ev.applied = rng.uniform01() < p_twin;
    ev.children.reserve(ev.applied ? 4 : 2);
    ev.children.push_back(child1);
    ev.children.push_back(child2);
    if (ev.applied) {
        const double s = config.twin.separability;
        ev.children.push_back(make_twin_mate(child1, ev.h1, ev.h2, s, rng));
        ev.children.push_back(make_twin_mate(child2, ev.h1_second, ev.h2_second, s, rng));
    }
    return ev;
}

TwinEvent twin_reproduction(const Population& pop, const GaConfig& config, Rng& rng) {
    return twin_reproduction(pop, config, step_p_twin(pop, config), rng);
}

}  // namespace twinga
