#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "twinga/errors.hpp"
#include "twinga/functions.hpp"
#include "twinga/ga.hpp"
#include "twinga/random.hpp"

namespace twinga {
namespace {

TEST(Himmelblau, KnownValues) {
    EXPECT_DOUBLE_EQ(himmelblau(3.0, 2.0), 0.0);
    EXPECT_DOUBLE_EQ(himmelblau(0.0, 0.0), 170.0);   // 11^2 + 7^2
    EXPECT_DOUBLE_EQ(himmelblau(6.0, 6.0), 2186.0);  // 31^2 + 35^2
}

TEST(Sphere, KnownValues) {
    EXPECT_DOUBLE_EQ(sphere(std::vector{0.0, 0.0, 0.0}), 0.0);
    EXPECT_DOUBLE_EQ(sphere(std::vector{1.0, 2.0, 3.0}), 14.0);
    EXPECT_NEAR(sphere(std::vector{-5.12, -5.12, -5.12}), 78.6432, 1e-12);
    EXPECT_THROW(sphere(std::vector<double>{}), InvalidInput);
}

TEST(Rosenbrock, KnownValues) {
    EXPECT_DOUBLE_EQ(rosenbrock(std::vector{1.0, 1.0}), 0.0);
    EXPECT_DOUBLE_EQ(rosenbrock(std::vector{0.0, 0.0}), 1.0);
    EXPECT_NEAR(rosenbrock(std::vector{-2.048, 2.048}), 469.95239, 1e-2);
    EXPECT_THROW(rosenbrock(std::vector{1.0}), InvalidInput);
}

TEST(Rastrigin, KnownValues) {
    EXPECT_NEAR(rastrigin(std::vector{0.0, 0.0}), 0.0, 1e-12);
    EXPECT_NEAR(rastrigin(std::vector{1.0, 1.0}), 2.0, 1e-12);
    EXPECT_NEAR(rastrigin(std::vector{0.5, 0.5}), 40.5, 1e-12);
    EXPECT_THROW(rastrigin(std::vector<double>{}), InvalidInput);
}

TEST(NormalizedSchwefel, KnownValues) {
    EXPECT_NEAR(normalized_schwefel(std::vector{420.968, 420.968}), -418.9829, 1e-3);
    EXPECT_DOUBLE_EQ(normalized_schwefel(std::vector{0.0, 0.0}), 0.0);
    EXPECT_THROW(normalized_schwefel(std::vector<double>{}), InvalidInput);
}

TEST(NormalizedSchwefel, OptimumIndependentOfDimension) {
    const double one = normalized_schwefel(std::vector{420.968});
    for (std::size_t d : {1u, 2u, 5u}) {
        std::vector<double> x(d, 420.968);
        EXPECT_NEAR(normalized_schwefel(x), one, 1e-12) << d;
    }
}

TEST(Presets, MatchExperimentalSetup) {
    struct Expect {
        const char* name;
        int vars;
        double lo, hi;
        int bits;
    };
    for (const auto& e : {Expect{"himmelblau", 2, 0.0, 6.0, 20}, Expect{"sphere", 3, -5.12, 5.12, 20},
                          Expect{"rosenbrock", 2, -2.048, 2.048, 20}, Expect{"rastrigin", 2, -5.12, 5.12, 10},
                          Expect{"schwefel", 2, -500.0, 500.0, 22}}) {
        const auto s = preset(e.name);
        EXPECT_EQ(s.n_variables, e.vars) << e.name;
        EXPECT_EQ(s.lo, e.lo) << e.name;
        EXPECT_EQ(s.hi, e.hi) << e.name;
        EXPECT_EQ(s.bits_per_variable, e.bits) << e.name;
    }
    EXPECT_EQ(preset("sphere").chromosome_length(), 60u);
    EXPECT_EQ(preset("himmelblau").chromosome_length(), 40u);
    EXPECT_EQ(preset("rastrigin").chromosome_length(), 20u);
    EXPECT_EQ(preset("schwefel").chromosome_length(), 44u);
}

TEST(Presets, UnknownNameListsValidOnes) {
    EXPECT_FALSE(find_preset("ackley"));
    try {
        preset("ackley");
        FAIL();
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        for (auto n : preset_names()) EXPECT_NE(msg.find(n), std::string::npos) << n;
    }
}

TEST(Presets, OptimumPointsHitOptimumValues) {
    for (auto name : preset_names()) {
        const auto s = preset(name);
        const double tol = s.fitness_kind == FitnessKind::SchwefelNormalized ? 1e-3 : 1e-6;
        EXPECT_NEAR(evaluate_objective(s, s.global_optimum_point), s.global_optimum_value, tol) << name;
        EXPECT_NEAR(objective_to_fitness(evaluate_objective(s, s.global_optimum_point), s), 1.0, 1e-5) << name;
    }
}

TEST(Presets, ObjectiveBoundedBelowInBox) {
    Rng rng(11);
    for (auto name : preset_names()) {
        const auto s = preset(name);
        for (int i = 0; i < 2000; ++i) {
            std::vector<double> x(static_cast<std::size_t>(s.n_variables));
            for (auto& xi : x) xi = s.lo + (s.hi - s.lo) * rng.uniform01();
            const double f = evaluate_objective(s, x);
            if (s.fitness_kind == FitnessKind::MinimizeToZero) {
                ASSERT_GE(f, 0.0) << name;
            } else {
                ASSERT_GE(f, -418.9829 - 1e-3) << name;
            }
            const double fit = objective_to_fitness(f, s);
            ASSERT_LT(fit, 1.0 + 1e-9) << name;
            ASSERT_GE(fit, 0.0) << name;
        }
    }
}

TEST(DecodeGenome, Corners) {
    const auto sphere_spec = preset("sphere");
    const auto lo = decode_genome(Chromosome(60), sphere_spec);
    ASSERT_EQ(lo.size(), 3u);
    for (double v : lo) EXPECT_EQ(v, -5.12);

    const auto h = preset("himmelblau");
    const auto hi = decode_genome(Chromosome::from_string(std::string(40, '1')), h);
    EXPECT_EQ(hi, (std::vector{6.0, 6.0}));

    EXPECT_THROW(decode_genome(Chromosome(59), sphere_spec), InvalidEncoding);
}

TEST(DecodeGenome, MatchesPerFieldDecode) {
    Rng rng(5);
    for (auto name : preset_names()) {
        const auto s = preset(name);
        for (int i = 0; i < 100; ++i) {
            const auto c = Chromosome::random(s.chromosome_length(), rng);
            const auto vars = decode_genome(c, s);
            const auto bits = c.to_string();
            const auto w = static_cast<std::size_t>(s.bits_per_variable);
            for (std::size_t v = 0; v < vars.size(); ++v) {
                const auto field = Chromosome::from_string(bits.substr(v * w, w));
                ASSERT_EQ(vars[v], decode_variable(field.genes(), s.lo, s.hi));
                ASSERT_GE(vars[v], s.lo);
                ASSERT_LE(vars[v], s.hi);
            }
        }
    }
}

TEST(Fitness, Transform) {
    const auto s = preset("sphere");
    EXPECT_EQ(objective_to_fitness(0.0, s), 1.0);
    EXPECT_EQ(objective_to_fitness(1.0, s), 0.5);
    const auto w = preset("schwefel");
    EXPECT_DOUBLE_EQ(objective_to_fitness(-418.9829, w), 1.0);
    EXPECT_EQ(objective_to_fitness(10.0, w), 0.0);
    EXPECT_THROW(objective_to_fitness(std::nan(""), s), EvaluationError);
    EXPECT_THROW(objective_to_fitness(INFINITY, s), EvaluationError);
}

TEST(Fitness, MaximizedAtOptimumPoint) {
    // Every grid point of the Rastrigin preset scores at most the optimum's fitness.
    const auto s = preset("rastrigin");
    const double best = objective_to_fitness(evaluate_objective(s, s.global_optimum_point), s);
    Rng rng(17);
    for (int i = 0; i < 5000; ++i) {
        const auto ind = evaluate(Chromosome::random(s.chromosome_length(), rng), s);
        ASSERT_LE(ind.fitness, best);
    }
}

TEST(Evaluate, NonFiniteObjectiveCarriesVariables) {
    // Bounds wide enough that sphere overflows to infinity.
    BenchmarkSpec s = preset("sphere");
    s.lo = -1e300;
    s.hi = 1e300;
    try {
        evaluate(Chromosome(60), s);
        FAIL();
    } catch (const EvaluationError& e) {
        ASSERT_EQ(e.variables().size(), 3u);
        EXPECT_EQ(e.variables()[0], -1e300);
    }
}

}  // namespace
}  // namespace twinga
