#include "twinga/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "twinga/errors.hpp"

namespace twinga {

std::vector<TrialRecord> run_trials(const GaConfig& config, int n_trials, unsigned workers) {
    if (n_trials < 1) throw InvalidInput("n_trials must be at least 1");
    config.validate();

    const auto n = static_cast<std::size_t>(n_trials);
    std::vector<TrialRecord> records(n);
    std::vector<std::exception_ptr> failures(n);

    auto work = [&](std::size_t i) {
        try {
            records[i] = run_trial(config, static_cast<int>(i));
        } catch (...) {
            failures[i] = std::current_exception();
        }
    };

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));

    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) work(i);
            });
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (!failures[i]) continue;
        try {
            std::rethrow_exception(failures[i]);
        } catch (const std::exception& e) {
            throw TrialError(static_cast<int>(i), e.what());
        }
    }
    return records;
}

int convergence_generation(const TrialRecord& record) {
    if (record.entries.empty()) return 0;
    const double final_best = record.entries.back().best_fitness;
    for (const auto& e : record.entries)
        if (e.best_fitness >= final_best - 1e-12) return e.generation;
    return record.entries.back().generation;
}

AggregateStats aggregate_values(std::span<const double> final_bests, std::span<const int> convergence_generations) {
    if (final_bests.empty()) throw InvalidInput("aggregate needs at least one trial");
    if (final_bests.size() != convergence_generations.size())
        throw InvalidInput("aggregate inputs differ in length");

    // Sorted summation makes the result independent of trial order.
    std::vector<double> values(final_bests.begin(), final_bests.end());
    std::sort(values.begin(), values.end());

    AggregateStats s;
    s.n_trials = static_cast<int>(values.size());
    const double n = static_cast<double>(values.size());

    s.max_best = values.back();
    if (values.front() == values.back()) {
        s.mean_best = values.front();
    } else {
        double sum = 0.0;
        for (double v : values) sum += v;
        s.mean_best = sum / n;
        // Corrected two-pass: fold the rounding error of the first pass back in.
        double residual = 0.0;
        for (double v : values) residual += v - s.mean_best;
        s.mean_best += residual / n;
    }

    double sq = 0.0;
    for (double v : values) sq += (v - s.mean_best) * (v - s.mean_best);
    const double sd = values.size() > 1 ? std::sqrt(sq / (n - 1.0)) : 0.0;
    if (s.mean_best == 0.0) {
        s.cv_percent = 0.0;
        s.cv_undefined = true;
    } else {
        s.cv_percent = 100.0 * sd / std::abs(s.mean_best);
    }

    double gens = 0.0;
    for (int g : convergence_generations) gens += g;
    s.mean_convergence_generation = gens / n;
    return s;
}

AggregateStats aggregate(std::span<const TrialRecord> records) {
    if (records.empty()) throw InvalidInput("aggregate needs at least one trial");
    std::vector<double> bests;
    std::vector<int> gens;
    bests.reserve(records.size());
    gens.reserve(records.size());
    for (const auto& r : records) {
        bests.push_back(r.reported_best);
        gens.push_back(r.convergence_generation);
    }
    return aggregate_values(bests, gens);
}

std::string RunLabel::stem() const {
    return function + "_" + std::string(to_string(mode)) + "_" + std::to_string(seed);
}

}  // namespace twinga
