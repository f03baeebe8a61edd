#pragma once

namespace twinga {

/// Parameters of the advanced twin operator and its adaptive probability.
///
/// Fitness gates k1 / k1_prime are fractions of the optimum fitness, which is
/// 1 for every built-in benchmark. k2 / k3 bound the twin probability.
struct TwinParams {
    double k1 = 0.5;
    double k1_prime = 0.95;
    double k2 = 0.05;
    double k3 = 0.4;
    /// Fraction of each unequal-gene set that is flipped to build a twin mate.
    double separability = 0.5;

    /// Throws ConfigError when an ordering or range constraint is violated.
    void validate() const;
};

}  // namespace twinga
