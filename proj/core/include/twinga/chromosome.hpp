#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twinga {

class Rng;

/// Fixed-length binary genotype. Genes are stored one per byte and are
/// always 0 or 1.
class Chromosome {
public:
    Chromosome() = default;
    explicit Chromosome(std::size_t length) : genes_(length, 0) {}

    /// Parses a string of '0'/'1' characters; position 0 is the leftmost character.
    static Chromosome from_string(std::string_view bits);
    static Chromosome random(std::size_t length, Rng& rng);

    std::size_t size() const noexcept { return genes_.size(); }
    bool empty() const noexcept { return genes_.empty(); }

    std::uint8_t operator[](std::size_t i) const noexcept { return genes_[i]; }
    std::uint8_t at(std::size_t i) const;

    void set(std::size_t i, bool value);
    void flip(std::size_t i);

    std::span<const std::uint8_t> genes() const noexcept { return genes_; }

    std::string to_string() const;

    friend bool operator==(const Chromosome&, const Chromosome&) = default;

private:
    std::vector<std::uint8_t> genes_;
};

std::size_t hamming_distance(const Chromosome& a, const Chromosome& b);

/// Linear MSB-first decoding of a bit field onto [lo, hi]:
/// lo + int(bits) * (hi - lo) / (2^len - 1). Both endpoints are reachable.
/// Fields longer than 62 bits are rejected.
double decode_variable(std::span<const std::uint8_t> bits, double lo, double hi);

}  // namespace twinga
