#include "twinga/chromosome.hpp"

#include <cmath>

#include "twinga/errors.hpp"
#include "twinga/random.hpp"

namespace twinga {

Chromosome Chromosome::from_string(std::string_view bits) {
    Chromosome c(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            c.genes_[i] = 1;
        } else if (bits[i] != '0') {
            throw InvalidEncoding("chromosome literal contains a character other than 0/1 at position " +
                                  std::to_string(i));
        }
    }
    return c;
}

Chromosome Chromosome::random(std::size_t length, Rng& rng) {
    Chromosome c(length);
    for (auto& g : c.genes_) g = rng.bit() ? 1 : 0;
    return c;
}

std::uint8_t Chromosome::at(std::size_t i) const {
    if (i >= genes_.size())
        throw InvalidEncoding("gene position " + std::to_string(i) + " out of range for length " +
                              std::to_string(genes_.size()));
    return genes_[i];
}

void Chromosome::set(std::size_t i, bool value) {
    if (i >= genes_.size())
        throw InvalidEncoding("gene position " + std::to_string(i) + " out of range for length " +
                              std::to_string(genes_.size()));
    genes_[i] = value ? 1 : 0;
}

void Chromosome::flip(std::size_t i) {
    if (i >= genes_.size())
        throw InvalidEncoding("gene position " + std::to_string(i) + " out of range for length " +
                              std::to_string(genes_.size()));
    genes_[i] ^= 1;
}

std::string Chromosome::to_string() const {
    std::string s(genes_.size(), '0');
    for (std::size_t i = 0; i < genes_.size(); ++i)
        if (genes_[i]) s[i] = '1';
    return s;
}

std::size_t hamming_distance(const Chromosome& a, const Chromosome& b) {
    if (a.size() != b.size())
        throw InvalidEncoding("hamming distance of chromosomes with lengths " + std::to_string(a.size()) +
                              " and " + std::to_string(b.size()));
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

double decode_variable(std::span<const std::uint8_t> bits, double lo, double hi) {
    if (bits.empty()) throw InvalidEncoding("cannot decode a zero-length bit field");
    if (bits.size() > 62)
        throw InvalidEncoding("bit field of length " + std::to_string(bits.size()) + " exceeds 62 bits");
    if (!(lo < hi)) throw InvalidBounds("decode bounds require lo < hi");

    std::uint64_t value = 0;
    for (auto b : bits) value = (value << 1) | (b & 1u);
    const std::uint64_t max_code = (std::uint64_t{1} << bits.size()) - 1;
    if (value == max_code) return hi;
    return lo + static_cast<double>(value) * ((hi - lo) / static_cast<double>(max_code));
}

}  // namespace twinga
