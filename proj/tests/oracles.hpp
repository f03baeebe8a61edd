#pragma once

// Reference computations used by the tests. Written against plain strings
// and doubles so they share no code path with the library.

#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

/// Integer value of a '0'/'1' string read MSB first, as a sum of powers of two.
inline double code_value(const std::string& bits) {
    double v = 0.0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] == '1') v += std::ldexp(1.0, static_cast<int>(bits.size() - 1 - i));
    return v;
}

/// All 2^len bit strings in increasing numeric order.
inline std::vector<std::string> all_codes(int len) {
    std::vector<std::string> out;
    for (long v = 0; v < (1L << len); ++v) {
        std::string s(static_cast<std::size_t>(len), '0');
        for (int b = 0; b < len; ++b)
            if (v & (1L << (len - 1 - b))) s[static_cast<std::size_t>(b)] = '1';
        out.push_back(s);
    }
    return out;
}

inline std::pair<std::string, std::string> cross(const std::string& a, const std::string& b, std::size_t cut) {
    return {a.substr(0, cut) + b.substr(cut), b.substr(0, cut) + a.substr(cut)};
}

inline std::set<std::size_t> differing(const std::string& a, const std::string& b) {
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) out.insert(i);
    return out;
}

inline std::string flip(std::string s, const std::vector<std::size_t>& positions) {
    for (auto p : positions) s[p] = s[p] == '1' ? '0' : '1';
    return s;
}

/// Sample mean and (n-1) standard deviation.
inline std::pair<double, double> mean_sd(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m += x;
    m /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    return {m, v.size() > 1 ? std::sqrt(ss / static_cast<double>(v.size() - 1)) : 0.0};
}

}  // namespace oracle
