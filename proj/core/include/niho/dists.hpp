#pragma once

#include <cstdint>
#include <map>

namespace niho {

/// Exact multiset of exponential-sum values with frequencies.
struct ValueDist {
    std::map<std::int64_t, std::int64_t> entries;  // value -> frequency, zero entries omitted
    std::int64_t domain_size = 0;

    std::int64_t total() const {
        std::int64_t s = 0;
        for (const auto& [v, f] : entries) s += f;
        return s;
    }
    friend bool operator==(const ValueDist&, const ValueDist&) = default;
};

/// Exact weight enumerator with its [n, k, d] header.
struct WeightDist {
    std::map<std::int64_t, std::int64_t> entries;  // weight -> frequency
    std::int64_t length = 0;                       // n
    int dimension = 0;                             // k
    std::int64_t min_distance = 0;                 // d

    std::int64_t total() const {
        std::int64_t s = 0;
        for (const auto& [w, f] : entries) s += f;
        return s;
    }
    friend bool operator==(const WeightDist&, const WeightDist&) = default;
};

}  // namespace niho
