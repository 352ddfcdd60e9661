#pragma once

#include <cstdint>
#include <optional>

#include "niho/dists.hpp"
#include "niho/field.hpp"
#include "niho/niho_params.hpp"

namespace niho {

enum class CountMethod { Closed, Brute };

/// Evaluates the family's closed-form value distribution in exact integer
/// arithmetic. Every frequency is checked to be a nonnegative integer and the
/// total to equal the domain size; zero frequencies are omitted.
ValueDist closed_value_dist(const NihoFamily& fam);

/// Closed-form weight distribution with the [n, k, d] header, transcribed
/// from the weight tables (weights written in their published form).
WeightDist closed_weight_dist(const NihoFamily& fam);

/// Number of solutions of x^d1 + y^d1 = 0, x^d2 + y^d2 = 0 over GF(q)^2.
/// Closed: (2^n-1)l + 1 for the binary families, (p^n-1)l/2 + 1 for PAry4.
/// Brute: counts via the y != 0 normalization z = x/y with z^di = +-1.
std::int64_t n2(const NihoFamily& fam, CountMethod method, const FieldCtx* ctx = nullptr);

/// Number of solutions of the three-variable system. Only defined for the
/// four-weight families (WrongFamily for Binary3). Brute uses the z != 0
/// normalization at cost q^2.
std::int64_t n3(const NihoFamily& fam, CountMethod method, const FieldCtx* ctx = nullptr);

/// Fully naive q^3 count of the three-variable system, a second-level oracle
/// for small fields.
std::int64_t n3_brute_naive(const FieldCtx& ctx, const NihoFamily& fam);

struct SolutionCounts {
    std::int64_t n2 = 0;
    std::optional<std::int64_t> n3;  // absent for Binary3
    CountMethod method = CountMethod::Closed;
};

SolutionCounts solution_counts(const NihoFamily& fam, CountMethod method,
                               const FieldCtx* ctx = nullptr);

}  // namespace niho
