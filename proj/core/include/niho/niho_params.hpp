#pragma once

#include <cstdint>
#include <utility>

#include "niho/errors.hpp"

namespace niho {

enum class FamilyVariant { Binary3, Binary4, PAry4 };

const char* variant_name(FamilyVariant v);

/// Validated parameter record for one of the three code families. Exponents
/// d_i = s_i(p^m - 1) + 1 are reduced mod p^n - 1, the s_i mod p^m + 1.
struct NihoFamily {
    FamilyVariant variant = FamilyVariant::Binary3;
    std::int64_t p = 0;
    int m = 0;
    int n = 0;
    std::int64_t q = 0;           // p^n
    std::int64_t pm = 0;          // p^m
    std::int64_t unit_order = 0;  // p^m + 1
    std::int64_t s1 = 0, s2 = 0;
    std::int64_t d1 = 0, d2 = 0;
    std::int64_t l = 0;
    std::int64_t k = 0;  // Binary4 only
    std::int64_t t = 0;  // Binary4 / PAry4
};

struct Binary3Params { std::int64_t s2 = 0; };
struct Binary4Params { std::int64_t k = 0; std::int64_t t = 0; };
struct PAry4Params { std::int64_t t = 0; };

/// Constructors validate every family hypothesis and throw ConstraintViolation
/// naming the failed condition.
NihoFamily make_family(std::int64_t p, int m, const Binary3Params& params);
NihoFamily make_family(std::int64_t p, int m, const Binary4Params& params);
NihoFamily make_family(std::int64_t p, int m, const PAry4Params& params);

/// Size cl(d) of the p-cyclotomic coset of d modulo modulus_N.
int coset_size(std::int64_t p, std::int64_t modulus_N, std::int64_t d);

/// Whether two exponent pairs are equivalent: components match (in either
/// order) up to multiplication by a power of p mod p^n - 1.
bool pairs_equivalent(std::int64_t p, int m, std::pair<std::int64_t, std::int64_t> pair_a,
                      std::pair<std::int64_t, std::int64_t> pair_b);

/// s(p^m - 1) + 1 reduced mod p^n - 1.
std::int64_t niho_exponent(std::int64_t p, int m, std::int64_t s);

}  // namespace niho
