#include "niho/niho_params.hpp"

#include <numeric>
#include <string>

namespace niho {
namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::int64_t pos_mod(std::int64_t a, std::int64_t m) {
    a %= m;
    return a < 0 ? a + m : a;
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

NihoFamily base_family(FamilyVariant v, std::int64_t p, int m) {
    if (!is_prime(p)) throw ConstraintViolation("p must be prime");
    if (m < 1) throw ConstraintViolation("m must be positive");
    NihoFamily f;
    f.variant = v;
    f.p = p;
    f.m = m;
    f.n = 2 * m;
    f.pm = ipow(p, m);
    f.q = f.pm * f.pm;
    f.unit_order = f.pm + 1;
    return f;
}

}  // namespace

const char* variant_name(FamilyVariant v) {
    switch (v) {
        case FamilyVariant::Binary3: return "binary3";
        case FamilyVariant::Binary4: return "binary4";
        case FamilyVariant::PAry4: return "pary4";
    }
    return "?";
}

std::int64_t niho_exponent(std::int64_t p, int m, std::int64_t s) {
    const std::int64_t pm = ipow(p, m);
    return pos_mod(s * (pm - 1) + 1, pm * pm - 1);
}

NihoFamily make_family(std::int64_t p, int m, const Binary3Params& params) {
    NihoFamily f = base_family(FamilyVariant::Binary3, p, m);
    if (p != 2) throw ConstraintViolation("binary3 requires p = 2");
    const std::int64_t u = f.unit_order;  // 2^m + 1
    const std::int64_t s2 = pos_mod(params.s2, u);
    const std::int64_t half = (u + 1) / 2;  // the inverse of 2 mod 2^m + 1
    if (s2 == half)
        throw ConstraintViolation("s2 = " + std::to_string(params.s2) +
                                  " is congruent to 1/2 mod 2^m+1, so d2 is equivalent to d1");
    f.s1 = half;
    f.s2 = s2;
    f.d1 = f.pm + 1;  // normalized representative of the s1 = 1/2 coset
    f.d2 = niho_exponent(p, m, s2);
    f.l = std::gcd(pos_mod(2 * s2 - 1, u), u);
    return f;
}

NihoFamily make_family(std::int64_t p, int m, const Binary4Params& params) {
    NihoFamily f = base_family(FamilyVariant::Binary4, p, m);
    if (p != 2) throw ConstraintViolation("binary4 requires p = 2");
    if (m < 2) throw ConstraintViolation("binary4 requires m >= 2");
    const std::int64_t u = f.unit_order;
    const std::int64_t k = params.k, t = params.t;
    if (k < 1 || k > m) throw ConstraintViolation("k must satisfy 1 <= k <= m");
    if (t < 1 || t > u) throw ConstraintViolation("t must satisfy 1 <= t <= 2^m+1");
    if (t % 2 == 0) throw ConstraintViolation("t must be odd");
    const std::int64_t two_k = ipow(2, static_cast<int>(k));
    if (pos_mod((two_k - 1) * t, u) == 0)
        throw ConstraintViolation("(2^k-1)t = 0 mod 2^m+1, so d1 has coset size m");
    if (pos_mod((two_k + 1) * t, u) == 0)
        throw ConstraintViolation("(2^k+1)t = 0 mod 2^m+1, so d2 has coset size m");
    const bool cond_i = ((m + 1) % k) == 0;
    const bool cond_ii = std::gcd(k, std::int64_t(2 * m)) == 1;
    if (!cond_i && !cond_ii)
        throw ConstraintViolation("neither m = -1 mod k nor gcd(k, 2m) = 1 holds");
    f.k = k;
    f.t = t;
    f.s1 = pos_mod((two_k / 2) * t - (t - 1) / 2, u);
    f.s2 = pos_mod((two_k / 2) * t + (t + 1) / 2, u);
    f.d1 = niho_exponent(p, m, f.s1);
    f.d2 = niho_exponent(p, m, f.s2);
    f.l = std::gcd(t, u);
    return f;
}

NihoFamily make_family(std::int64_t p, int m, const PAry4Params& params) {
    NihoFamily f = base_family(FamilyVariant::PAry4, p, m);
    if (p == 2) throw ConstraintViolation("pary4 requires an odd prime p");
    const std::int64_t u = f.unit_order;
    const std::int64_t t = params.t;
    if (t < 1 || t > 4 * u) throw ConstraintViolation("t must satisfy 1 <= t <= 4(p^m+1)");
    if (pos_mod(t, 4) != 2) throw ConstraintViolation("t must be congruent to 2 mod 4");
    if (pos_mod(t, u) == 0)
        throw ConstraintViolation("t = 0 mod p^m+1, so d1 and d2 are equivalent");
    f.t = t;
    f.s1 = pos_mod((t + 2) / 4, u);
    f.s2 = pos_mod((3 * t + 2) / 4, u);
    f.d1 = niho_exponent(p, m, f.s1);
    f.d2 = niho_exponent(p, m, f.s2);
    f.l = std::gcd(t, u);
    return f;
}

int coset_size(std::int64_t p, std::int64_t modulus_N, std::int64_t d) {
    d = pos_mod(d, modulus_N);
    std::int64_t e = pos_mod(d * p, modulus_N);
    int size = 1;
    while (e != d) {
        e = pos_mod(e * p, modulus_N);
        ++size;
    }
    return size;
}

bool pairs_equivalent(std::int64_t p, int m, std::pair<std::int64_t, std::int64_t> pair_a,
                      std::pair<std::int64_t, std::int64_t> pair_b) {
    const std::int64_t N = ipow(p, 2 * m) - 1;
    const auto equivalent = [&](std::int64_t d, std::int64_t e) {
        d = pos_mod(d, N);
        e = pos_mod(e, N);
        std::int64_t x = d;
        for (int i = 0; i < 2 * m; ++i) {
            if (x == e) return true;
            x = pos_mod(x * p, N);
        }
        return false;
    };
    return (equivalent(pair_a.first, pair_b.first) && equivalent(pair_a.second, pair_b.second)) ||
           (equivalent(pair_a.first, pair_b.second) && equivalent(pair_a.second, pair_b.first));
}

}  // namespace niho
