#include "niho/closed_forms.hpp"

#include <string>
#include <vector>

namespace niho {
namespace {

// Table numerators reach ~2^87 at the q <= 2^24 cap, so frequencies are
// evaluated over 128-bit integers with checked exact division.
using int128 = __int128;

std::int64_t to_i64(int128 v, const char* what) {
    if (v > int128(INT64_MAX) || v < int128(INT64_MIN))
        throw Error(std::string(what) + " does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

std::int64_t exact_div(int128 num, int128 den, const char* what) {
    if (den == 0 || num % den != 0)
        throw NonIntegralFrequency(std::string(what) + " is not an integer");
    return to_i64(num / den, what);
}

void add_row(ValueDist& dist, std::int64_t value, int128 num, int128 den, const char* what) {
    const std::int64_t f = exact_div(num, den, what);
    if (f < 0) throw NegativeFrequency(std::string(what) + " is negative");
    if (f > 0) dist.entries[value] += f;
}

ValueDist finish(ValueDist dist, std::int64_t domain) {
    dist.domain_size = domain;
    if (dist.total() != domain)
        throw Error("closed-form frequencies do not sum to the domain size");
    return dist;
}

ValueDist closed_binary3(const NihoFamily& fam) {
    const int128 pm = fam.pm;          // 2^m
    const int128 p2m = pm * pm;        // 2^(2m)
    const int128 l = fam.l;
    ValueDist dist;
    dist.entries[to_i64(p2m, "trivial value")] = 1;
    add_row(dist, to_i64((2 * l - 1) * pm, "value"), (p2m - 1) * (pm - l + 1), 2 * l * l,
            "frequency of (2l-1)2^m");
    add_row(dist, to_i64((l - 1) * pm, "value"), (p2m - 1) * ((pm + 2) * l - pm - 1), l * l,
            "frequency of (l-1)2^m");
    // 2^(3m) - 1 + (2^(2m)-1)(2^m+1-(2^(m+1)+3)l) / (2l^2), as one fraction
    add_row(dist, to_i64(-pm, "value"),
            (pm * p2m - 1) * (2 * l * l) + (p2m - 1) * (pm + 1 - (2 * pm + 3) * l), 2 * l * l,
            "frequency of -2^m");
    return finish(std::move(dist), to_i64(pm * p2m, "domain"));
}

ValueDist closed_binary4(const NihoFamily& fam) {
    const int128 pm = fam.pm;
    const int128 p2m = pm * pm;
    const int128 l = fam.l;
    const int128 l3 = l * l * l;
    ValueDist dist;
    dist.entries[to_i64(p2m, "trivial value")] = 1;
    add_row(dist, to_i64((3 * l - 1) * pm, "value"),
            (p2m - 1) * (pm + 1 - 2 * l) * (pm + 1 - l), 6 * l3, "frequency of (3l-1)2^m");
    add_row(dist, to_i64((2 * l - 1) * pm, "value"),
            (p2m - 1) * ((pm + 3) * l - pm - 1) * (pm + 1 - l), 2 * l3,
            "frequency of (2l-1)2^m");
    add_row(dist, to_i64((l - 1) * pm, "value"),
            (p2m - 1) * ((2 * p2m + 4 * pm + 6) * l * l - (2 * p2m + 7 * pm + 5) * l +
                         (pm + 1) * (pm + 1)),
            2 * l3, "frequency of (l-1)2^m");
    add_row(dist, to_i64(-pm, "value"),
            (p2m - 1) * (6 * (p2m + 1) * l3 - (6 * p2m + 9 * pm + 11) * l * l +
                         (3 * p2m + 9 * pm + 6) * l - (pm + 1) * (pm + 1)),
            6 * l3, "frequency of -2^m");
    return finish(std::move(dist), to_i64(p2m * p2m, "domain"));
}

ValueDist closed_pary4(const NihoFamily& fam) {
    const int128 pm = fam.pm;
    const int128 p2m = pm * pm;
    const int128 l = fam.l;  // always even
    const int128 l3 = l * l * l;
    ValueDist dist;
    dist.entries[to_i64(p2m, "trivial value")] = 1;
    // The second and third rows keep the paper's sign-cancelling factors.
    add_row(dist, to_i64((3 * l / 2 - 1) * pm, "value"),
            2 * (p2m - 1) * (l - pm - 1) * (l - 2 * pm - 2), 3 * l3,
            "frequency of (3l/2-1)p^m");
    add_row(dist, to_i64((l - 1) * pm, "value"),
            (p2m - 1) * (2 * pm + 2 - (pm + 3) * l) * (l - 2 * pm - 2), l3,
            "frequency of (l-1)p^m");
    add_row(dist, to_i64((l / 2 - 1) * pm, "value"),
            2 * (p2m - 1) * ((p2m + 2 * pm + 3) * l * l - (2 * p2m + 7 * pm + 5) * l +
                             2 * (pm + 1) * (pm + 1)),
            l3, "frequency of (l/2-1)p^m");
    add_row(dist, to_i64(-pm, "value"),
            (p2m - 1) * (3 * (p2m + 1) * l3 - (6 * p2m + 9 * pm + 11) * l * l +
                         6 * (p2m + 3 * pm + 2) * l - 4 * (pm + 1) * (pm + 1)),
            3 * l3, "frequency of -p^m");
    return finish(std::move(dist), to_i64(p2m * p2m, "domain"));
}

}  // namespace

ValueDist closed_value_dist(const NihoFamily& fam) {
    switch (fam.variant) {
        case FamilyVariant::Binary3: return closed_binary3(fam);
        case FamilyVariant::Binary4: return closed_binary4(fam);
        case FamilyVariant::PAry4: return closed_pary4(fam);
    }
    throw Error("unknown family variant");
}

WeightDist closed_weight_dist(const NihoFamily& fam) {
    const ValueDist vd = closed_value_dist(fam);
    const std::int64_t pm = fam.pm;
    const std::int64_t l = fam.l;

    WeightDist wd;
    wd.length = fam.q - 1;
    wd.dimension = fam.variant == FamilyVariant::Binary3 ? 3 * fam.m : 4 * fam.m;

    // Weight column of the published tables, keyed by the value-table row.
    const auto table_weight = [&](std::int64_t value) -> std::int64_t {
        const std::int64_t half = pm / 2 * pm;  // 2^(2m-1) for p = 2
        if (fam.variant == FamilyVariant::PAry4) {
            const std::int64_t unit = (pm - pm / fam.p);  // p^m - p^(m-1)
            if (value == pm * pm) return 0;
            if (value == (3 * l / 2 - 1) * pm) return unit * (pm + 1 - 3 * l / 2);
            if (value == (l - 1) * pm) return unit * (pm + 1 - l);
            if (value == (l / 2 - 1) * pm) return unit * (pm + 1 - l / 2);
            return unit * (pm + 1);  // value -p^m
        }
        if (value == pm * pm) return 0;
        if (fam.variant == FamilyVariant::Binary4 && value == (3 * l - 1) * pm)
            return half - (3 * l - 1) * pm / 2;
        if (value == (2 * l - 1) * pm) return half - (2 * l - 1) * pm / 2;
        if (value == (l - 1) * pm) return half - (l - 1) * pm / 2;
        return half + pm / 2;  // value -2^m
    };

    for (const auto& [value, freq] : vd.entries) wd.entries[table_weight(value)] += freq;

    std::int64_t dim_total = 1;
    for (int i = 0; i < wd.dimension; ++i) dim_total *= fam.p;
    if (wd.total() != dim_total)
        throw Error("closed-form weight frequencies do not sum to p^k");
    for (const auto& [w, f] : wd.entries)
        if (w > 0 && f > 0) {
            wd.min_distance = w;
            break;
        }
    return wd;
}

std::int64_t n2(const NihoFamily& fam, CountMethod method, const FieldCtx* ctx) {
    if (method == CountMethod::Closed) {
        const int128 qm1 = int128(fam.q) - 1;
        if (fam.variant == FamilyVariant::PAry4)
            return to_i64(qm1 * fam.l / 2 + 1, "N2");
        return to_i64(qm1 * fam.l + 1, "N2");
    }
    if (ctx == nullptr) throw Error("brute n2 requires a field context");
    // One solution at (0,0); otherwise z = x/y must satisfy z^d1 = z^d2 = 1
    // (p = 2) or = -1 (odd p), each z giving q-1 pairs.
    const std::int64_t M = ctx->mul_order();
    const std::uint32_t target =
        ctx->p() == 2 ? 1u : ctx->packed(ctx->neg(ctx->one()));
    std::int64_t z_count = 0;
    const std::uint32_t* exp = ctx->exp_table();
    for (std::int64_t e = 0; e < M; ++e) {
        if (exp[(e * fam.d1) % M] == target && exp[(e * fam.d2) % M] == target) ++z_count;
    }
    return 1 + M * z_count;
}

std::int64_t n3(const NihoFamily& fam, CountMethod method, const FieldCtx* ctx) {
    if (fam.variant == FamilyVariant::Binary3)
        throw WrongFamily("N3 is not used by the binary3 theorems");
    if (method == CountMethod::Closed) {
        const int128 qm1 = int128(fam.q) - 1;
        const int128 l = fam.l;
        if (fam.variant == FamilyVariant::Binary4)
            return to_i64((int128(fam.pm) - 2) * qm1 * l * l + 3 * qm1 * l + 1, "N3");
        return to_i64((int128(fam.pm) - 2) * qm1 * l * l / 4 + 3 * qm1 * l / 2 + 1, "N3");
    }
    if (ctx == nullptr) throw Error("brute n3 requires a field context");
    // z = 0 contributes N2; otherwise normalize by z and count solutions of
    // u^d1 + v^d1 = 1, u^d2 + v^d2 = 1 over GF(q)^2 (u = -x/z, v = -y/z for
    // odd p, where both exponents are odd).
    const std::int64_t q = ctx->q();
    const std::int64_t M = q - 1;
    const std::uint32_t* exp = ctx->exp_table();
    std::vector<std::uint32_t> pow1(static_cast<std::size_t>(q), 0);
    std::vector<std::uint32_t> pow2(static_cast<std::size_t>(q), 0);
    for (std::int64_t e = 0; e < M; ++e) {
        pow1[static_cast<std::size_t>(e) + 1] = exp[(e * fam.d1) % M];
        pow2[static_cast<std::size_t>(e) + 1] = exp[(e * fam.d2) % M];
    }
    const std::uint32_t one = 1;
    std::int64_t pairs = 0;
    for (std::int64_t ui = 0; ui < q; ++ui) {
        const std::uint32_t u1 = pow1[static_cast<std::size_t>(ui)];
        const std::uint32_t u2 = pow2[static_cast<std::size_t>(ui)];
        for (std::int64_t vi = 0; vi < q; ++vi) {
            pairs += ctx->add_packed(u1, pow1[static_cast<std::size_t>(vi)]) == one &&
                     ctx->add_packed(u2, pow2[static_cast<std::size_t>(vi)]) == one;
        }
    }
    return n2(fam, CountMethod::Brute, ctx) + M * pairs;
}

std::int64_t n3_brute_naive(const FieldCtx& ctx, const NihoFamily& fam) {
    if (fam.variant == FamilyVariant::Binary3)
        throw WrongFamily("N3 is not used by the binary3 theorems");
    const std::int64_t q = ctx.q();
    const std::int64_t M = q - 1;
    const std::uint32_t* exp = ctx.exp_table();
    std::vector<std::uint32_t> pow1(static_cast<std::size_t>(q), 0);
    std::vector<std::uint32_t> pow2(static_cast<std::size_t>(q), 0);
    for (std::int64_t e = 0; e < M; ++e) {
        pow1[static_cast<std::size_t>(e) + 1] = exp[(e * fam.d1) % M];
        pow2[static_cast<std::size_t>(e) + 1] = exp[(e * fam.d2) % M];
    }
    std::int64_t count = 0;
    for (std::int64_t xi = 0; xi < q; ++xi)
        for (std::int64_t yi = 0; yi < q; ++yi) {
            const std::uint32_t s1 =
                ctx.add_packed(pow1[static_cast<std::size_t>(xi)],
                               pow1[static_cast<std::size_t>(yi)]);
            const std::uint32_t s2 =
                ctx.add_packed(pow2[static_cast<std::size_t>(xi)],
                               pow2[static_cast<std::size_t>(yi)]);
            for (std::int64_t zi = 0; zi < q; ++zi) {
                count += ctx.add_packed(s1, pow1[static_cast<std::size_t>(zi)]) == 0 &&
                         ctx.add_packed(s2, pow2[static_cast<std::size_t>(zi)]) == 0;
            }
        }
    return count;
}

SolutionCounts solution_counts(const NihoFamily& fam, CountMethod method, const FieldCtx* ctx) {
    SolutionCounts sc;
    sc.method = method;
    sc.n2 = n2(fam, method, ctx);
    if (fam.variant != FamilyVariant::Binary3) sc.n3 = n3(fam, method, ctx);
    return sc;
}

}  // namespace niho
