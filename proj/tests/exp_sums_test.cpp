#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "niho/closed_forms.hpp"
#include "niho/exp_sums.hpp"

using namespace niho;

namespace {

// Test-side trace oracle built from plain field arithmetic instead of the
// precomputed tables.
int trace_oracle(const FieldCtx& ctx, FieldElem x, int levels) {
    FieldElem acc = FieldElem::zero();
    FieldElem power = x;
    for (int j = 0; j < levels; ++j) {
        acc = ctx.add(acc, power);
        power = ctx.pow(power, ctx.p());
    }
    REQUIRE(ctx.packed(acc) < static_cast<std::uint32_t>(ctx.p()));
    return static_cast<int>(ctx.packed(acc));
}

// Independent summation oracle: evaluates the defining sum term by term.
std::int64_t char_sum_oracle(const FieldCtx& ctx, const NihoFamily& fam, FieldElem a,
                             FieldElem b) {
    std::map<int, std::int64_t> fibers;
    fibers[0] = 1;  // x = 0
    for (std::int64_t e = 0; e < ctx.mul_order(); ++e) {
        const FieldElem x = ctx.from_log(e);
        int f;
        if (fam.variant == FamilyVariant::Binary3) {
            f = (trace_oracle(ctx, ctx.mul(a, ctx.pow(x, fam.d1)), fam.m) +
                 trace_oracle(ctx, ctx.mul(b, ctx.pow(x, fam.d2)), fam.n)) %
                2;
        } else {
            f = trace_oracle(
                ctx, ctx.add(ctx.mul(a, ctx.pow(x, fam.d1)), ctx.mul(b, ctx.pow(x, fam.d2))),
                fam.n);
        }
        ++fibers[f];
    }
    for (int j = 2; j < fam.p; ++j) REQUIRE(fibers[j] == fibers[1]);
    return fibers[0] - fibers[1];
}

// Independent root-count oracle over S via plain field arithmetic.
std::int64_t root_count_oracle(const FieldCtx& ctx, const NihoFamily& fam, FieldElem a,
                               FieldElem b) {
    std::int64_t count = 0;
    for (const FieldElem z : ctx.unit_circle()) {
        FieldElem val;
        if (fam.variant == FamilyVariant::Binary3) {
            val = ctx.add(ctx.mul(ctx.conjugate(b), ctx.pow(z, 2 * (2 * fam.s2 - 1))),
                          ctx.add(ctx.mul(ctx.sqrt_char2(a), ctx.pow(z, 2 * fam.s2 - 1)), b));
        } else {
            val = ctx.add(
                ctx.add(ctx.mul(ctx.conjugate(b), ctx.pow(z, 2 * fam.s2 - 1)),
                        ctx.mul(ctx.conjugate(a), ctx.pow(z, fam.s1 + fam.s2 - 1))),
                ctx.add(ctx.mul(a, ctx.pow(z, fam.s2 - fam.s1)), b));
        }
        count += val.is_zero();
    }
    return count;
}

}  // namespace

TEST_CASE("char_sum trivial values") {
    SUBCASE("binary3 (0,0) = 2^(2m)") {
        const FieldCtx ctx = build_field(2, 2);
        const NihoFamily fam = make_family(2, 2, Binary3Params{1});
        CHECK(char_sum(ctx, fam, FieldElem::zero(), FieldElem::zero()) == 16);
    }
    SUBCASE("pary4 (0,0) = p^(2m)") {
        const FieldCtx ctx = build_field(3, 2);
        const NihoFamily fam = make_family(3, 2, PAry4Params{2});
        CHECK(char_sum(ctx, fam, FieldElem::zero(), FieldElem::zero()) == 81);
    }
}

TEST_CASE("char_sum equals the term-by-term oracle on all pairs") {
    SUBCASE("binary3 m=2 s2=1, including the frozen (0,1) -> 0") {
        const FieldCtx ctx = build_field(2, 2);
        const NihoFamily fam = make_family(2, 2, Binary3Params{1});
        CHECK(char_sum(ctx, fam, FieldElem::zero(), ctx.one()) == 0);
        for (const FieldElem a : sum_a_domain(ctx, fam))
            for (const FieldElem b : sum_b_domain(ctx))
                CHECK(char_sum(ctx, fam, a, b) == char_sum_oracle(ctx, fam, a, b));
    }
    SUBCASE("pary4 p=3 m=1 t=2") {
        const FieldCtx ctx = build_field(3, 1);
        const NihoFamily fam = make_family(3, 1, PAry4Params{2});
        for (const FieldElem a : sum_a_domain(ctx, fam))
            for (const FieldElem b : sum_b_domain(ctx))
                CHECK(char_sum(ctx, fam, a, b) == char_sum_oracle(ctx, fam, a, b));
    }
}

TEST_CASE("char_sum rejects a outside GF(2^m) for binary3") {
    const FieldCtx ctx = build_field(2, 2);
    const NihoFamily fam = make_family(2, 2, Binary3Params{1});
    CHECK_THROWS_AS(char_sum(ctx, fam, ctx.theta(), FieldElem::zero()), DomainError);
}

TEST_CASE("niho_root_count") {
    SUBCASE("(0,0) counts the whole unit circle") {
        const FieldCtx ctx = build_field(2, 3);
        const NihoFamily fam = make_family(2, 3, Binary3Params{1});
        CHECK(niho_root_count(ctx, fam, FieldElem::zero(), FieldElem::zero()) == 9);
    }
    SUBCASE("binary3 m=2 s2=1 at (0,1): z^2 + 1 has one root in S") {
        const FieldCtx ctx = build_field(2, 2);
        const NihoFamily fam = make_family(2, 2, Binary3Params{1});
        CHECK(niho_root_count(ctx, fam, FieldElem::zero(), ctx.one()) == 1);
    }
    SUBCASE("matches the arithmetic oracle on all pairs") {
        const FieldCtx ctx = build_field(2, 2);
        const NihoFamily b3 = make_family(2, 2, Binary3Params{1});
        for (const FieldElem a : sum_a_domain(ctx, b3))
            for (const FieldElem b : sum_b_domain(ctx))
                CHECK(niho_root_count(ctx, b3, a, b) == root_count_oracle(ctx, b3, a, b));
        const NihoFamily b4 = make_family(2, 2, Binary4Params{1, 1});
        for (const FieldElem a : sum_b_domain(ctx))
            for (const FieldElem b : sum_b_domain(ctx))
                CHECK(niho_root_count(ctx, b4, a, b) == root_count_oracle(ctx, b4, a, b));
    }
}

TEST_CASE("Niho lemma: char_sum = (root count - 1) p^m on every pair") {
    SUBCASE("binary3 m=2") {
        const FieldCtx ctx = build_field(2, 2);
        const NihoFamily fam = make_family(2, 2, Binary3Params{2});
        for (const FieldElem a : sum_a_domain(ctx, fam))
            for (const FieldElem b : sum_b_domain(ctx))
                CHECK(char_sum(ctx, fam, a, b) == (niho_root_count(ctx, fam, a, b) - 1) * 4);
        CHECK(count_lemma_mismatches(ctx, fam) == 0);
    }
    SUBCASE("binary4 m=2 (k,t)=(1,1)") {
        const FieldCtx ctx = build_field(2, 2);
        const NihoFamily fam = make_family(2, 2, Binary4Params{1, 1});
        CHECK(count_lemma_mismatches(ctx, fam) == 0);
    }
    SUBCASE("pary4 p=3 m=1 t=2 and t=6") {
        const FieldCtx ctx = build_field(3, 1);
        for (const std::int64_t t : {2, 6}) {
            const NihoFamily fam = make_family(3, 1, PAry4Params{t});
            for (const FieldElem a : sum_b_domain(ctx))
                for (const FieldElem b : sum_b_domain(ctx))
                    CHECK(char_sum(ctx, fam, a, b) ==
                          (niho_root_count(ctx, fam, a, b) - 1) * 3);
        }
    }
}

TEST_CASE("value_distribution matches the published tables") {
    SUBCASE("binary3 m=2 s2=1") {
        const FieldCtx ctx = build_field(2, 2);
        const NihoFamily fam = make_family(2, 2, Binary3Params{1});
        const std::map<std::int64_t, std::int64_t> expected{
            {16, 1}, {4, 30}, {0, 15}, {-4, 18}};
        for (const SumMethod method : {SumMethod::Direct, SumMethod::Niho}) {
            const ValueDist dist = value_distribution(ctx, fam, method);
            CHECK(dist.entries == expected);
            CHECK(dist.domain_size == 64);
            CHECK(dist.total() == 64);
        }
    }
    SUBCASE("binary4 m=3 (k,t)=(1,1)") {
        const FieldCtx ctx = build_field(2, 3);
        const NihoFamily fam = make_family(2, 3, Binary4Params{1, 1});
        const std::map<std::int64_t, std::int64_t> expected{
            {64, 1}, {16, 588}, {8, 504}, {0, 1827}, {-8, 1176}};
        const ValueDist direct = value_distribution(ctx, fam, SumMethod::Direct);
        const ValueDist niho = value_distribution(ctx, fam, SumMethod::Niho);
        CHECK(direct.entries == expected);
        CHECK(direct == niho);
    }
    SUBCASE("pary4 p=3 m=2 t=2") {
        const FieldCtx ctx = build_field(3, 2);
        const NihoFamily fam = make_family(3, 2, PAry4Params{2});
        const std::map<std::int64_t, std::int64_t> expected{
            {81, 1}, {18, 960}, {9, 720}, {0, 2960}, {-9, 1920}};
        const ValueDist direct = value_distribution(ctx, fam, SumMethod::Direct);
        const ValueDist niho = value_distribution(ctx, fam, SumMethod::Niho);
        CHECK(direct.entries == expected);
        CHECK(direct == niho);
        CHECK(direct.total() == 6561);
    }
    SUBCASE("worker count does not change the histogram") {
        const FieldCtx ctx = build_field(3, 2);
        const NihoFamily fam = make_family(3, 2, PAry4Params{2});
        CHECK(value_distribution(ctx, fam, SumMethod::Niho, 1) ==
              value_distribution(ctx, fam, SumMethod::Niho, 3));
        CHECK(value_distribution(ctx, fam, SumMethod::Direct, 1) ==
              value_distribution(ctx, fam, SumMethod::Direct, 4));
    }
}

TEST_CASE("observed values stay inside the predicted support") {
    SUBCASE("binary3") {
        const FieldCtx ctx = build_field(2, 3);
        for (const std::int64_t s2 : {1, 2, 3, 4}) {
            const NihoFamily fam = make_family(2, 3, Binary3Params{s2});
            const ValueDist dist = value_distribution(ctx, fam, SumMethod::Niho);
            const std::int64_t pm = fam.pm, l = fam.l;
            for (const auto& [v, f] : dist.entries) {
                CHECK((v == pm * pm || v == -pm || v == (l - 1) * pm || v == (2 * l - 1) * pm));
                CHECK(f > 0);
            }
        }
    }
    SUBCASE("pary4") {
        const FieldCtx ctx = build_field(3, 2);
        for (const std::int64_t t : {2, 6, 14, 18}) {
            const NihoFamily fam = make_family(3, 2, PAry4Params{t});
            const ValueDist dist = value_distribution(ctx, fam, SumMethod::Niho);
            const std::int64_t pm = fam.pm, l = fam.l;
            for (const auto& [v, f] : dist.entries)
                CHECK((v == pm * pm || v == -pm || v == (l / 2 - 1) * pm ||
                       v == (l - 1) * pm || v == (3 * l / 2 - 1) * pm));
        }
    }
}

TEST_CASE("pary4 sums are invariant under scaling by GF(p)*") {
    const FieldCtx ctx = build_field(3, 2);
    const NihoFamily fam = make_family(3, 2, PAry4Params{2});
    const FieldElem two = ctx.from_packed(2);
    for (std::int64_t ea = -1; ea < 20; ++ea)
        for (std::int64_t eb = -1; eb < 20; ++eb) {
            const FieldElem a = ea < 0 ? FieldElem::zero() : ctx.from_log(ea * 4);
            const FieldElem b = eb < 0 ? FieldElem::zero() : ctx.from_log(eb * 3);
            CHECK(char_sum(ctx, fam, a, b) ==
                  char_sum(ctx, fam, ctx.mul(two, a), ctx.mul(two, b)));
        }
}

TEST_CASE("IrrationalSum guards non-Niho exponent pairs") {
    // A hand-broken family: d1 = 1, d2 = 2 over GF(9) is not of Niho shape,
    // and completing the square makes some sums irrational.
    const FieldCtx ctx = build_field(3, 1);
    NihoFamily broken = make_family(3, 1, PAry4Params{2});
    broken.d1 = 1;
    broken.d2 = 2;
    bool raised = false;
    for (std::int64_t ea = 0; ea < 8 && !raised; ++ea)
        for (std::int64_t eb = 0; eb < 8 && !raised; ++eb) {
            try {
                char_sum(ctx, broken, ctx.from_log(ea), ctx.from_log(eb));
            } catch (const IrrationalSum&) {
                raised = true;
            }
        }
    CHECK(raised);
}

TEST_CASE("moment identities") {
    SUBCASE("binary3 m=2 s2=1: items 1 and 2") {
        const FieldCtx ctx = build_field(2, 2);
        const NihoFamily fam = make_family(2, 2, Binary3Params{1});
        const MomentReport rep = moment_report(ctx, fam);
        REQUIRE(rep.rows.size() == 2);
        CHECK(rep.rows[0].id == 1);
        CHECK(rep.rows[0].lhs == 64);
        CHECK(rep.rows[1].id == 2);
        CHECK(rep.rows[1].lhs == 1024);
        CHECK(rep.rows[1].rhs_closed == 64 * 16);
        CHECK(rep.pass);
    }
    SUBCASE("binary4 m=3: items 3-5") {
        const FieldCtx ctx = build_field(2, 3);
        const NihoFamily fam = make_family(2, 3, Binary4Params{1, 5});
        const MomentReport rep = moment_report(ctx, fam);
        REQUIRE(rep.rows.size() == 3);
        CHECK(rep.rows[0].id == 3);
        CHECK(rep.rows[0].lhs == 4096);
        CHECK(rep.pass);
    }
    SUBCASE("pary4 p=3 m=2 t=2: items 6-8") {
        const FieldCtx ctx = build_field(3, 2);
        const NihoFamily fam = make_family(3, 2, PAry4Params{2});
        const MomentReport rep = moment_report(ctx, fam);
        REQUIRE(rep.rows.size() == 3);
        CHECK(rep.rows[0].id == 6);
        CHECK(rep.rows[0].lhs == 6561);
        CHECK(rep.rows[1].id == 7);
        CHECK(rep.rows[2].id == 8);
        CHECK(rep.pass);
    }
}

TEST_CASE("larger characteristics: p = 11 and p = 13 at m = 1") {
    // regression: fiber buffers must scale with p
    for (const std::int64_t p : {11, 13}) {
        const FieldCtx ctx = build_field(p, 1);
        const NihoFamily fam = make_family(p, 1, PAry4Params{2});
        const ValueDist direct = value_distribution(ctx, fam, SumMethod::Direct);
        const ValueDist niho = value_distribution(ctx, fam, SumMethod::Niho);
        CHECK(direct == niho);
        CHECK(direct.total() == ctx.q() * ctx.q());
        CHECK(direct.entries == closed_value_dist(fam).entries);
    }
}

TEST_CASE("sampled mode stays inside the closed support") {
    const FieldCtx ctx = build_field(3, 2);
    const NihoFamily fam = make_family(3, 2, PAry4Params{2});
    const ValueDist full = value_distribution(ctx, fam, SumMethod::Niho);
    for (const SumMethod method : {SumMethod::Direct, SumMethod::Niho}) {
        const ValueDist sampled = value_distribution_sampled(ctx, fam, method, 500, 12345);
        CHECK(sampled.domain_size == 500);
        CHECK(sampled.total() == 500);
        for (const auto& [v, f] : sampled.entries) CHECK(full.entries.count(v) == 1);
    }
}
