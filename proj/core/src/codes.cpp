#include "niho/codes.hpp"

#include <algorithm>
#include <thread>

namespace niho {
namespace {

std::vector<std::int64_t> cyclotomic_coset(std::int64_t p, std::int64_t N, std::int64_t d) {
    std::vector<std::int64_t> coset{d % N};
    std::int64_t e = (d % N) * p % N;
    while (e != coset.front()) {
        coset.push_back(e);
        e = e * p % N;
    }
    return coset;
}

// Dense polynomial over GF(p) given as low-first coefficient vector.
std::vector<int> poly_mul_gfp(const std::vector<int>& a, const std::vector<int>& b,
                              std::int64_t p) {
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int>((r[i + j] + std::int64_t(a[i]) * b[j]) % p);
    }
    return r;
}

}  // namespace

std::vector<int> minimal_poly(const FieldCtx& ctx, std::int64_t d) {
    const std::int64_t M = ctx.mul_order();
    const auto coset = cyclotomic_coset(ctx.p(), M, d);

    // Product of (x - theta^e) over the coset, with coefficients in GF(q).
    std::vector<FieldElem> poly{ctx.one()};
    for (const std::int64_t e : coset) {
        const FieldElem root = ctx.from_log(e);
        std::vector<FieldElem> next(poly.size() + 1, FieldElem::zero());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = ctx.add(next[i + 1], poly[i]);
            next[i] = ctx.sub(next[i], ctx.mul(poly[i], root));
        }
        poly = std::move(next);
    }

    std::vector<int> out(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const std::uint32_t v = ctx.packed(poly[i]);
        if (v >= static_cast<std::uint32_t>(ctx.p()))
            throw Error("minimal polynomial coefficient fell outside GF(p)");
        out[i] = static_cast<int>(v);
    }
    return out;
}

CodeSpec generator_poly(const FieldCtx& ctx, const NihoFamily& fam) {
    const std::int64_t M = ctx.mul_order();
    const auto coset1 = cyclotomic_coset(fam.p, M, fam.d1);
    if (std::find(coset1.begin(), coset1.end(), fam.d2 % M) != coset1.end())
        throw CosetCollision("d1 and d2 lie in the same cyclotomic coset");

    CodeSpec code;
    code.fam = fam;
    code.length = ctx.q() - 1;
    code.generator = poly_mul_gfp(minimal_poly(ctx, fam.d1), minimal_poly(ctx, fam.d2), fam.p);
    code.dual_dim = static_cast<int>(code.generator.size()) - 1;

    // g must divide x^(q-1) - 1: synthetic remainder of x^(q-1) - 1 by g.
    const std::int64_t p = fam.p;
    std::vector<int> rem(code.generator.size() - 1, 0);
    const auto shift_in = [&](int digit) {
        // rem = rem * x + digit mod g (g monic)
        const int lead = rem.empty() ? digit : rem.back();
        for (std::size_t i = rem.size(); i-- > 1;) rem[i] = rem[i - 1];
        if (!rem.empty()) rem[0] = digit;
        if (lead != 0)
            for (std::size_t i = 0; i < rem.size(); ++i)
                rem[i] = static_cast<int>(
                    ((rem[i] - std::int64_t(lead) * code.generator[i]) % p + p) % p);
    };
    // x^(q-1) - 1 has digits: 1, q-2 zeros, then p-1 (i.e. -1).
    shift_in(1);
    for (std::int64_t i = 0; i < code.length - 1; ++i) shift_in(0);
    shift_in(static_cast<int>(p - 1));
    if (std::any_of(rem.begin(), rem.end(), [](int c) { return c != 0; }))
        throw Error("generator polynomial does not divide x^(q-1) - 1");
    return code;
}

Codeword trace_codeword(const FieldCtx& ctx, const NihoFamily& fam, FieldElem a, FieldElem b) {
    if (fam.variant == FamilyVariant::Binary3 && !ctx.in_subfield(a))
        throw DomainError("binary3 requires a in GF(2^m)");
    const std::int64_t M = ctx.mul_order();
    const std::uint32_t* exp = ctx.exp_table();
    const std::uint8_t* trf = ctx.trace_full_table();
    const std::uint8_t* trh = ctx.trace_half_table();
    const bool collapsed = fam.variant == FamilyVariant::Binary3;

    Codeword w;
    w.a = a;
    w.b = b;
    w.coords.assign(static_cast<std::size_t>(M), 0);
    std::int64_t e1 = a.is_zero() ? -1 : a.log;
    std::int64_t e2 = b.is_zero() ? -1 : b.log;
    for (std::int64_t i = 0; i < M; ++i) {
        const std::uint32_t v1 = e1 < 0 ? 0 : exp[e1];
        const std::uint32_t v2 = e2 < 0 ? 0 : exp[e2];
        if (collapsed)
            w.coords[static_cast<std::size_t>(i)] =
                static_cast<std::uint8_t>((trh[v1] + trf[v2]) % fam.p);
        else
            w.coords[static_cast<std::size_t>(i)] = trf[ctx.add_packed(v1, v2)];
        if (e1 >= 0) {
            e1 += fam.d1;
            if (e1 >= M) e1 -= M;
        }
        if (e2 >= 0) {
            e2 += fam.d2;
            if (e2 >= M) e2 -= M;
        }
    }
    return w;
}

std::int64_t weight_from_sum(const NihoFamily& fam, std::int64_t sum_value) {
    const std::int64_t q = fam.q;
    if (fam.p == 2) {
        if ((q - sum_value) % 2 != 0) throw Error("sum value has the wrong parity");
        return (q - sum_value) / 2;
    }
    if ((q - sum_value) % fam.p != 0) throw Error("sum value is not q mod p");
    return (fam.p - 1) * ((q - sum_value) / fam.p);
}

WeightDist weight_dist_enumerate(const FieldCtx& ctx, const NihoFamily& fam, WordMethod method,
                                 SumMethod sum_method, int jobs) {
    WeightDist wd;
    wd.length = ctx.q() - 1;
    wd.dimension = fam.variant == FamilyVariant::Binary3 ? 3 * fam.m : 4 * fam.m;

    if (method == WordMethod::ViaSums) {
        const ValueDist vd = value_distribution(ctx, fam, sum_method, jobs);
        for (const auto& [v, f] : vd.entries) wd.entries[weight_from_sum(fam, v)] += f;
    } else {
        const auto as = sum_a_domain(ctx, fam);
        const auto bs = sum_b_domain(ctx);
        const std::int64_t M = ctx.mul_order();
        const std::uint32_t* exp = ctx.exp_table();
        const std::uint8_t* trf = ctx.trace_full_table();
        const std::uint8_t* trh = ctx.trace_half_table();
        const bool collapsed = fam.variant == FamilyVariant::Binary3;

        const int nw = std::max(1, jobs);
        std::vector<std::map<std::int64_t, std::int64_t>> partial(static_cast<std::size_t>(nw));
        const std::int64_t na = static_cast<std::int64_t>(as.size());
        const std::int64_t chunk = (na + nw - 1) / nw;
        std::vector<std::thread> pool;
        const auto work = [&](std::int64_t lo, std::int64_t hi, int widx) {
            auto& local = partial[static_cast<std::size_t>(widx)];
            for (std::int64_t ai = lo; ai < hi; ++ai) {
                const FieldElem a = as[static_cast<std::size_t>(ai)];
                for (const FieldElem b : bs) {
                    std::int64_t weight = 0;
                    std::int64_t e1 = a.is_zero() ? -1 : a.log;
                    std::int64_t e2 = b.is_zero() ? -1 : b.log;
                    for (std::int64_t i = 0; i < M; ++i) {
                        const std::uint32_t v1 = e1 < 0 ? 0 : exp[e1];
                        const std::uint32_t v2 = e2 < 0 ? 0 : exp[e2];
                        if (collapsed)
                            weight += (trh[v1] + trf[v2]) % 2 != 0;
                        else
                            weight += trf[ctx.add_packed(v1, v2)] != 0;
                        if (e1 >= 0) {
                            e1 += fam.d1;
                            if (e1 >= M) e1 -= M;
                        }
                        if (e2 >= 0) {
                            e2 += fam.d2;
                            if (e2 >= M) e2 -= M;
                        }
                    }
                    ++local[weight];
                }
            }
        };
        if (nw == 1) {
            work(0, na, 0);
        } else {
            for (int w = 0; w < nw; ++w) {
                const std::int64_t lo = w * chunk;
                const std::int64_t hi = std::min(na, lo + chunk);
                if (lo >= hi) break;
                pool.emplace_back(work, lo, hi, w);
            }
            for (auto& th : pool) th.join();
        }
        for (const auto& h : partial)
            for (const auto& [w, f] : h) wd.entries[w] += f;
    }

    std::int64_t dim_total = 1;
    for (int i = 0; i < wd.dimension; ++i) dim_total *= fam.p;
    if (wd.total() != dim_total) throw Error("enumerated weights do not sum to p^k");
    for (const auto& [w, f] : wd.entries)
        if (w > 0 && f > 0) {
            wd.min_distance = w;
            break;
        }
    return wd;
}

}  // namespace niho
