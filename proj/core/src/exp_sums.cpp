#include "niho/exp_sums.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <thread>

#include "niho/closed_forms.hpp"

namespace niho {
namespace {

std::int64_t pos_mod(std::int64_t a, std::int64_t m) {
    a %= m;
    return a < 0 ? a + m : a;
}

void check_binary3_a(const FieldCtx& ctx, const NihoFamily& fam, FieldElem a) {
    if (fam.variant == FamilyVariant::Binary3 && !ctx.in_subfield(a))
        throw DomainError("binary3 requires a in GF(2^m)");
}

// Trace row of one parameter: row[e] = Tr(c * theta^(e*d)) for e = 0..q-2,
// using the half trace for the Binary3 a-term (the product lies in GF(2^m)).
void fill_trace_row(const FieldCtx& ctx, std::int64_t d, FieldElem c, bool half,
                    std::uint8_t* row) {
    const std::int64_t M = ctx.mul_order();
    const std::uint32_t* exp = ctx.exp_table();
    const std::uint8_t* tr = half ? ctx.trace_half_table() : ctx.trace_full_table();
    if (c.is_zero()) {
        std::fill(row, row + M, std::uint8_t{0});
        return;
    }
    std::int64_t idx = c.log;
    const std::int64_t step = pos_mod(d, M);
    for (std::int64_t e = 0; e < M; ++e) {
        row[e] = tr[exp[idx]];
        idx += step;
        if (idx >= M) idx -= M;
    }
}

// (ta + tb) mod p lookup covering sums up to 2(p-1).
std::vector<std::uint8_t> make_mod_lut(std::int64_t p) {
    std::vector<std::uint8_t> lut(static_cast<std::size_t>(2 * p));
    for (std::size_t s = 0; s < lut.size(); ++s)
        lut[s] = static_cast<std::uint8_t>(s % static_cast<std::size_t>(p));
    return lut;
}

// Fiber counts of rowA + rowB over GF(q)* plus the x = 0 term, turned into
// the rational sum value c0 - c1. Nonzero fibers must agree for odd p.
// fibers is caller-owned scratch of p entries.
std::int64_t value_from_rows(std::int64_t p, std::int64_t M, const std::uint8_t* ra,
                             const std::uint8_t* rb, const std::uint8_t* mod_lut,
                             std::int64_t* fibers) {
    if (p == 2) {
        std::int64_t ones = 0;
        for (std::int64_t e = 0; e < M; ++e) ones += ra[e] ^ rb[e];
        return (M + 1 - ones) - ones;
    }
    std::fill(fibers, fibers + p, std::int64_t{0});
    fibers[0] = 1;  // x = 0 contributes trace 0
    for (std::int64_t e = 0; e < M; ++e) ++fibers[mod_lut[ra[e] + rb[e]]];
    for (std::int64_t j = 2; j < p; ++j)
        if (fibers[j] != fibers[1])
            throw IrrationalSum("nonzero trace fibers are unequal; the sum is irrational");
    return fibers[0] - fibers[1];
}

// Unit-circle evaluator for the family's Niho polynomial.
struct NihoEval {
    const FieldCtx& ctx;
    const NihoFamily& fam;
    std::int64_t u, M, pm;
    int nterms = 0;
    // zlog[i][j] = field log of eta^(j * E_i), the i-th term's power at S[j]
    std::array<std::vector<std::int32_t>, 4> zlog;

    NihoEval(const FieldCtx& c, const NihoFamily& f) : ctx(c), fam(f) {
        u = fam.unit_order;
        M = ctx.mul_order();
        pm = fam.pm;
        std::array<std::int64_t, 4> exps{};
        if (fam.variant == FamilyVariant::Binary3) {
            nterms = 3;
            exps = {pos_mod(2 * (2 * fam.s2 - 1), u), pos_mod(2 * fam.s2 - 1, u), 0, 0};
        } else {
            nterms = 4;
            exps = {pos_mod(2 * fam.s2 - 1, u), pos_mod(fam.s1 + fam.s2 - 1, u),
                    pos_mod(fam.s2 - fam.s1, u), 0};
        }
        for (int i = 0; i < nterms; ++i) {
            zlog[i].resize(static_cast<std::size_t>(u));
            for (std::int64_t j = 0; j < u; ++j)
                zlog[i][static_cast<std::size_t>(j)] =
                    static_cast<std::int32_t>(((j * exps[i]) % u) * (pm - 1) % M);
        }
    }

    std::int64_t count(FieldElem a, FieldElem b) const {
        std::array<std::int32_t, 4> clog{};
        std::array<const std::int32_t*, 4> rows{};
        int active = 0;
        const auto push = [&](FieldElem c, int term) {
            if (!c.is_zero()) {
                clog[active] = c.log;
                rows[active] = zlog[term].data();
                ++active;
            }
        };
        if (fam.variant == FamilyVariant::Binary3) {
            push(ctx.conjugate(b), 0);
            push(ctx.sqrt_char2(a), 1);
            push(b, 2);
        } else {
            push(ctx.conjugate(b), 0);
            push(ctx.conjugate(a), 1);
            push(a, 2);
            push(b, 3);
        }
        const std::uint32_t* exp = ctx.exp_table();
        std::int64_t roots = 0;
        for (std::int64_t j = 0; j < u; ++j) {
            std::uint32_t acc = 0;
            for (int i = 0; i < active; ++i) {
                std::int64_t idx = clog[i] + rows[i][j];
                if (idx >= M) idx -= M;
                acc = ctx.add_packed(acc, exp[idx]);
            }
            roots += (acc == 0);
        }
        return roots;
    }
};

// Runs body(lo, hi, worker) over [0, count) split across jobs threads.
template <class Fn>
int parallel_over(std::int64_t count, int jobs, Fn&& body) {
    jobs = static_cast<int>(std::max<std::int64_t>(1, std::min<std::int64_t>(jobs, count)));
    if (jobs == 1) {
        body(std::int64_t{0}, count, 0);
        return 1;
    }
    std::vector<std::thread> pool;
    const std::int64_t chunk = (count + jobs - 1) / jobs;
    int workers = 0;
    for (int w = 0; w < jobs; ++w) {
        const std::int64_t lo = w * chunk;
        const std::int64_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi, w] { body(lo, hi, w); });
        ++workers;
    }
    for (auto& th : pool) th.join();
    return workers;
}

struct DirectTables {
    std::int64_t M = 0;
    bool cache_b = false;
    std::vector<std::uint8_t> tb;  // b-rows, q * M when cached
    std::vector<FieldElem> bs;
    std::vector<std::uint8_t> lut;  // (ta + tb) mod p

    DirectTables(const FieldCtx& ctx, const NihoFamily& fam) {
        M = ctx.mul_order();
        bs = sum_b_domain(ctx);
        lut = make_mod_lut(ctx.p());
        cache_b = ctx.q() <= 2048;
        if (cache_b) {
            tb.resize(bs.size() * static_cast<std::size_t>(M));
            for (std::size_t i = 0; i < bs.size(); ++i)
                fill_trace_row(ctx, fam.d2, bs[i], false, tb.data() + i * M);
        }
    }

    const std::uint8_t* row_b(const FieldCtx& ctx, const NihoFamily& fam, std::size_t i,
                              std::vector<std::uint8_t>& scratch) const {
        if (cache_b) return tb.data() + i * static_cast<std::size_t>(M);
        scratch.resize(static_cast<std::size_t>(M));
        fill_trace_row(ctx, fam.d2, bs[i], false, scratch.data());
        return scratch.data();
    }
};

using Hist = std::map<std::int64_t, std::int64_t>;

void merge_into(Hist& dst, const Hist& src) {
    for (const auto& [v, f] : src) dst[v] += f;
}

}  // namespace

std::vector<FieldElem> sum_a_domain(const FieldCtx& ctx, const NihoFamily& fam) {
    std::vector<FieldElem> as;
    if (fam.variant == FamilyVariant::Binary3) {
        as.reserve(static_cast<std::size_t>(fam.pm));
        as.push_back(FieldElem::zero());
        for (std::int64_t j = 0; j < fam.pm - 1; ++j)
            as.push_back(ctx.from_log(j * (fam.pm + 1)));
    } else {
        as.reserve(static_cast<std::size_t>(ctx.q()));
        as.push_back(FieldElem::zero());
        for (std::int64_t e = 0; e < ctx.mul_order(); ++e) as.push_back(ctx.from_log(e));
    }
    return as;
}

std::vector<FieldElem> sum_b_domain(const FieldCtx& ctx) {
    std::vector<FieldElem> bs;
    bs.reserve(static_cast<std::size_t>(ctx.q()));
    bs.push_back(FieldElem::zero());
    for (std::int64_t e = 0; e < ctx.mul_order(); ++e) bs.push_back(ctx.from_log(e));
    return bs;
}

std::int64_t char_sum(const FieldCtx& ctx, const NihoFamily& fam, FieldElem a, FieldElem b) {
    check_binary3_a(ctx, fam, a);
    const std::int64_t M = ctx.mul_order();
    const bool half_a = fam.variant == FamilyVariant::Binary3;
    std::vector<std::uint8_t> ra(static_cast<std::size_t>(M));
    std::vector<std::uint8_t> rb(static_cast<std::size_t>(M));
    fill_trace_row(ctx, fam.d1, a, half_a, ra.data());
    fill_trace_row(ctx, fam.d2, b, false, rb.data());
    const std::vector<std::uint8_t> lut = make_mod_lut(ctx.p());
    std::vector<std::int64_t> fibers(static_cast<std::size_t>(ctx.p()));
    return value_from_rows(ctx.p(), M, ra.data(), rb.data(), lut.data(), fibers.data());
}

std::int64_t niho_root_count(const FieldCtx& ctx, const NihoFamily& fam, FieldElem a,
                             FieldElem b) {
    check_binary3_a(ctx, fam, a);
    return NihoEval(ctx, fam).count(a, b);
}

ValueDist value_distribution(const FieldCtx& ctx, const NihoFamily& fam, SumMethod method,
                             int jobs) {
    const auto as = sum_a_domain(ctx, fam);
    const std::int64_t M = ctx.mul_order();
    const bool half_a = fam.variant == FamilyVariant::Binary3;
    const std::int64_t na = static_cast<std::int64_t>(as.size());

    std::vector<Hist> partial(static_cast<std::size_t>(std::max(1, jobs)));
    std::vector<std::exception_ptr> errors(partial.size());

    if (method == SumMethod::Direct) {
        const DirectTables tabs(ctx, fam);
        parallel_over(na, jobs, [&](std::int64_t lo, std::int64_t hi, int w) {
            try {
                Hist& local = partial[static_cast<std::size_t>(w)];
                std::vector<std::uint8_t> ra(static_cast<std::size_t>(M));
                std::vector<std::uint8_t> scratch;
                std::vector<std::int64_t> fibers(static_cast<std::size_t>(ctx.p()));
                for (std::int64_t ai = lo; ai < hi; ++ai) {
                    fill_trace_row(ctx, fam.d1, as[static_cast<std::size_t>(ai)], half_a,
                                   ra.data());
                    for (std::size_t bi = 0; bi < tabs.bs.size(); ++bi) {
                        const std::uint8_t* rb = tabs.row_b(ctx, fam, bi, scratch);
                        ++local[value_from_rows(ctx.p(), M, ra.data(), rb, tabs.lut.data(),
                                                fibers.data())];
                    }
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    } else {
        const NihoEval eval(ctx, fam);
        const auto bs = sum_b_domain(ctx);
        parallel_over(na, jobs, [&](std::int64_t lo, std::int64_t hi, int w) {
            try {
                Hist& local = partial[static_cast<std::size_t>(w)];
                for (std::int64_t ai = lo; ai < hi; ++ai)
                    for (const FieldElem b : bs)
                        ++local[(eval.count(as[static_cast<std::size_t>(ai)], b) - 1) * fam.pm];
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);

    ValueDist dist;
    dist.domain_size = na * ctx.q();
    for (const auto& h : partial) merge_into(dist.entries, h);
    return dist;
}

ValueDist value_distribution_sampled(const FieldCtx& ctx, const NihoFamily& fam,
                                     SumMethod method, std::int64_t samples,
                                     std::uint64_t seed) {
    const auto as = sum_a_domain(ctx, fam);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_a(0, as.size() - 1);
    std::uniform_int_distribution<std::int64_t> pick_b(-1, ctx.mul_order() - 1);
    const NihoEval eval(ctx, fam);
    ValueDist dist;
    dist.domain_size = samples;
    for (std::int64_t i = 0; i < samples; ++i) {
        const FieldElem a = as[pick_a(rng)];
        const std::int64_t blog = pick_b(rng);
        const FieldElem b = blog < 0 ? FieldElem::zero() : ctx.from_log(blog);
        const std::int64_t v = method == SumMethod::Direct
                                   ? char_sum(ctx, fam, a, b)
                                   : (eval.count(a, b) - 1) * fam.pm;
        ++dist.entries[v];
    }
    return dist;
}

std::int64_t count_lemma_mismatches(const FieldCtx& ctx, const NihoFamily& fam, int jobs) {
    const auto as = sum_a_domain(ctx, fam);
    const std::int64_t M = ctx.mul_order();
    const bool half_a = fam.variant == FamilyVariant::Binary3;
    const DirectTables tabs(ctx, fam);
    const NihoEval eval(ctx, fam);

    std::vector<std::int64_t> bad(static_cast<std::size_t>(std::max(1, jobs)), 0);
    std::vector<std::exception_ptr> errors(bad.size());
    parallel_over(static_cast<std::int64_t>(as.size()), jobs,
                  [&](std::int64_t lo, std::int64_t hi, int w) {
                      try {
                          std::int64_t mism = 0;
                          std::vector<std::uint8_t> ra(static_cast<std::size_t>(M));
                          std::vector<std::uint8_t> scratch;
                          std::vector<std::int64_t> fibers(static_cast<std::size_t>(ctx.p()));
                          for (std::int64_t ai = lo; ai < hi; ++ai) {
                              const FieldElem a = as[static_cast<std::size_t>(ai)];
                              fill_trace_row(ctx, fam.d1, a, half_a, ra.data());
                              for (std::size_t bi = 0; bi < tabs.bs.size(); ++bi) {
                                  const std::uint8_t* rb = tabs.row_b(ctx, fam, bi, scratch);
                                  const std::int64_t direct = value_from_rows(
                                      ctx.p(), M, ra.data(), rb, tabs.lut.data(),
                                      fibers.data());
                                  const std::int64_t via_roots =
                                      (eval.count(a, tabs.bs[bi]) - 1) * fam.pm;
                                  mism += (direct != via_roots);
                              }
                          }
                          bad[static_cast<std::size_t>(w)] += mism;
                      } catch (...) {
                          errors[static_cast<std::size_t>(w)] = std::current_exception();
                      }
                  });
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    std::int64_t total = 0;
    for (const std::int64_t b : bad) total += b;
    return total;
}

MomentReport moment_report(const FieldCtx& ctx, const NihoFamily& fam) {
    return moment_report(ctx, fam, value_distribution(ctx, fam, SumMethod::Niho));
}

MomentReport moment_report(const FieldCtx& ctx, const NihoFamily& fam, const ValueDist& dist) {
    const auto power_sum = [&](int k) {
        std::int64_t sum = 0;
        for (const auto& [v, f] : dist.entries) {
            std::int64_t vk = 1;
            for (int i = 0; i < k; ++i) vk *= v;
            sum += vk * f;
        }
        return sum;
    };
    const std::int64_t n2c = n2(fam, CountMethod::Closed);
    const std::int64_t n2b = n2(fam, CountMethod::Brute, &ctx);

    MomentReport rep;
    const auto add_row = [&rep](int id, std::int64_t lhs, std::int64_t rc, std::int64_t rb) {
        rep.rows.push_back(MomentRow{id, lhs, rc, rb, lhs == rc && lhs == rb});
    };
    if (fam.variant == FamilyVariant::Binary3) {
        const std::int64_t dom = fam.pm * fam.q;  // 2^(3m)
        add_row(1, power_sum(1), dom, dom);
        add_row(2, power_sum(2), dom * n2c, dom * n2b);
    } else {
        const std::int64_t dom = fam.q * fam.q;  // p^(2n)
        const std::int64_t n3c = n3(fam, CountMethod::Closed);
        const std::int64_t n3b = n3(fam, CountMethod::Brute, &ctx);
        const int base = fam.variant == FamilyVariant::Binary4 ? 3 : 6;
        add_row(base, power_sum(1), dom, dom);
        add_row(base + 1, power_sum(2), dom * n2c, dom * n2b);
        add_row(base + 2, power_sum(3), dom * n3c, dom * n3b);
    }
    rep.pass = std::all_of(rep.rows.begin(), rep.rows.end(),
                           [](const MomentRow& r) { return r.pass; });
    return rep;
}

}  // namespace niho
