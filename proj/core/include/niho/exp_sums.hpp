#pragma once

#include <cstdint>
#include <vector>

#include "niho/dists.hpp"
#include "niho/field.hpp"
#include "niho/niho_params.hpp"

namespace niho {

enum class SumMethod { Direct, Niho };

/// Exact value of the family's exponential sum at one parameter pair.
/// Binary3 sums (-1)^(Tr_m(a x^(2^m+1)) + Tr_n(b x^d2)) over GF(2^n) and
/// requires a in GF(2^m); Binary4 sums (-1)^(Tr_n(a x^d1 + b x^d2)). For odd
/// p the fiber counts of Tr_n(a x^d1 + b x^d2) are computed; rationality
/// demands that all nonzero fibers agree (IrrationalSum otherwise) and the
/// value is then c_0 - c_1.
std::int64_t char_sum(const FieldCtx& ctx, const NihoFamily& fam, FieldElem a, FieldElem b);

/// Number of unit-circle roots of the family's Niho polynomial, by exhaustive
/// evaluation over the p^m + 1 elements of S.
std::int64_t niho_root_count(const FieldCtx& ctx, const NihoFamily& fam, FieldElem a,
                             FieldElem b);

/// Exact histogram of the exponential sum over the family's full (a, b)
/// domain: GF(2^m) x GF(2^n) for Binary3, GF(q)^2 otherwise. Both methods
/// must produce the same histogram; Niho costs |S| per pair, Direct costs q.
ValueDist value_distribution(const FieldCtx& ctx, const NihoFamily& fam, SumMethod method,
                             int jobs = 1);

/// Monte-Carlo variant for fields beyond full-enumeration range; domain_size
/// is the number of sampled pairs.
ValueDist value_distribution_sampled(const FieldCtx& ctx, const NihoFamily& fam,
                                     SumMethod method, std::int64_t samples,
                                     std::uint64_t seed);

/// Counts pairs (a, b) where the direct sum differs from
/// (niho_root_count - 1) * p^m; zero for every valid family.
std::int64_t count_lemma_mismatches(const FieldCtx& ctx, const NihoFamily& fam, int jobs = 1);

struct MomentRow {
    int id = 0;  // identity number, 1-8
    std::int64_t lhs = 0;
    std::int64_t rhs_closed = 0;
    std::int64_t rhs_brute = 0;
    bool pass = false;
};

struct MomentReport {
    std::vector<MomentRow> rows;
    bool pass = false;
};

/// Power-sum identities for the family: items 1-2 (Binary3), 3-5 (Binary4),
/// 6-8 (PAry4). Left sides come from the value distribution; right sides are
/// computed twice, from the closed N2/N3 formulas and from brute-force
/// counting. Failures are reported, not raised.
MomentReport moment_report(const FieldCtx& ctx, const NihoFamily& fam);
MomentReport moment_report(const FieldCtx& ctx, const NihoFamily& fam, const ValueDist& dist);

/// Parameter domain sizes and element lists used by the enumerations.
std::vector<FieldElem> sum_a_domain(const FieldCtx& ctx, const NihoFamily& fam);
std::vector<FieldElem> sum_b_domain(const FieldCtx& ctx);

}  // namespace niho
