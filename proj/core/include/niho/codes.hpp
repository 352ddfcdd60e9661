#pragma once

#include <cstdint>
#include <vector>

#include "niho/dists.hpp"
#include "niho/exp_sums.hpp"
#include "niho/field.hpp"
#include "niho/niho_params.hpp"

namespace niho {

/// The cyclic code with zeros theta^d1, theta^d2, described through the
/// generator polynomial g_d1 * g_d2. The dual carries the trace codewords.
struct CodeSpec {
    NihoFamily fam;
    std::int64_t length = 0;     // q - 1
    int dual_dim = 0;            // cl(d1) + cl(d2)
    std::vector<int> generator;  // coefficients over GF(p), low degree first
};

struct Codeword {
    std::vector<std::uint8_t> coords;  // length q - 1
    FieldElem a, b;                    // provenance
};

enum class WordMethod { ViaSums, DirectWords };

/// Minimal polynomial of theta^d over GF(p): the product of (x - theta^(d p^j))
/// over the cyclotomic coset of d. Monic, irreducible, degree cl(d).
std::vector<int> minimal_poly(const FieldCtx& ctx, std::int64_t d);

/// Builds the CodeSpec; throws CosetCollision when d1 and d2 share a coset.
CodeSpec generator_poly(const FieldCtx& ctx, const NihoFamily& fam);

/// Dual codeword for one parameter pair. Coordinates are
/// Tr_n(a theta^(i d1) + b theta^(i d2)); the Binary3 family uses the
/// collapsed form Tr_m(a theta^(i d1)) + Tr_n(b theta^(i d2)) with a in
/// GF(2^m).
Codeword trace_codeword(const FieldCtx& ctx, const NihoFamily& fam, FieldElem a, FieldElem b);

/// The weight map: w = 2^(2m-1) - T/2 for p = 2 and w = (p-1)(q - T)/p for
/// odd p, applied to an exponential-sum value.
std::int64_t weight_from_sum(const NihoFamily& fam, std::int64_t sum_value);

/// Exact weight distribution of the dual code, with each distinct codeword
/// counted once. ViaSums maps a value distribution through the weight map;
/// DirectWords enumerates the p^dual_dim codewords and counts nonzero
/// coordinates. Both agree on every valid family.
WeightDist weight_dist_enumerate(const FieldCtx& ctx, const NihoFamily& fam, WordMethod method,
                                 SumMethod sum_method = SumMethod::Niho, int jobs = 1);

}  // namespace niho
