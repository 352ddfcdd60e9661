#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "niho/errors.hpp"

namespace niho {

/// Parameters of a tower GF(p) < GF(p^m) < GF(p^n) with n = 2m.
struct FieldSpec {
    std::int64_t p = 0;
    int m = 0;
    int n = 0;                 // always 2m
    std::int64_t q = 0;        // p^n
    std::vector<int> modulus;  // monic primitive polynomial, coefficients c0..cn (low degree first)
};

/// Field element in discrete-log form relative to the primitive element theta.
/// log == kZero marks the zero element; otherwise log is canonical in [0, q-2].
struct FieldElem {
    static constexpr std::int32_t kZero = -1;

    std::int32_t log = kZero;

    constexpr bool is_zero() const { return log == kZero; }
    static constexpr FieldElem zero() { return {}; }
    friend constexpr bool operator==(FieldElem a, FieldElem b) { return a.log == b.log; }
    friend constexpr bool operator!=(FieldElem a, FieldElem b) { return a.log != b.log; }
};

enum class TraceLevel { Full, Half };

struct PolarParts {
    FieldElem y;  // in GF(2^m)*
    FieldElem z;  // in the unit circle S
};

struct SquareClassResult {
    enum class Kind { Zero, Square, NonSquare };
    Kind kind = Kind::Zero;
    FieldElem root;      // one square root (Square only)
    FieldElem neg_root;  // the other root; equals root when p = 2
};

constexpr std::int64_t kDefaultMaxQ = std::int64_t(1) << 24;

/// Fully tabulated arithmetic context for GF(p^n), n = 2m. Immutable after
/// construction; all operations are pure and safe to share across threads.
class FieldCtx {
  public:
    const FieldSpec& spec() const { return spec_; }
    std::int64_t p() const { return spec_.p; }
    int m() const { return spec_.m; }
    int n() const { return spec_.n; }
    std::int64_t q() const { return spec_.q; }
    std::int64_t pm() const { return pm_; }                  // p^m
    std::int64_t unit_order() const { return pm_ + 1; }      // |S|
    std::int64_t mul_order() const { return spec_.q - 1; }   // |GF(q)*|

    FieldElem one() const { return FieldElem{0}; }
    FieldElem theta() const { return FieldElem{1}; }
    /// theta^(p^m - 1), a generator of the unit circle S.
    FieldElem eta() const { return from_log(pm_ - 1); }

    FieldElem from_log(std::int64_t e) const;
    /// Element from its vector representation packed as sum c_i * p^i.
    FieldElem from_packed(std::uint32_t v) const;
    std::uint32_t packed(FieldElem x) const;

    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;  // throws ZeroInput
    FieldElem div(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    /// a^e for any integer e (reduced mod q-1); 0^e = 0 for e > 0.
    FieldElem pow(FieldElem a, std::int64_t e) const;
    /// x^(p^m), the Frobenius-m conjugation.
    FieldElem conjugate(FieldElem x) const;
    /// Square root in characteristic 2, x^(2^(n-1)).
    FieldElem sqrt_char2(FieldElem x) const;

    int trace(FieldElem x, TraceLevel level) const;
    bool in_subfield(FieldElem x) const;

    /// The p^m + 1 elements of S in the cyclic order eta^0, eta^1, ...
    const std::vector<FieldElem>& unit_circle() const { return unit_circle_; }

    // Raw tables for enumeration loops. exp_table has q-1 entries (log ->
    // packed); log_table has q entries (packed -> log, kZero for 0);
    // trace_full_table/trace_half_table are packed-indexed, half is 0xFF
    // outside GF(p^m).
    const std::uint32_t* exp_table() const { return exp_.data(); }
    const std::int32_t* log_table() const { return log_.data(); }
    const std::uint8_t* trace_full_table() const { return tr_full_.data(); }
    const std::uint8_t* trace_half_table() const { return tr_half_.data(); }

    /// Packed addition of vector representations.
    std::uint32_t add_packed(std::uint32_t u, std::uint32_t v) const;

  private:
    friend FieldCtx build_field(std::int64_t, int, const std::optional<std::vector<int>>&,
                                std::int64_t);

    FieldSpec spec_;
    std::int64_t pm_ = 0;
    std::vector<std::uint32_t> exp_;
    std::vector<std::int32_t> log_;
    std::vector<std::uint8_t> tr_full_;
    std::vector<std::uint8_t> tr_half_;
    std::vector<std::uint8_t> subfield_;
    std::vector<FieldElem> unit_circle_;
    std::vector<std::uint32_t> add_;  // q*q packed-add table, built for odd p with q <= 1024
};

/// Builds the field context. When modulus is omitted the lexicographically
/// smallest primitive polynomial of degree 2m over GF(p) is selected (smallest
/// when coefficients are read as a base-p integer, highest degree most
/// significant). Throws NonPrimeModulus, NotPrimitive or SizeLimit.
FieldCtx build_field(std::int64_t p, int m,
                     const std::optional<std::vector<int>>& modulus = std::nullopt,
                     std::int64_t max_q = kDefaultMaxQ);

/// Absolute trace; Half computes the trace of GF(p^m) over GF(p) and throws
/// NotInSubfield when x lies outside GF(p^m).
int trace_abs(const FieldCtx& ctx, FieldElem x, TraceLevel level);

FieldElem conjugate(const FieldCtx& ctx, FieldElem x);

/// Unique factorization x = y*z with y in GF(2^m)* and z in S. Only defined
/// in characteristic 2 (odd p has a two-fold cover instead; use square_class).
PolarParts polar_decompose(const FieldCtx& ctx, FieldElem x);

/// Square/nonsquare classification by log parity for odd p, with the root
/// pair +-x^(1/2). For p = 2 every element is a square with a unique root.
SquareClassResult square_class(const FieldCtx& ctx, FieldElem x);

}  // namespace niho
