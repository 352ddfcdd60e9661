#include "niho/field.hpp"

#include <algorithm>
#include <string>

namespace niho {
namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t ipow_checked(std::int64_t base, int e, std::int64_t limit) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > limit / base) return limit + 1;
        r *= base;
    }
    return r;
}

std::uint32_t pack_digits(const std::vector<int>& digits, std::int64_t p) {
    std::uint32_t v = 0;
    for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i)
        v = static_cast<std::uint32_t>(v * p + digits[i]);
    return v;
}

// One multiplication by x modulo the monic polynomial f (coefficients c0..cn).
void mul_by_x(std::vector<int>& digits, const std::vector<int>& f, std::int64_t p) {
    const int n = static_cast<int>(digits.size());
    const int carry = digits[n - 1];
    for (int i = n - 1; i > 0; --i) digits[i] = digits[i - 1];
    digits[0] = 0;
    if (carry != 0) {
        // x^n = -(c0 + c1 x + ... + c_{n-1} x^{n-1})
        for (int i = 0; i < n; ++i) {
            std::int64_t v = digits[i] - std::int64_t(carry) * f[i];
            v %= p;
            if (v < 0) v += p;
            digits[i] = static_cast<int>(v);
        }
    }
}

// Attempts to tabulate powers of x modulo f. Succeeds iff x generates the
// full multiplicative group, i.e. f is primitive.
bool try_build_tables(const std::vector<int>& f, std::int64_t p, std::int64_t q, int n,
                      std::vector<std::uint32_t>& exp, std::vector<std::int32_t>& log) {
    exp.assign(static_cast<std::size_t>(q - 1), 0);
    log.assign(static_cast<std::size_t>(q), FieldElem::kZero);
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    cur[0] = 1;
    for (std::int64_t step = 0; step < q - 1; ++step) {
        const std::uint32_t v = pack_digits(cur, p);
        if (v == 0) return false;
        if (v == 1 && step > 0) return false;  // period shorter than q-1
        if (log[v] != FieldElem::kZero) return false;
        exp[static_cast<std::size_t>(step)] = v;
        log[v] = static_cast<std::int32_t>(step);
        mul_by_x(cur, f, p);
    }
    return pack_digits(cur, p) == 1;  // x^(q-1) must close the cycle
}

}  // namespace

FieldElem FieldCtx::from_log(std::int64_t e) const {
    const std::int64_t M = mul_order();
    e %= M;
    if (e < 0) e += M;
    return FieldElem{static_cast<std::int32_t>(e)};
}

FieldElem FieldCtx::from_packed(std::uint32_t v) const {
    return FieldElem{log_[v]};
}

std::uint32_t FieldCtx::packed(FieldElem x) const {
    return x.is_zero() ? 0u : exp_[static_cast<std::size_t>(x.log)];
}

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
    if (a.is_zero() || b.is_zero()) return FieldElem::zero();
    std::int64_t e = std::int64_t(a.log) + b.log;
    const std::int64_t M = mul_order();
    if (e >= M) e -= M;
    return FieldElem{static_cast<std::int32_t>(e)};
}

FieldElem FieldCtx::inv(FieldElem a) const {
    if (a.is_zero()) throw ZeroInput("inverse of zero");
    return a.log == 0 ? a : FieldElem{static_cast<std::int32_t>(mul_order() - a.log)};
}

FieldElem FieldCtx::div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

FieldElem FieldCtx::neg(FieldElem a) const {
    if (spec_.p == 2 || a.is_zero()) return a;
    const std::int64_t half = mul_order() / 2;  // theta^((q-1)/2) = -1
    return from_log(a.log + half);
}

std::uint32_t FieldCtx::add_packed(std::uint32_t u, std::uint32_t v) const {
    if (spec_.p == 2) return u ^ v;
    if (!add_.empty()) return add_[static_cast<std::size_t>(u) * spec_.q + v];
    std::uint32_t out = 0, mult = 1;
    const auto p = static_cast<std::uint32_t>(spec_.p);
    while (u != 0 || v != 0) {
        out += mult * ((u % p + v % p) % p);
        u /= p;
        v /= p;
        mult *= p;
    }
    return out;
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
    return from_packed(add_packed(packed(a), packed(b)));
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldCtx::pow(FieldElem a, std::int64_t e) const {
    const std::int64_t M = mul_order();
    if (a.is_zero()) {
        if (e > 0) return FieldElem::zero();
        if (e == 0) return one();
        throw ZeroInput("negative power of zero");
    }
    e %= M;
    if (e < 0) e += M;
    return from_log(a.log * e);
}

FieldElem FieldCtx::conjugate(FieldElem x) const {
    if (x.is_zero()) return x;
    return from_log(std::int64_t(x.log) * pm_);
}

FieldElem FieldCtx::sqrt_char2(FieldElem x) const {
    if (spec_.p != 2) throw OddCharacteristic("sqrt_char2 requires p = 2");
    if (x.is_zero()) return x;
    // q-1 is odd, so doubling the log is invertible; x^(2^(n-1)) halves it.
    const std::int64_t M = mul_order();
    return FieldElem{static_cast<std::int32_t>(x.log % 2 == 0 ? x.log / 2 : (x.log + M) / 2)};
}

int FieldCtx::trace(FieldElem x, TraceLevel level) const {
    const std::uint32_t v = packed(x);
    if (level == TraceLevel::Full) return tr_full_[v];
    const std::uint8_t t = tr_half_[v];
    if (t == 0xFF) throw NotInSubfield("half trace of an element outside GF(p^m)");
    return t;
}

bool FieldCtx::in_subfield(FieldElem x) const { return subfield_[packed(x)] != 0; }

FieldCtx build_field(std::int64_t p, int m, const std::optional<std::vector<int>>& modulus,
                     std::int64_t max_q) {
    if (!is_prime(p)) throw NonPrimeModulus("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw ConstraintViolation("m must be positive");
    const int n = 2 * m;
    const std::int64_t q = ipow_checked(p, n, max_q);
    if (q > max_q)
        throw SizeLimit("q = p^(2m) exceeds the table bound " + std::to_string(max_q));

    FieldCtx ctx;
    ctx.spec_.p = p;
    ctx.spec_.m = m;
    ctx.spec_.n = n;
    ctx.spec_.q = q;
    ctx.pm_ = 1;
    for (int i = 0; i < m; ++i) ctx.pm_ *= p;

    if (modulus) {
        const auto& f = *modulus;
        if (static_cast<int>(f.size()) != n + 1 || f[n] != 1)
            throw NotPrimitive("modulus must be monic of degree 2m");
        for (int c : f)
            if (c < 0 || c >= p) throw NotPrimitive("modulus coefficients must lie in [0, p)");
        if (!try_build_tables(f, p, q, n, ctx.exp_, ctx.log_))
            throw NotPrimitive("supplied modulus is not primitive over GF(p)");
        ctx.spec_.modulus = f;
    } else {
        std::vector<int> f(static_cast<std::size_t>(n + 1), 0);
        f[n] = 1;
        bool found = false;
        for (std::int64_t low = 1; low < q && !found; ++low) {
            std::int64_t v = low;
            for (int i = 0; i < n; ++i) {
                f[i] = static_cast<int>(v % p);
                v /= p;
            }
            if (f[0] == 0) continue;  // x would divide f
            found = try_build_tables(f, p, q, n, ctx.exp_, ctx.log_);
        }
        if (!found) throw NotPrimitive("no primitive polynomial found");  // unreachable
        ctx.spec_.modulus = f;
    }

    const std::int64_t M = q - 1;
    const std::int64_t pm = ctx.pm_;

    // Packed-add table for odd characteristic at desk scale.
    if (p != 2 && q <= 1024) {
        ctx.add_.assign(static_cast<std::size_t>(q) * q, 0);
        for (std::int64_t u = 0; u < q; ++u)
            for (std::int64_t v = 0; v < q; ++v) {
                std::uint32_t out = 0, mult = 1;
                std::int64_t uu = u, vv = v;
                while (uu != 0 || vv != 0) {
                    out += mult * static_cast<std::uint32_t>((uu % p + vv % p) % p);
                    uu /= p;
                    vv /= p;
                    mult *= static_cast<std::uint32_t>(p);
                }
                ctx.add_[static_cast<std::size_t>(u) * q + v] = out;
            }
    }

    // Tr(x^i) for the power basis; the full trace is then linear in the digits.
    std::vector<int> tr_basis(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        std::uint32_t acc = 0;
        std::int64_t e = i;
        for (int j = 0; j < n; ++j) {
            acc = ctx.add_packed(acc, ctx.exp_[static_cast<std::size_t>(e)]);
            e = (e * p) % M;
        }
        if (acc >= static_cast<std::uint32_t>(p))
            throw Error("trace basis fell outside GF(p)");  // defect guard
        tr_basis[i] = static_cast<int>(acc);
    }
    ctx.tr_full_.assign(static_cast<std::size_t>(q), 0);
    for (std::int64_t v = 0; v < q; ++v) {
        std::int64_t acc = 0, vv = v;
        for (int i = 0; i < n && vv != 0; ++i) {
            acc += (vv % p) * tr_basis[i];
            vv /= p;
        }
        ctx.tr_full_[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(acc % p);
    }

    // GF(p^m) = fixed points of x -> x^(p^m); nonzero members have logs
    // divisible by p^m + 1.
    ctx.subfield_.assign(static_cast<std::size_t>(q), 0);
    ctx.tr_half_.assign(static_cast<std::size_t>(q), 0xFF);
    ctx.subfield_[0] = 1;
    ctx.tr_half_[0] = 0;
    for (std::int64_t j = 0; j < pm - 1; ++j) {
        const std::int64_t e = j * (pm + 1);
        const std::uint32_t v = ctx.exp_[static_cast<std::size_t>(e)];
        ctx.subfield_[v] = 1;
        std::uint32_t acc = 0;
        std::int64_t ee = e;
        for (int jj = 0; jj < m; ++jj) {
            acc = ctx.add_packed(acc, ctx.exp_[static_cast<std::size_t>(ee)]);
            ee = (ee * p) % M;
        }
        ctx.tr_half_[v] = static_cast<std::uint8_t>(acc);
    }

    ctx.unit_circle_.reserve(static_cast<std::size_t>(pm + 1));
    for (std::int64_t j = 0; j <= pm; ++j)
        ctx.unit_circle_.push_back(ctx.from_log(j * (pm - 1)));

    return ctx;
}

int trace_abs(const FieldCtx& ctx, FieldElem x, TraceLevel level) { return ctx.trace(x, level); }

FieldElem conjugate(const FieldCtx& ctx, FieldElem x) { return ctx.conjugate(x); }

PolarParts polar_decompose(const FieldCtx& ctx, FieldElem x) {
    if (ctx.p() != 2)
        throw OddCharacteristic("polar decomposition only exists for p = 2");
    if (x.is_zero()) throw ZeroInput("polar decomposition of zero");
    // x*conj(x) = y^2, so y is the square root of the norm.
    const FieldElem norm = ctx.mul(x, ctx.conjugate(x));
    const FieldElem y = ctx.sqrt_char2(norm);
    return PolarParts{y, ctx.div(x, y)};
}

SquareClassResult square_class(const FieldCtx& ctx, FieldElem x) {
    SquareClassResult r;
    if (x.is_zero()) {
        r.kind = SquareClassResult::Kind::Zero;
        return r;
    }
    if (ctx.p() == 2) {
        r.kind = SquareClassResult::Kind::Square;
        r.root = ctx.sqrt_char2(x);
        r.neg_root = r.root;
        return r;
    }
    if (x.log % 2 != 0) {
        r.kind = SquareClassResult::Kind::NonSquare;
        return r;
    }
    r.kind = SquareClassResult::Kind::Square;
    r.root = FieldElem{static_cast<std::int32_t>(x.log / 2)};
    r.neg_root = ctx.neg(r.root);
    return r;
}

}  // namespace niho
