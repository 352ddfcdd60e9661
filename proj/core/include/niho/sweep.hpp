#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "niho/report.hpp"

namespace niho {

/// One equivalence class of parameters under pairs_equivalent. The first
/// canonical parameter found is the representative.
struct SweepClass {
    NihoFamily rep;
    std::vector<NihoFamily> members;
};

/// Enumerates the canonical parameter range for (p, m) and groups valid
/// parameters into equivalence classes: Binary3 sweeps 1 <= s2 <= 2^(m-1)+1,
/// Binary4 sweeps 1 <= k <= m with odd 1 <= t <= 2^m+1, PAry4 sweeps
/// t = 2 mod 4 with 1 <= t <= 2(p^m+1).
std::vector<SweepClass> sweep_classes(FamilyVariant variant, std::int64_t p, int m);

struct SweepRow {
    NihoFamily rep;
    std::size_t member_count = 0;
    std::int64_t nkd[3] = {0, 0, 0};
    bool pass = false;
};

struct SweepResult {
    FieldSpec field;
    FamilyVariant variant = FamilyVariant::Binary3;
    std::vector<SweepRow> rows;
    std::size_t parameter_count = 0;     // valid canonical parameters
    std::size_t distribution_count = 0;  // distinct closed weight enumerators
    bool pass = false;
};

/// Verifies one representative per class (closed forms vs enumeration) and
/// checks that every member of a class shares the representative's closed
/// distributions.
SweepResult run_sweep(const FieldCtx& ctx, FamilyVariant variant, VerifyMethod method,
                      int jobs = 1);

std::string sweep_text(const SweepResult& res);
std::string sweep_json(const SweepResult& res);
std::string sweep_csv(const SweepResult& res);
std::string render_sweep(const SweepResult& res, ReportFormat format);

}  // namespace niho
