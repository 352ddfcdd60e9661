#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "niho/closed_forms.hpp"
#include "niho/codes.hpp"
#include "niho/exp_sums.hpp"

namespace niho {

enum class VerifyMethod { Direct, Niho, Both };
enum class ReportFormat { Text, Json, Csv };

struct PhaseTimings {
    std::int64_t closed_us = 0;
    std::int64_t enum_values_us = 0;
    std::int64_t enum_weights_us = 0;
    std::int64_t moments_us = 0;
    std::int64_t counts_us = 0;
};

/// Structured pass/fail comparison of the closed forms against the
/// enumeration oracles for one family instance.
struct VerificationReport {
    FieldSpec field;
    NihoFamily fam;

    ValueDist closed_values;
    WeightDist closed_weights;
    std::optional<ValueDist> values_direct;
    std::optional<ValueDist> values_niho;
    WeightDist weights_via_sums;
    WeightDist weights_words;

    MomentReport moments;
    std::int64_t n2_closed = 0, n2_brute = 0;
    std::optional<std::int64_t> n3_closed, n3_brute;

    bool pass = false;
    PhaseTimings timings;
};

VerificationReport run_verify(const FieldCtx& ctx, const NihoFamily& fam,
                              VerifyMethod method = VerifyMethod::Both, int jobs = 1);

std::string report_text(const VerificationReport& rep);
std::string report_json(const VerificationReport& rep);
std::string report_csv(const VerificationReport& rep);
std::string render_report(const VerificationReport& rep, ReportFormat format);

}  // namespace niho
