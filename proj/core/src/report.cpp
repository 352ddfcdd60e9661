#include "niho/report.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"

namespace niho {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_us(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

nlohmann::ordered_json dist_pairs_desc(const std::map<std::int64_t, std::int64_t>& entries) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it)
        arr.push_back({it->first, it->second});
    return arr;
}

std::string modulus_string(const std::vector<int>& modulus) {
    std::ostringstream os;
    for (std::size_t i = 0; i < modulus.size(); ++i) {
        if (i) os << ',';
        os << modulus[i];
    }
    return os.str();
}

void csv_dist(std::ostringstream& os, const char* kind,
              const std::map<std::int64_t, std::int64_t>& entries, const char* source) {
    for (auto it = entries.rbegin(); it != entries.rend(); ++it)
        os << kind << ',' << it->first << ',' << it->second << ',' << source << '\n';
}

}  // namespace

VerificationReport run_verify(const FieldCtx& ctx, const NihoFamily& fam, VerifyMethod method,
                              int jobs) {
    VerificationReport rep;
    rep.field = ctx.spec();
    rep.fam = fam;

    auto t = Clock::now();
    rep.closed_values = closed_value_dist(fam);
    rep.closed_weights = closed_weight_dist(fam);
    rep.timings.closed_us = elapsed_us(t);

    t = Clock::now();
    if (method != VerifyMethod::Niho)
        rep.values_direct = value_distribution(ctx, fam, SumMethod::Direct, jobs);
    if (method != VerifyMethod::Direct)
        rep.values_niho = value_distribution(ctx, fam, SumMethod::Niho, jobs);
    rep.timings.enum_values_us = elapsed_us(t);

    t = Clock::now();
    const ValueDist& for_weights = rep.values_niho ? *rep.values_niho : *rep.values_direct;
    rep.weights_via_sums.length = ctx.q() - 1;
    rep.weights_via_sums.dimension =
        fam.variant == FamilyVariant::Binary3 ? 3 * fam.m : 4 * fam.m;
    for (const auto& [v, f] : for_weights.entries)
        rep.weights_via_sums.entries[weight_from_sum(fam, v)] += f;
    for (const auto& [w, f] : rep.weights_via_sums.entries)
        if (w > 0 && f > 0) {
            rep.weights_via_sums.min_distance = w;
            break;
        }
    rep.weights_words = weight_dist_enumerate(ctx, fam, WordMethod::DirectWords,
                                              SumMethod::Niho, jobs);
    rep.timings.enum_weights_us = elapsed_us(t);

    t = Clock::now();
    rep.moments = moment_report(ctx, fam, for_weights);
    rep.timings.moments_us = elapsed_us(t);

    t = Clock::now();
    rep.n2_closed = n2(fam, CountMethod::Closed);
    rep.n2_brute = n2(fam, CountMethod::Brute, &ctx);
    if (fam.variant != FamilyVariant::Binary3) {
        rep.n3_closed = n3(fam, CountMethod::Closed);
        rep.n3_brute = n3(fam, CountMethod::Brute, &ctx);
    }
    rep.timings.counts_us = elapsed_us(t);

    bool ok = true;
    if (rep.values_direct) ok = ok && rep.values_direct->entries == rep.closed_values.entries;
    if (rep.values_niho) ok = ok && rep.values_niho->entries == rep.closed_values.entries;
    if (rep.values_direct && rep.values_niho)
        ok = ok && *rep.values_direct == *rep.values_niho;
    ok = ok && rep.weights_via_sums == rep.closed_weights;
    ok = ok && rep.weights_words == rep.closed_weights;
    ok = ok && rep.moments.pass;
    ok = ok && rep.n2_closed == rep.n2_brute;
    if (rep.n3_closed) ok = ok && *rep.n3_closed == *rep.n3_brute;
    rep.pass = ok;
    return rep;
}

std::string report_text(const VerificationReport& rep) {
    std::ostringstream os;
    const auto line_dist = [&os](const char* label,
                                 const std::map<std::int64_t, std::int64_t>& entries) {
        os << label << ":";
        for (auto it = entries.rbegin(); it != entries.rend(); ++it)
            os << ' ' << it->first << 'x' << it->second;
        os << '\n';
    };
    os << "family: " << variant_name(rep.fam.variant) << " p=" << rep.fam.p
       << " m=" << rep.fam.m;
    if (rep.fam.variant == FamilyVariant::Binary3) os << " s2=" << rep.fam.s2;
    if (rep.fam.variant == FamilyVariant::Binary4)
        os << " k=" << rep.fam.k << " t=" << rep.fam.t;
    if (rep.fam.variant == FamilyVariant::PAry4) os << " t=" << rep.fam.t;
    os << '\n';
    os << "exponents: s1=" << rep.fam.s1 << " s2=" << rep.fam.s2 << " d1=" << rep.fam.d1
       << " d2=" << rep.fam.d2 << " l=" << rep.fam.l << '\n';
    os << "modulus: " << modulus_string(rep.field.modulus) << '\n';
    os << "nkd: " << rep.closed_weights.length << ',' << rep.closed_weights.dimension << ','
       << rep.closed_weights.min_distance << '\n';
    line_dist("closed values", rep.closed_values.entries);
    if (rep.values_direct) line_dist("direct values", rep.values_direct->entries);
    if (rep.values_niho) line_dist("niho values", rep.values_niho->entries);
    line_dist("closed weights", rep.closed_weights.entries);
    line_dist("via-sums weights", rep.weights_via_sums.entries);
    line_dist("codeword weights", rep.weights_words.entries);
    for (const auto& row : rep.moments.rows)
        os << "moment " << row.id << ": lhs=" << row.lhs << " closed=" << row.rhs_closed
           << " brute=" << row.rhs_brute << ' ' << (row.pass ? "ok" : "MISMATCH") << '\n';
    os << "n2: closed=" << rep.n2_closed << " brute=" << rep.n2_brute << '\n';
    if (rep.n3_closed)
        os << "n3: closed=" << *rep.n3_closed << " brute=" << *rep.n3_brute << '\n';
    os << "result: " << (rep.pass ? "PASS" : "FAIL") << '\n';
    return os.str();
}

std::string report_json(const VerificationReport& rep) {
    nlohmann::ordered_json j;
    j["field"] = {{"p", rep.field.p},
                  {"m", rep.field.m},
                  {"n", rep.field.n},
                  {"q", rep.field.q},
                  {"modulus", rep.field.modulus}};
    nlohmann::ordered_json fam;
    fam["variant"] = variant_name(rep.fam.variant);
    fam["s1"] = rep.fam.s1;
    fam["s2"] = rep.fam.s2;
    fam["d1"] = rep.fam.d1;
    fam["d2"] = rep.fam.d2;
    fam["l"] = rep.fam.l;
    if (rep.fam.variant == FamilyVariant::Binary4) fam["k"] = rep.fam.k;
    if (rep.fam.variant != FamilyVariant::Binary3) fam["t"] = rep.fam.t;
    j["family"] = fam;
    j["closed"] = {{"values", dist_pairs_desc(rep.closed_values.entries)},
                   {"weights", dist_pairs_desc(rep.closed_weights.entries)},
                   {"nkd",
                    {rep.closed_weights.length, rep.closed_weights.dimension,
                     rep.closed_weights.min_distance}}};
    nlohmann::ordered_json en;
    if (rep.values_direct) en["values_direct"] = dist_pairs_desc(rep.values_direct->entries);
    if (rep.values_niho) en["values_niho"] = dist_pairs_desc(rep.values_niho->entries);
    en["weights_via_sums"] = dist_pairs_desc(rep.weights_via_sums.entries);
    en["weights_words"] = dist_pairs_desc(rep.weights_words.entries);
    j["enumerated"] = en;
    nlohmann::ordered_json moments = nlohmann::ordered_json::array();
    for (const auto& row : rep.moments.rows)
        moments.push_back({{"id", row.id},
                           {"lhs", row.lhs},
                           {"rhs_closed", row.rhs_closed},
                           {"rhs_brute", row.rhs_brute},
                           {"pass", row.pass}});
    j["moments"] = moments;
    nlohmann::ordered_json counts;
    counts["n2_closed"] = rep.n2_closed;
    counts["n2_brute"] = rep.n2_brute;
    if (rep.n3_closed) {
        counts["n3_closed"] = *rep.n3_closed;
        counts["n3_brute"] = *rep.n3_brute;
    }
    j["counts"] = counts;
    j["pass"] = rep.pass;
    j["timings"] = {{"closed_us", rep.timings.closed_us},
                    {"enum_values_us", rep.timings.enum_values_us},
                    {"enum_weights_us", rep.timings.enum_weights_us},
                    {"moments_us", rep.timings.moments_us},
                    {"counts_us", rep.timings.counts_us}};
    return j.dump(2) + "\n";
}

std::string report_csv(const VerificationReport& rep) {
    std::ostringstream os;
    os << "kind,value_or_weight,frequency,source\n";
    csv_dist(os, "value", rep.closed_values.entries, "closed");
    if (rep.values_direct) csv_dist(os, "value", rep.values_direct->entries, "direct");
    if (rep.values_niho) csv_dist(os, "value", rep.values_niho->entries, "niho");
    csv_dist(os, "weight", rep.closed_weights.entries, "closed");
    csv_dist(os, "weight", rep.weights_via_sums.entries, "via_sums");
    csv_dist(os, "weight", rep.weights_words.entries, "words");
    return os.str();
}

std::string render_report(const VerificationReport& rep, ReportFormat format) {
    switch (format) {
        case ReportFormat::Text: return report_text(rep);
        case ReportFormat::Json: return report_json(rep);
        case ReportFormat::Csv: return report_csv(rep);
    }
    return {};
}

}  // namespace niho
