#include "niho/sweep.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace niho {
namespace {

std::string params_string(const NihoFamily& fam) {
    std::ostringstream os;
    switch (fam.variant) {
        case FamilyVariant::Binary3: os << "s2=" << fam.s2; break;
        case FamilyVariant::Binary4: os << "k=" << fam.k << ",t=" << fam.t; break;
        case FamilyVariant::PAry4: os << "t=" << fam.t; break;
    }
    return os.str();
}

}  // namespace

std::vector<SweepClass> sweep_classes(FamilyVariant variant, std::int64_t p, int m) {
    std::vector<NihoFamily> valid;
    const auto consider = [&](auto params) {
        try {
            valid.push_back(make_family(p, m, params));
        } catch (const ConstraintViolation&) {
        }
    };
    std::int64_t pm = 1;
    for (int i = 0; i < m; ++i) pm *= p;
    switch (variant) {
        case FamilyVariant::Binary3:
            for (std::int64_t s2 = 1; s2 <= pm / 2 + 1; ++s2) consider(Binary3Params{s2});
            break;
        case FamilyVariant::Binary4:
            for (std::int64_t k = 1; k <= m; ++k)
                for (std::int64_t t = 1; t <= pm + 1; t += 2) consider(Binary4Params{k, t});
            break;
        case FamilyVariant::PAry4:
            for (std::int64_t t = 2; t <= 2 * (pm + 1); t += 4) consider(PAry4Params{t});
            break;
    }

    std::vector<SweepClass> classes;
    for (const NihoFamily& fam : valid) {
        bool merged = false;
        for (SweepClass& cls : classes) {
            if (pairs_equivalent(p, m, {cls.rep.d1, cls.rep.d2}, {fam.d1, fam.d2})) {
                cls.members.push_back(fam);
                merged = true;
                break;
            }
        }
        if (!merged) classes.push_back(SweepClass{fam, {fam}});
    }
    return classes;
}

SweepResult run_sweep(const FieldCtx& ctx, FamilyVariant variant, VerifyMethod method,
                      int jobs) {
    SweepResult res;
    res.field = ctx.spec();
    res.variant = variant;
    const auto classes = sweep_classes(variant, ctx.p(), ctx.m());

    std::set<std::map<std::int64_t, std::int64_t>> distinct;
    bool all_pass = true;
    for (const SweepClass& cls : classes) {
        res.parameter_count += cls.members.size();
        const VerificationReport rep = run_verify(ctx, cls.rep, method, jobs);
        bool members_consistent = true;
        for (const NihoFamily& member : cls.members) {
            // Equivalent parameters must reproduce the same closed forms.
            members_consistent = members_consistent &&
                                 closed_value_dist(member) == rep.closed_values &&
                                 closed_weight_dist(member) == rep.closed_weights;
        }
        SweepRow row;
        row.rep = cls.rep;
        row.member_count = cls.members.size();
        row.nkd[0] = rep.closed_weights.length;
        row.nkd[1] = rep.closed_weights.dimension;
        row.nkd[2] = rep.closed_weights.min_distance;
        row.pass = rep.pass && members_consistent;
        all_pass = all_pass && row.pass;
        distinct.insert(rep.closed_weights.entries);
        res.rows.push_back(row);
    }
    res.distribution_count = distinct.size();
    res.pass = all_pass;
    return res;
}

std::string sweep_text(const SweepResult& res) {
    std::ostringstream os;
    os << "sweep: " << variant_name(res.variant) << " p=" << res.field.p
       << " m=" << res.field.m << '\n';
    if (res.rows.empty()) {
        os << "no valid parameters\n";
        return os.str();
    }
    for (const SweepRow& row : res.rows)
        os << "  " << params_string(row.rep) << " members=" << row.member_count
           << " l=" << row.rep.l << " nkd=" << row.nkd[0] << ',' << row.nkd[1] << ','
           << row.nkd[2] << ' ' << (row.pass ? "pass" : "FAIL") << '\n';
    os << "parameters=" << res.parameter_count << " classes=" << res.rows.size()
       << " distributions=" << res.distribution_count << '\n';
    os << "result: " << (res.pass ? "PASS" : "FAIL") << '\n';
    return os.str();
}

std::string sweep_json(const SweepResult& res) {
    nlohmann::ordered_json j;
    j["field"] = {{"p", res.field.p},
                  {"m", res.field.m},
                  {"n", res.field.n},
                  {"q", res.field.q},
                  {"modulus", res.field.modulus}};
    j["family"] = variant_name(res.variant);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const SweepRow& row : res.rows) {
        nlohmann::ordered_json r;
        r["params"] = params_string(row.rep);
        r["members"] = row.member_count;
        r["l"] = row.rep.l;
        r["nkd"] = {row.nkd[0], row.nkd[1], row.nkd[2]};
        r["pass"] = row.pass;
        rows.push_back(r);
    }
    j["classes"] = rows;
    j["parameters"] = res.parameter_count;
    j["distributions"] = res.distribution_count;
    j["pass"] = res.pass;
    return j.dump(2) + "\n";
}

std::string sweep_csv(const SweepResult& res) {
    std::ostringstream os;
    os << "params,members,l,n,k,d,pass\n";
    for (const SweepRow& row : res.rows)
        os << params_string(row.rep) << ',' << row.member_count << ',' << row.rep.l << ','
           << row.nkd[0] << ',' << row.nkd[1] << ',' << row.nkd[2] << ','
           << (row.pass ? "1" : "0") << '\n';
    return os.str();
}

std::string render_sweep(const SweepResult& res, ReportFormat format) {
    switch (format) {
        case ReportFormat::Text: return sweep_text(res);
        case ReportFormat::Json: return sweep_json(res);
        case ReportFormat::Csv: return sweep_csv(res);
    }
    return {};
}

}  // namespace niho
