#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "niho/report.hpp"
#include "niho/sweep.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

struct CommonArgs {
    std::string family;
    std::int64_t p = 2;
    int m = 2;
    std::int64_t s2 = -1, k = -1, t = -1;
    std::string modulus;
    std::string format = "text";
    std::string method = "both";
    std::string out;
    int jobs = 1;
};

void add_field_options(CLI::App* cmd, CommonArgs& args, bool family_required) {
    auto* fam = cmd->add_option("--family", args.family, "code family")
                    ->check(CLI::IsMember({"binary3", "binary4", "pary4"}));
    if (family_required) fam->required();
    cmd->add_option("-p", args.p, "field characteristic");
    cmd->add_option("-m", args.m, "half extension degree (n = 2m)");
    cmd->add_option("--s2", args.s2, "binary3 parameter s2");
    cmd->add_option("--k", args.k, "binary4 parameter k");
    cmd->add_option("--t", args.t, "binary4 / pary4 parameter t");
    cmd->add_option("--modulus", args.modulus,
                    "comma-separated modulus coefficients, constant term first");
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--method", args.method, "enumeration method")
        ->check(CLI::IsMember({"direct", "niho", "both"}));
    cmd->add_option("--out", args.out, "write output to a file instead of stdout");
    cmd->add_option("--jobs", args.jobs, "worker threads for enumerations")
        ->check(CLI::PositiveNumber);
}

std::int64_t max_q_from_env() {
    if (const char* env = std::getenv("NIHO_MAX_Q")) {
        try {
            return std::stoll(env);
        } catch (...) {
            throw niho::ConstraintViolation("NIHO_MAX_Q is not an integer");
        }
    }
    return niho::kDefaultMaxQ;
}

std::optional<std::vector<int>> parse_modulus(const std::string& str) {
    if (str.empty()) return std::nullopt;
    std::vector<int> coeffs;
    std::stringstream ss(str);
    std::string item;
    while (std::getline(ss, item, ','))
        coeffs.push_back(std::stoi(item));
    return coeffs;
}

niho::NihoFamily family_from_args(const CommonArgs& args) {
    if (args.family == "binary3") {
        if (args.s2 < 0) throw niho::ConstraintViolation("binary3 requires --s2");
        return niho::make_family(args.p, args.m, niho::Binary3Params{args.s2});
    }
    if (args.family == "binary4") {
        if (args.k < 0 || args.t < 0)
            throw niho::ConstraintViolation("binary4 requires --k and --t");
        return niho::make_family(args.p, args.m, niho::Binary4Params{args.k, args.t});
    }
    if (args.t < 0) throw niho::ConstraintViolation("pary4 requires --t");
    return niho::make_family(args.p, args.m, niho::PAry4Params{args.t});
}

niho::FamilyVariant variant_from_args(const CommonArgs& args) {
    if (args.family == "binary3") return niho::FamilyVariant::Binary3;
    if (args.family == "binary4") return niho::FamilyVariant::Binary4;
    return niho::FamilyVariant::PAry4;
}

niho::ReportFormat format_from_args(const CommonArgs& args) {
    if (args.format == "json") return niho::ReportFormat::Json;
    if (args.format == "csv") return niho::ReportFormat::Csv;
    return niho::ReportFormat::Text;
}

niho::VerifyMethod method_from_args(const CommonArgs& args) {
    if (args.method == "direct") return niho::VerifyMethod::Direct;
    if (args.method == "niho") return niho::VerifyMethod::Niho;
    return niho::VerifyMethod::Both;
}

int write_output(const std::string& content, const std::string& out) {
    if (out.empty()) {
        std::cout << content;
        return kExitPass;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open " << out << " for writing\n";
        return kExitIo;
    }
    file << content;
    if (!file.good()) {
        std::cerr << "error: short write to " << out << '\n';
        return kExitIo;
    }
    return kExitPass;
}

std::string elem_label(niho::FieldElem x) {
    return x.is_zero() ? "0" : std::to_string(x.log);
}

int cmd_verify(const CommonArgs& args) {
    const niho::FieldCtx ctx =
        niho::build_field(args.p, args.m, parse_modulus(args.modulus), max_q_from_env());
    const niho::NihoFamily fam = family_from_args(args);
    const niho::VerificationReport rep =
        niho::run_verify(ctx, fam, method_from_args(args), args.jobs);
    const int io = write_output(niho::render_report(rep, format_from_args(args)), args.out);
    if (io != kExitPass) return io;
    return rep.pass ? kExitPass : kExitMismatch;
}

int cmd_sweep(const CommonArgs& args) {
    const niho::FieldCtx ctx =
        niho::build_field(args.p, args.m, parse_modulus(args.modulus), max_q_from_env());
    const niho::SweepResult res =
        niho::run_sweep(ctx, variant_from_args(args), method_from_args(args), args.jobs);
    const int io = write_output(niho::render_sweep(res, format_from_args(args)), args.out);
    if (io != kExitPass) return io;
    return res.pass ? kExitPass : kExitMismatch;
}

int cmd_dump(const CommonArgs& args, const std::string& target) {
    const niho::FieldCtx ctx =
        niho::build_field(args.p, args.m, parse_modulus(args.modulus), max_q_from_env());
    std::ostringstream os;
    if (target == "field-tables") {
        os << "# exp p=" << ctx.p() << " m=" << ctx.m() << " q=" << ctx.q() << " modulus=";
        for (std::size_t i = 0; i < ctx.spec().modulus.size(); ++i)
            os << (i ? "," : "") << ctx.spec().modulus[i];
        os << '\n';
        for (std::int64_t e = 0; e < ctx.mul_order(); ++e)
            os << e << ' ' << ctx.exp_table()[e] << '\n';
        os << "zero 0\n";
        os << "# log\n";
        for (std::int64_t v = 0; v < ctx.q(); ++v) {
            os << v << ' ';
            if (ctx.log_table()[v] == niho::FieldElem::kZero)
                os << "zero\n";
            else
                os << ctx.log_table()[v] << '\n';
        }
    } else if (target == "codewords") {
        const niho::NihoFamily fam = family_from_args(args);
        for (const niho::FieldElem a : niho::sum_a_domain(ctx, fam)) {
            for (const niho::FieldElem b : niho::sum_b_domain(ctx)) {
                const niho::Codeword word = niho::trace_codeword(ctx, fam, a, b);
                os << "a=" << elem_label(a) << " b=" << elem_label(b) << ' ';
                if (ctx.p() <= 9) {
                    for (const std::uint8_t c : word.coords) os << int(c);
                } else {
                    for (std::size_t i = 0; i < word.coords.size(); ++i)
                        os << (i ? " " : "") << int(word.coords[i]);
                }
                os << '\n';
            }
        }
    } else if (target == "value-histogram") {
        const niho::NihoFamily fam = family_from_args(args);
        const niho::SumMethod method = args.method == "direct" ? niho::SumMethod::Direct
                                                               : niho::SumMethod::Niho;
        const niho::ValueDist dist = niho::value_distribution(ctx, fam, method, args.jobs);
        for (auto it = dist.entries.rbegin(); it != dist.entries.rend(); ++it)
            os << it->first << ',' << it->second << '\n';
    } else {
        throw niho::ConstraintViolation("unknown dump target: " + target);
    }
    return write_output(os.str(), args.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic codes with Niho exponents: exact verification tool"};
    app.require_subcommand(1);

    CommonArgs vargs, sargs, dargs;
    std::string dump_target;

    CLI::App* verify = app.add_subcommand("verify", "verify one parameter set");
    add_field_options(verify, vargs, true);

    CLI::App* sweep = app.add_subcommand("sweep", "verify all canonical parameters");
    add_field_options(sweep, sargs, true);

    CLI::App* dump = app.add_subcommand("dump", "export tables, codewords or histograms");
    dump->add_option("target", dump_target, "codewords | value-histogram | field-tables")
        ->required()
        ->check(CLI::IsMember({"codewords", "value-histogram", "field-tables"}));
    add_field_options(dump, dargs, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInvalid;
    }

    try {
        if (verify->parsed()) return cmd_verify(vargs);
        if (sweep->parsed()) return cmd_sweep(sargs);
        if (dump->parsed()) {
            if (dump_target != "field-tables" && dargs.family.empty())
                throw niho::ConstraintViolation("dump target requires --family");
            return cmd_dump(dargs, dump_target);
        }
    } catch (const niho::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}
