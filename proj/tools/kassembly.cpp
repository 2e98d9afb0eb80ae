// Command-line front end: series expansion, Hochschild tables, kernel
// series, K-theory series assembly, the bar-complex oracle, and the identity
// suite. Exit codes: 0 success, 1 identity failure, 2 input error.

#include "kassembly/kassembly.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace kassembly;

enum class OutputMode { human, tsv, json };

struct CommonSeriesArgs {
    int cutoff = 12;
    bool tsv = false;
    bool json = false;

    OutputMode mode() const {
        if (tsv) return OutputMode::tsv;
        if (json) return OutputMode::json;
        return OutputMode::human;
    }
};

void add_output_flags(CLI::App* cmd, CommonSeriesArgs& args) {
    CLI::Option* t = cmd->add_flag("--tsv", args.tsv, "machine form: degree<TAB>coefficient lines");
    CLI::Option* j = cmd->add_flag("--json", args.json, "machine form: JSON document");
    t->excludes(j);
    j->excludes(t);
}

nlohmann::json series_json(const TruncatedSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int d = 0; d <= s.cutoff(); ++d) coeffs.push_back(to_string(s.coeff(d)));
    return nlohmann::json{{"cutoff", s.cutoff()}, {"coefficients", coeffs}};
}

void print_series(const std::string& label, const TruncatedSeries& s, OutputMode mode) {
    switch (mode) {
        case OutputMode::human:
            std::cout << label << " through degree " << s.cutoff() << ":\n" << to_text(s) << "\n";
            break;
        case OutputMode::tsv: std::cout << to_tsv(s); break;
        case OutputMode::json: {
            nlohmann::json j = series_json(s);
            j["label"] = label;
            std::cout << j.dump(2) << "\n";
            break;
        }
    }
}

struct ModelArgs {
    std::string preset;
    std::string algebra_path;
    std::optional<int> prime;
};

void add_model_options(CLI::App* cmd, ModelArgs& args, bool allow_file) {
    CLI::Option* preset =
        cmd->add_option("--preset", args.preset, "built-in descriptor: ku, ko, ell, mu, mso, msp");
    cmd->add_option("--prime", args.prime, "odd prime for the ell preset")->needs(preset);
    if (allow_file) {
        CLI::Option* file = cmd->add_option("--algebra", args.algebra_path,
                                            "algebra file: {\"generators\": [{\"name\", \"degree\"}]}");
        file->excludes(preset);
        preset->excludes(file);
    }
}

// Model plus the name used in report headers.
std::pair<HHModel, std::string> resolve_model(const ModelArgs& args, int cutoff) {
    if (!args.preset.empty()) {
        SpectrumDescriptor s = preset_descriptor(args.preset, args.prime);
        return {build_hh_model(s, cutoff), s.name};
    }
    if (!args.algebra_path.empty()) {
        FreeGradedAlgebra base = load_algebra(args.algebra_path);
        return {hh_model(base), args.algebra_path};
    }
    throw invalid_descriptor("pass --preset or --algebra");
}

int run_series(const std::string& expr, const CommonSeriesArgs& out) {
    TruncatedSeries s = expand(parse_rational_function(expr), out.cutoff);
    print_series("series of " + expr, s, out.mode());
    return 0;
}

int run_hh(const ModelArgs& model_args, const CommonSeriesArgs& out) {
    auto [model, name] = resolve_model(model_args, out.cutoff);
    std::vector<DegreeRow> rows = degree_table(model, out.cutoff);
    switch (out.mode()) {
        case OutputMode::human:
            std::printf("Hochschild table for %s through degree %d\n", name.c_str(), out.cutoff);
            std::printf("%6s  %6s  %4s  %4s  %7s\n", "degree", "hh-dim", "ker", "im", "de Rham");
            for (const auto& r : rows)
                std::printf("%6d  %6d  %4d  %4d  %7d\n", r.degree, r.hh_dim, r.kernel_dim, r.im_dim,
                            r.derham_dim);
            break;
        case OutputMode::tsv: std::cout << degree_table_tsv(rows); break;
        case OutputMode::json: {
            nlohmann::json jrows = nlohmann::json::array();
            for (const auto& r : rows)
                jrows.push_back({{"degree", r.degree},
                                 {"hh_dim", r.hh_dim},
                                 {"kernel_dim", r.kernel_dim},
                                 {"im_dim", r.im_dim},
                                 {"derham_dim", r.derham_dim}});
            std::cout << nlohmann::json{{"name", name}, {"cutoff", out.cutoff}, {"rows", jrows}}.dump(2)
                      << "\n";
            break;
        }
    }
    return 0;
}

int run_kernel(const ModelArgs& model_args, const CommonSeriesArgs& out) {
    auto [model, name] = resolve_model(model_args, out.cutoff);
    TruncatedSeries ker = kernel_series(model, out.cutoff);
    print_series("kernel series of the " + name + " model", ker, out.mode());
    return 0;
}

int run_ktheory(const ModelArgs& model_args, bool periodic, bool fixed_points,
                const CommonSeriesArgs& out) {
    if (model_args.preset.empty()) throw invalid_descriptor("ktheory needs --preset");
    SpectrumDescriptor s = preset_descriptor(model_args.preset, model_args.prime);
    if (periodic) {
        print_series("periodic K-theory series of " + s.name, k_periodic_series(s, out.cutoff),
                     out.mode());
        return 0;
    }
    if (fixed_points) {
        AnnotatedSeries fixed = k_fixed_points_series(s, out.cutoff);
        if (out.mode() == OutputMode::json) {
            nlohmann::json j = series_json(fixed.series);
            j["label"] = "fixed-points K-theory series of " + s.name;
            j["annotation"] = fixed.annotation;
            std::cout << j.dump(2) << "\n";
        } else {
            print_series("fixed-points K-theory series of " + s.name, fixed.series, out.mode());
            if (out.mode() == OutputMode::human)
                std::cout << "note: " << fixed.annotation << "\n";
        }
        return 0;
    }
    KSeriesReport rep = k_series(s, out.cutoff);
    switch (out.mode()) {
        case OutputMode::human:
            std::cout << "K-theory series of " << rep.name << " through degree " << rep.cutoff
                      << "\n";
            std::cout << "base:     " << to_text(rep.base) << "\n";
            std::cout << "relative: " << to_text(rep.relative) << "\n";
            std::cout << "total:    " << to_text(rep.total) << "\n";
            for (const auto& n : rep.notes) std::cout << "note: " << n << "\n";
            break;
        case OutputMode::tsv: std::cout << to_tsv(rep.total); break;
        case OutputMode::json: {
            nlohmann::json j{{"name", rep.name},
                             {"cutoff", rep.cutoff},
                             {"base", series_json(rep.base)},
                             {"relative", series_json(rep.relative)},
                             {"total", series_json(rep.total)},
                             {"notes", rep.notes}};
            std::cout << j.dump(2) << "\n";
            break;
        }
    }
    return 0;
}

int run_oracle_check(int gen_degree, int max_degree) {
    FreeGradedAlgebra base({GeneratorSpec{"x", gen_degree}});
    OracleReport rep = hh_via_bar(base, max_degree);
    HHModel model = hh_model(base);
    TruncatedSeries closed = hh_series(model, max_degree);

    bool dims_ok = true;
    for (int d = 0; d <= max_degree; ++d)
        if (Rat(rep.homology_dims[static_cast<std::size_t>(d)]) != closed.coeff(d)) dims_ok = false;
    bool ranks_ok = true;
    for (int d = 0; d + 1 <= max_degree; ++d)
        if (rep.induced_b_ranks[static_cast<std::size_t>(d)] != rank(b_matrix(model, d)))
            ranks_ok = false;

    std::printf("bar-complex oracle, generator degree %d, through total degree %d\n", gen_degree,
                max_degree);
    auto line = [](bool ok, const char* what) {
        std::printf("%s  %s\n", ok ? "PASS" : "FAIL", what);
        return ok;
    };
    bool all = true;
    all &= line(rep.identities_hold, "matrix identities b.b = 0, B.B = 0, b.B + B.b = 0");
    all &= line(rep.induced_well_defined, "induced operator well defined on homology");
    all &= line(dims_ok, "homology dimensions match the closed form");
    all &= line(ranks_ok, "induced ranks match the closed-form matrices");
    std::printf("dims:");
    for (int d : rep.homology_dims) std::printf(" %d", d);
    std::printf("\n");
    return all ? 0 : 1;
}

int run_verify(int cutoff) {
    VerifyReport rep = verify_all(cutoff);
    std::cout << format_report(rep);
    return rep.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation of Hochschild kernels and K-theory Poincare series"};
    app.require_subcommand(1);

    std::string series_expr;
    CommonSeriesArgs series_out;
    CLI::App* series_cmd = app.add_subcommand("series", "expand a rational function in t");
    series_cmd->add_option("expression", series_expr, "rational function, e.g. \"t^3/(1-t^2)\"")
        ->required();
    series_cmd->add_option("--cutoff", series_out.cutoff, "highest degree to report")
        ->check(CLI::Range(0, 512));
    add_output_flags(series_cmd, series_out);

    ModelArgs hh_model_args;
    CommonSeriesArgs hh_out;
    CLI::App* hh_cmd = app.add_subcommand("hh", "per-degree Hochschild table of a model");
    add_model_options(hh_cmd, hh_model_args, true);
    hh_cmd->add_option("--cutoff", hh_out.cutoff, "highest degree to report")->check(CLI::Range(0, 64));
    add_output_flags(hh_cmd, hh_out);

    ModelArgs kernel_model_args;
    CommonSeriesArgs kernel_out;
    CLI::App* kernel_cmd = app.add_subcommand("kernel", "kernel series of the degree +1 operator");
    add_model_options(kernel_cmd, kernel_model_args, true);
    kernel_cmd->add_option("--cutoff", kernel_out.cutoff, "highest degree to report")
        ->check(CLI::Range(0, 64));
    add_output_flags(kernel_cmd, kernel_out);

    ModelArgs ktheory_model_args;
    CommonSeriesArgs ktheory_out;
    bool periodic = false;
    bool fixed_points = false;
    CLI::App* ktheory_cmd = app.add_subcommand("ktheory", "assembled K-theory series of a preset");
    add_model_options(ktheory_cmd, ktheory_model_args, false);
    CLI::Option* per = ktheory_cmd->add_flag("--periodic", periodic, "series of the periodic form");
    CLI::Option* fix = ktheory_cmd->add_flag("--fixed-points", fixed_points,
                                             "conjugation-fixed-points variant (ku, ko)");
    per->excludes(fix);
    fix->excludes(per);
    ktheory_cmd->add_option("--cutoff", ktheory_out.cutoff, "highest degree to report")
        ->check(CLI::Range(0, 64));
    add_output_flags(ktheory_cmd, ktheory_out);

    int oracle_gen_degree = 2;
    int oracle_max_degree = 8;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle-check", "brute-force bar complex against the closed form");
    oracle_cmd->add_option("--generator-degree", oracle_gen_degree, "polynomial generator degree")
        ->check(CLI::IsMember({2, 4, 6}));
    oracle_cmd->add_option("--max-degree", oracle_max_degree, "highest total degree")
        ->check(CLI::Range(0, 12));

    int verify_cutoff = 12;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the full identity suite");
    verify_cmd->add_option("--cutoff", verify_cutoff, "series cutoff for every check")
        ->check(CLI::Range(0, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*series_cmd) return run_series(series_expr, series_out);
        if (*hh_cmd) return run_hh(hh_model_args, hh_out);
        if (*kernel_cmd) return run_kernel(kernel_model_args, kernel_out);
        if (*ktheory_cmd) return run_ktheory(ktheory_model_args, periodic, fixed_points, ktheory_out);
        if (*oracle_cmd) return run_oracle_check(oracle_gen_degree, oracle_max_degree);
        if (*verify_cmd) return run_verify(verify_cutoff);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "identity failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
