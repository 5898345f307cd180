// Command-line driver for the curvature verification engine.
//
//   verify-base    --n N --sc RAT
//   verify-bundle  --kind twistor|reflector --n N --t RAT --sc RAT
//                  [--structure 1|2] [--adjoint-mode MODE]
//   solve          --kind ... --n N --t RAT | --variation --n N [--convention C]
//   verify-mixed   --n N --which sphere|hyperbolic
//   full-suite
//
// Rational flags accept "p/q". --json prints the machine-readable report,
// --out FILE writes it to a file. PQK_MODE=exact|float selects the scalar
// (exact is the default; solvers always run exact).
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.

#include "pqk/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <functional>
#include <string>

namespace {

struct OutputOptions {
    bool json = false;
    std::string out_file;
};

int emit(const pqk::ordered_json& j, bool any_failed, const OutputOptions& opt,
         const std::function<void(std::ostream&)>& human)
{
    const std::string text = j.dump(2) + "\n";
    if (!opt.out_file.empty()) {
        std::ofstream f(opt.out_file, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open output file '" << opt.out_file << "'\n";
            return 2;
        }
        f << text;
    }
    if (opt.json)
        std::cout << text;
    else
        human(std::cout);
    return any_failed ? 1 : 0;
}

int emit_report(const pqk::VerificationReport& rep, const OutputOptions& opt)
{
    return emit(rep.to_json(), rep.failed(), opt,
                [&rep](std::ostream& os) { rep.print_human(os); });
}

int emit_suite(const pqk::SuiteReport& rep, const OutputOptions& opt)
{
    return emit(rep.to_json(), rep.failed(), opt,
                [&rep](std::ostream& os) { rep.print_human(os); });
}

bool float_mode()
{
    const char* m = std::getenv("PQK_MODE");
    return m != nullptr && std::string(m) == "float";
}

pqk::Rational parse_rat(const std::string& s)
{
    try {
        return pqk::parse_rational(s);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(std::string("rational flag: ") + e.what());
    }
}

}  // namespace

int main(int argc, char** argv)
{
    using namespace pqk;
    CLI::App app{"exact verification engine for pseudo-sphere bundle curvature"};
    app.require_subcommand(1);

    OutputOptions out;
    app.add_flag("--json", out.json, "print the JSON report to stdout");
    app.add_option("--out", out.out_file, "write the JSON report to a file");

    std::size_t n = 2;
    std::string sc_str = "16", t_str = "1", kind_str = "twistor", which_str = "sphere";
    std::string mode_str = "metric-adjoint", conv_str = "paper";
    int structure = 1;
    bool variation = false;

    auto* base = app.add_subcommand("verify-base", "space-form identities, Ricci forms, Einstein");
    base->add_option("--n", n, "quaternionic dimension parameter (dim = 4n)")->required();
    base->add_option("--sc", sc_str, "scalar curvature (rational, p/q)")->required();

    auto* bun = app.add_subcommand("verify-bundle",
                                   "bundle assembly, Ricci displays, Gray classes");
    bun->add_option("--kind", kind_str, "twistor | reflector")
        ->check(CLI::IsMember({"twistor", "reflector"}))
        ->required();
    bun->add_option("--n", n, "base dimension parameter")->required();
    bun->add_option("--t", t_str, "fiber scale t != 0 (rational)")->required();
    bun->add_option("--sc", sc_str, "scalar curvature (rational)")->required();
    bun->add_option("--structure", structure, "structure index 1 or 2")
        ->check(CLI::IsMember({1, 2}));
    bun->add_option("--adjoint-mode", mode_str, "frame-transpose | metric-adjoint")
        ->check(CLI::IsMember({"frame-transpose", "metric-adjoint"}));

    auto* solve = app.add_subcommand("solve", "critical curvature values and Einstein t-values");
    solve->add_option("--kind", kind_str, "twistor | reflector")
        ->check(CLI::IsMember({"twistor", "reflector"}));
    solve->add_option("--n", n, "dimension parameter")->required();
    solve->add_option("--t", t_str, "fiber scale (rational)");
    solve->add_flag("--variation", variation, "solve the canonical-variation t-values instead");
    solve->add_option("--convention", conv_str, "paper | metric-weighted")
        ->check(CLI::IsMember({"paper", "metric-weighted"}));

    auto* mixed = app.add_subcommand("verify-mixed",
                                     "so(2,1) data, mixed 3-structure axioms, Einstein data");
    mixed->add_option("--n", n, "structure dimension parameter (dim = 4n+3)")->required();
    mixed->add_option("--which", which_str, "sphere | hyperbolic")
        ->check(CLI::IsMember({"sphere", "hyperbolic"}));

    auto* full = app.add_subcommand("full-suite", "every suite over the standard grid");
    full->add_option("--adjoint-mode", mode_str, "frame-transpose | metric-adjoint")
        ->check(CLI::IsMember({"frame-transpose", "metric-adjoint"}));

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const bool use_float = float_mode();
    const AdjointMode mode =
        mode_str == "frame-transpose" ? AdjointMode::frame_transpose : AdjointMode::metric_adjoint;

    try {
        if (base->parsed()) {
            const Rational sc = parse_rat(sc_str);
            return use_float ? emit_report(verify_base<double>(n, to_double(sc)), out)
                             : emit_report(verify_base<Rational>(n, sc), out);
        }
        if (bun->parsed()) {
            const Rational sc = parse_rat(sc_str);
            const Rational t = parse_rat(t_str);
            const BundleKind kind =
                kind_str == "twistor" ? BundleKind::twistor : BundleKind::reflector;
            return use_float
                       ? emit_report(verify_bundle<double>(kind, n, to_double(t), to_double(sc),
                                                           structure, mode),
                                     out)
                       : emit_report(verify_bundle<Rational>(kind, n, t, sc, structure, mode),
                                     out);
        }
        if (solve->parsed()) {
            if (variation) {
                const EinsteinConvention conv = conv_str == "metric-weighted"
                                                    ? EinsteinConvention::metric_weighted
                                                    : EinsteinConvention::paper;
                return emit_report(solve_variation(n, conv), out);
            }
            if (kind_str.empty()) throw CLI::ValidationError("solve: --kind or --variation needed");
            const BundleKind kind =
                kind_str == "twistor" ? BundleKind::twistor : BundleKind::reflector;
            return emit_report(solve_bundle(kind, n, parse_rat(t_str)), out);
        }
        if (mixed->parsed()) {
            const HyperquadricKind which = which_str == "hyperbolic" ? HyperquadricKind::hyperbolic
                                                                     : HyperquadricKind::sphere;
            return use_float ? emit_report(verify_mixed<double>(n, which), out)
                             : emit_report(verify_mixed<Rational>(n, which), out);
        }
        if (full->parsed()) {
            return use_float ? emit_suite(full_suite<double>(mode), out)
                             : emit_suite(full_suite<Rational>(mode), out);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const pqk::VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
