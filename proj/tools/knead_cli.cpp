// knead: solve vector linear recurrences through kneading determinants.
//
// Reads one JSON recurrence document (path argument or stdin), runs one
// subcommand, writes the result to stdout. JSON for structured reports,
// CSV for per-step sequences; complex numbers are always [re, im] pairs
// with 17 significant digits. Exit codes: 0 ok, 2 schema/usage error,
// 3 computation error, 4 holomorphy hypothesis violated, 5 truncation
// unstable, 6 finite order required.

#include "knead/asymptotics.hpp"
#include "knead/document.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace knead;

std::string fmt(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string fmt(cplx z) {
    return "[" + fmt(z.real()) + "," + fmt(z.imag()) + "]";
}

std::string fmt_series(const TruncatedSeries& s) {
    std::string out = "[";
    for (int n = 0; n <= s.truncation(); ++n) {
        if (n)
            out += ",";
        out += fmt(s.coeff(n));
    }
    return out + "]";
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream file(path);
    if (!file)
        throw SchemaError("cannot read input file: " + path);
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

struct Options {
    std::string input = "-";
    int truncation_override = 0; // 0 = keep the document's value
    int horizon = 40;
    bool horizon_given = false;
    int alpha = 0;
    unsigned beta = 0;
    bool from_initial = false;
};

RecurrenceDocument load(const Options& opt) {
    RecurrenceDocument doc = parse_document(read_input(opt.input));
    if (opt.truncation_override > 0)
        doc.truncation = opt.truncation_override;
    return doc;
}

int cmd_det(const Options& opt) {
    const RecurrenceDocument doc = load(opt);
    const KneadingSystem sys = build_kneading(doc.rec, doc.truncation);
    std::cout << fmt_series(sys.delta) << "\n";
    return 0;
}

int cmd_solve(const Options& opt) {
    const RecurrenceDocument doc = load(opt);
    if (opt.horizon < 0)
        throw SchemaError("--horizon must be non-negative");
    const SolutionPrefix prefix = iterate(doc.rec, doc.initial, opt.horizon);
    const int p = doc.rec.p();
    std::cout << "n";
    for (int a = 1; a <= p; ++a)
        std::cout << ",v" << a << "_re,v" << a << "_im";
    std::cout << "\n";
    for (int n = 0; n <= opt.horizon; ++n) {
        std::cout << n;
        for (int a = 0; a < p; ++a) {
            const cplx v = prefix.values[static_cast<std::size_t>(n)][static_cast<std::size_t>(a)];
            std::cout << "," << fmt(v.real()) << "," << fmt(v.imag());
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_gf(const Options& opt) {
    const RecurrenceDocument doc = load(opt);
    const bool basis_mode = opt.alpha > 0 && opt.beta > 0;
    if (basis_mode == opt.from_initial)
        throw SchemaError("gf needs either --alpha and --beta, or --from-initial");
    const KneadingSystem sys = build_kneading(doc.rec, doc.truncation);
    if (basis_mode) {
        if (opt.alpha > doc.rec.p())
            throw SchemaError("--alpha must lie in 1..p");
        std::cout << fmt_series(generating_function_basis(sys, opt.alpha, opt.beta)) << "\n";
        return 0;
    }
    const GeneratingFunction g = generating_function(sys, doc.initial);
    std::cout << "{\"components\":[";
    for (std::size_t a = 0; a < g.components.size(); ++a) {
        if (a)
            std::cout << ",";
        std::cout << fmt_series(g.components[a]);
    }
    std::cout << "]}\n";
    return 0;
}

int cmd_compare(const Options& opt) {
    const RecurrenceDocument doc = load(opt);
    int horizon = opt.horizon_given ? opt.horizon : doc.truncation - 1;
    if (horizon < 0 || horizon >= doc.truncation)
        throw SchemaError("compare needs 0 <= horizon < truncation");
    const KneadingSystem sys = build_kneading(doc.rec, doc.truncation);
    const GeneratingFunction g = generating_function(sys, doc.initial);
    const SolutionPrefix prefix = iterate(doc.rec, doc.initial, horizon);
    std::cout << "n,max_abs_diff\n";
    for (int n = 0; n <= horizon; ++n) {
        double diff = 0.0;
        for (int a = 0; a < doc.rec.p(); ++a)
            diff = std::max(diff,
                            std::abs(g.components[static_cast<std::size_t>(a)].coeff(n) -
                                     prefix.values[static_cast<std::size_t>(n)][static_cast<std::size_t>(a)]));
        std::cout << n << "," << fmt(diff) << "\n";
    }
    return 0;
}

int cmd_asym(const Options& opt) {
    const RecurrenceDocument doc = load(opt);
    if (opt.horizon < 1)
        throw SchemaError("--horizon must be at least 1");
    const KneadingSystem sys = build_kneading(doc.rec, doc.truncation);
    const std::vector<GeneralizedEigenvalue> evs = dominant_eigenvalues(sys);
    const BinetApproximation approx = binet_coefficients(sys, doc.initial, evs);
    const auto profile = asymptotic_error_profile(doc.rec, doc.initial, approx, opt.horizon);
    std::cout << "{\"eigenvalues\":[";
    for (std::size_t i = 0; i < evs.size(); ++i) {
        if (i)
            std::cout << ",";
        std::cout << "{\"lambda\":" << fmt(evs[i].lambda) << ",\"z_root\":" << fmt(evs[i].z_root)
                  << ",\"multiplicity\":" << evs[i].multiplicity
                  << ",\"residual\":" << fmt(evs[i].residual) << "}";
    }
    std::cout << "],\"coefficients\":[";
    for (std::size_t i = 0; i < approx.coeffs.size(); ++i) {
        if (i)
            std::cout << ",";
        std::cout << "[";
        for (std::size_t j = 0; j < approx.coeffs[i].size(); ++j) {
            if (j)
                std::cout << ",";
            std::cout << "[";
            for (std::size_t a = 0; a < approx.coeffs[i][j].size(); ++a) {
                if (a)
                    std::cout << ",";
                std::cout << fmt(approx.coeffs[i][j][a]);
            }
            std::cout << "]";
        }
        std::cout << "]";
    }
    std::cout << "],\"error_profile\":[";
    for (std::size_t n = 0; n < profile.size(); ++n) {
        if (n)
            std::cout << ",";
        std::cout << "[";
        for (std::size_t a = 0; a < profile[n].size(); ++a) {
            if (a)
                std::cout << ",";
            std::cout << fmt(profile[n][a]);
        }
        std::cout << "]";
    }
    std::cout << "],\"horizon\":" << opt.horizon << "}\n";
    return 0;
}

int cmd_companion_check(const Options& opt) {
    const RecurrenceDocument doc = load(opt);
    const CompanionCheck check = companion_check(doc.rec);
    std::cout << "{\"lhs\":" << fmt_series(check.lhs) << ",\"rhs\":" << fmt_series(check.rhs)
              << ",\"max_abs_diff\":" << fmt(check.max_abs_diff) << "}\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solve vector linear recurrences through kneading determinants"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", opt.input, "JSON recurrence document ('-' for stdin)");
        sub->add_option("--truncation", opt.truncation_override,
                        "series truncation order, overrides the document");
    };

    CLI::App* det = app.add_subcommand("det", "kneading determinant coefficients");
    add_common(det);
    CLI::App* solve = app.add_subcommand("solve", "iterate the recurrence (CSV)");
    add_common(solve);
    solve->add_option("--horizon", opt.horizon, "last step to compute")->capture_default_str();
    CLI::App* gf = app.add_subcommand("gf", "generating function coefficients");
    add_common(gf);
    gf->add_option("--alpha", opt.alpha, "solution component (1-based)");
    gf->add_option("--beta", opt.beta, "basis initial condition (1-based)");
    gf->add_flag("--from-initial", opt.from_initial, "use the document's initial condition");
    CLI::App* compare = app.add_subcommand("compare",
                                           "per-step gap between generating function and iteration (CSV)");
    add_common(compare);
    compare->add_option("--horizon", opt.horizon, "last step to compare (default: truncation-1)");
    CLI::App* asym = app.add_subcommand("asym", "dominant eigenvalues and Binet report");
    add_common(asym);
    asym->add_option("--horizon", opt.horizon, "error profile length")->capture_default_str();
    CLI::App* companion = app.add_subcommand("companion-check",
                                             "companion-matrix vs kneading determinant");
    add_common(companion);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help and friends
        app.exit(e);
        return 2;
    }
    opt.horizon_given = compare->get_option("--horizon")->count() > 0;

    try {
        if (det->parsed())
            return cmd_det(opt);
        if (solve->parsed())
            return cmd_solve(opt);
        if (gf->parsed())
            return cmd_gf(opt);
        if (compare->parsed())
            return cmd_compare(opt);
        if (asym->parsed())
            return cmd_asym(opt);
        return cmd_companion_check(opt);
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const HypothesisViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const TruncationUnstable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const InfiniteOrder& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 6;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
