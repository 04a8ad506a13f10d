// sp2 — classify/power 2x2 unit-determinant transfer matrices via the
// rotation-squeeze-Wigner similarity form, sweep laser cavities and
// two-medium multilayers to CSV, and cross-check closed-form powers
// against brute force.
//
// Exit codes: 0 ok, 2 usage/parse, 3 domain validation, 4 verification
// failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sp2/cavity.hpp"
#include "sp2/decompose.hpp"
#include "sp2/json_io.hpp"
#include "sp2/mat2.hpp"
#include "sp2/multilayer.hpp"
#include "sp2/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;

struct GlobalOpts {
    sp2::Tolerances tol;
    std::string output_path;
    bool degrees = false;
};

struct SweepSpec {
    std::string name;
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;

    double at(int i) const {
        return start + (stop - start) * static_cast<double>(i) /
                           static_cast<double>(steps - 1);
    }
};

// "name=start:stop:steps"
SweepSpec parse_sweep(const std::string& text) {
    SweepSpec s;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("sweep", "expected name=start:stop:steps");
    s.name = text.substr(0, eq);
    const std::string rest = text.substr(eq + 1);
    char colon1 = 0, colon2 = 0;
    std::istringstream in(rest);
    if (!(in >> s.start >> colon1 >> s.stop >> colon2 >> s.steps) || colon1 != ':' ||
        colon2 != ':' || !in.eof())
        throw CLI::ValidationError("sweep", "expected name=start:stop:steps");
    if (s.steps < 2) throw CLI::ValidationError("sweep", "steps must be >= 2");
    if (s.start == s.stop) throw CLI::ValidationError("sweep", "start must differ from stop");
    return s;
}

std::string read_input(const std::string& arg) {
    if (arg != "-") return arg;
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

void emit(const GlobalOpts& g, const std::string& payload) {
    if (g.output_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(g.output_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file " + g.output_path);
    out << payload;
}

double maybe_degrees(const GlobalOpts& g, double radians) {
    return g.degrees ? radians * (180.0 / M_PI) : radians;
}

// The Wigner parameter is an angle only on the elliptic branch.
double display_param(const GlobalOpts& g, const sp2::WignerClass& w) {
    return w.kind == sp2::WignerKind::Elliptic ? maybe_degrees(g, w.param) : w.param;
}

std::string decomposition_display_json(const GlobalOpts& g, const sp2::Decomposition& d) {
    sp2::Decomposition out = d;
    out.delta = maybe_degrees(g, d.delta);
    out.wigner.param = display_param(g, d.wigner);
    return sp2::io::decomposition_json(out);
}

int cmd_classify(const GlobalOpts& g, const std::string& input) {
    const sp2::Mat2 m = sp2::io::parse_matrix(read_input(input), g.tol);
    const sp2::Decomposition d = sp2::decompose(m, g.tol);
    emit(g, decomposition_display_json(g, d) + "\n");
    return kExitOk;
}

int cmd_power(const GlobalOpts& g, const std::string& input, std::int64_t n,
              bool verify) {
    const sp2::Mat2 m = sp2::io::parse_matrix(read_input(input), g.tol);
    const sp2::Mat2 p = sp2::matrix_power(m, n, g.tol);
    if (!verify) {
        emit(g, sp2::io::matrix_json(p) + "\n");
        return kExitOk;
    }
    if (n > 1000000 || n < -1000000) {
        std::cerr << "sp2 power: --verify caps |n| at 1e6\n";
        return kExitUsage;
    }
    const sp2::Mat2 brute = n >= 0 ? sp2::oracle::brute_power(m, n)
                                   : sp2::oracle::brute_power(sp2::inverse(m), -n);
    const double scale = std::fmax(sp2::max_abs(p), sp2::max_abs(brute));
    const auto rep = sp2::oracle::compare(p, brute, 1e-8, scale > 1e6 ? 1e-6 : 1e-9);
    emit(g, "{\"matrix\": " + sp2::io::matrix_json(p) +
                ", \"verify\": " + sp2::io::comparison_report_json(rep) + "}\n");
    return rep.passed ? kExitOk : kExitVerify;
}

std::string cavity_row(const GlobalOpts& g, const sp2::cavity::NormalizedCavity& n,
                       std::int64_t cycles) {
    using sp2::io::format_number;
    const sp2::Decomposition d = sp2::cavity::cavity_decompose(n, g.tol);
    const sp2::Mat2 m = sp2::cavity::n_cycles(n, cycles, g.tol);
    std::string row = format_number(n.a) + "," + format_number(n.b) + "," +
                      (sp2::cavity::stability(n) ? "true" : "false") + "," +
                      format_number(display_param(g, d.wigner)) + "," +
                      format_number(d.eta) + "," +
                      format_number(maybe_degrees(g, d.delta)) + "," +
                      std::to_string(cycles);
    for (double v : {m.a, m.b, m.c, m.d}) row += "," + format_number(v);
    return row + "\n";
}

int cmd_cavity(const GlobalOpts& g, std::optional<double> a, std::optional<double> b,
               std::optional<double> radius, std::optional<double> sep,
               std::optional<double> offset, std::int64_t cycles,
               const std::string& sweep_text) {
    const bool normalized = a.has_value() || b.has_value();
    const bool physical = radius.has_value() || sep.has_value() || offset.has_value();
    if (normalized == physical) {
        std::cerr << "sp2 cavity: give either --a/--b or --R/--s/--d\n";
        return kExitUsage;
    }

    auto point = [&](double pa, double pb) {
        return sp2::cavity::NormalizedCavity::make(pa, pb);
    };
    auto physical_point = [&](double pr, double ps, double pd) {
        return sp2::cavity::NormalizedCavity::from_spec(
            sp2::cavity::CavitySpec::make(pr, ps, pd));
    };

    std::string csv = "a,b,stable,theta_star,eta,delta,N,m11,m12,m21,m22\n";
    if (sweep_text.empty()) {
        const auto n = normalized ? point(a.value_or(0.0), b.value_or(1.0))
                                  : physical_point(radius.value_or(1.0),
                                                   sep.value_or(1.0),
                                                   offset.value_or(0.0));
        csv += cavity_row(g, n, cycles);
        emit(g, csv);
        return kExitOk;
    }

    const SweepSpec sweep = parse_sweep(sweep_text);
    const bool norm_param = sweep.name == "a" || sweep.name == "b";
    const bool phys_param =
        sweep.name == "R" || sweep.name == "s" || sweep.name == "d";
    if (!norm_param && !phys_param) {
        std::cerr << "sp2 cavity: unknown sweep parameter " << sweep.name << "\n";
        return kExitUsage;
    }
    if (norm_param != normalized) {
        std::cerr << "sp2 cavity: sweep parameter does not match the input mode\n";
        return kExitUsage;
    }
    for (int i = 0; i < sweep.steps; ++i) {
        const double v = sweep.at(i);
        sp2::cavity::NormalizedCavity n{0.0, 0.0};
        if (normalized) {
            n = point(sweep.name == "a" ? v : a.value_or(0.0),
                      sweep.name == "b" ? v : b.value_or(1.0));
        } else {
            n = physical_point(sweep.name == "R" ? v : radius.value_or(1.0),
                               sweep.name == "s" ? v : sep.value_or(1.0),
                               sweep.name == "d" ? v : offset.value_or(0.0));
        }
        csv += cavity_row(g, n, cycles);
    }
    emit(g, csv);
    return kExitOk;
}

std::string stack_row(const GlobalOpts& g, const sp2::multilayer::LayerCycle& c,
                      std::int64_t cycles) {
    using sp2::io::format_number;
    const sp2::Mat2 m = sp2::multilayer::cycle_matrix(c, g.tol);
    // decompose() handles the negative-trace half of the gap regions that
    // the raw Wigner factor rejects; sigma is its squeeze parameter.
    const sp2::Decomposition d = sp2::decompose(m, g.tol);
    const sp2::Mat2 p = sp2::multilayer::stack_power(c, cycles, g.tol);
    std::string row = format_number(c.boundary.r) + "," +
                      format_number(maybe_degrees(g, c.alpha1)) + "," +
                      format_number(maybe_degrees(g, c.alpha2)) + "," +
                      format_number(sp2::trace(m)) + "," +
                      sp2::to_string(d.wigner.kind) + "," +
                      format_number(display_param(g, d.wigner)) + "," +
                      format_number(d.eta) + "," +
                      format_number(maybe_degrees(g, d.delta)) + "," +
                      std::to_string(cycles);
    for (double v : {p.a, p.b, p.c, p.d}) row += "," + format_number(v);
    return row + "\n";
}

int cmd_stack(const GlobalOpts& g, double r, std::optional<double> t, double alpha1,
              double alpha2, std::int64_t cycles, const std::string& sweep_text) {
    auto boundary = [](double br, std::optional<double> bt) {
        // With t omitted, complete the lossless pair.
        const double tt = bt ? *bt : std::sqrt(1.0 - br * br);
        return sp2::multilayer::BoundaryCoeffs::make(br, tt);
    };

    std::string csv = "r,alpha1,alpha2,trace,class,param,sigma,delta,N,m11,m12,m21,m22\n";
    if (sweep_text.empty()) {
        const auto c = sp2::multilayer::LayerCycle::make(boundary(r, t), alpha1, alpha2);
        csv += stack_row(g, c, cycles);
        emit(g, csv);
        return kExitOk;
    }

    const SweepSpec sweep = parse_sweep(sweep_text);
    if (sweep.name != "r" && sweep.name != "alpha1" && sweep.name != "alpha2") {
        std::cerr << "sp2 stack: sweep parameter must be r, alpha1 or alpha2\n";
        return kExitUsage;
    }
    for (int i = 0; i < sweep.steps; ++i) {
        const double v = sweep.at(i);
        // Sweeping r re-derives t so the interface stays lossless.
        const auto bc = sweep.name == "r" ? boundary(v, std::nullopt) : boundary(r, t);
        const auto c = sp2::multilayer::LayerCycle::make(
            bc, sweep.name == "alpha1" ? v : alpha1,
            sweep.name == "alpha2" ? v : alpha2);
        csv += stack_row(g, c, cycles);
    }
    emit(g, csv);
    return kExitOk;
}

int cmd_verify(const GlobalOpts& g, std::int64_t trials, std::uint64_t seed,
               double eta_max, const std::string& n_list_text) {
    std::vector<std::int64_t> ns;
    std::istringstream in(n_list_text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            ns.push_back(std::stoll(item));
        } catch (const std::exception&) {
            std::cerr << "sp2 verify: bad --n-list entry '" << item << "'\n";
            return kExitUsage;
        }
        if (ns.back() < 0 || ns.back() > 1000000) {
            std::cerr << "sp2 verify: exponents must lie in [0, 1e6]\n";
            return kExitUsage;
        }
    }
    if (ns.empty() || trials <= 0) {
        std::cerr << "sp2 verify: need positive --trials and a nonempty --n-list\n";
        return kExitUsage;
    }
    const sp2::oracle::Sp2Sampler sampler(seed, eta_max);
    const auto rep = sp2::oracle::verify_powers(sampler, trials, ns.data(), ns.size(),
                                                1e-8, 1e-9, 1e-6, g.tol);
    emit(g, sp2::io::comparison_report_json(rep) + "\n");
    return rep.passed ? kExitOk : kExitVerify;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wigner similarity decomposition of ABCD matrices and "
                 "closed-form evaluation of periodic optical systems"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--det-tol", g.tol.det_tol, "determinant validation tolerance");
    app.add_option("--class-tol", g.tol.class_tol, "trichotomy classification tolerance");
    app.add_option("--output", g.output_path, "write the payload to a file instead of stdout");
    app.add_flag("--degrees", g.degrees, "display angles in degrees (input stays radians)");

    // classify
    auto* classify = app.add_subcommand(
        "classify", "decompose a matrix JSON {\"a\":..,\"b\":..,\"c\":..,\"d\":..}");
    std::string classify_input;
    classify->add_option("matrix", classify_input, "matrix JSON ('-' reads stdin)")
        ->required();

    // power
    auto* power = app.add_subcommand("power", "closed-form matrix power");
    std::string power_input;
    std::int64_t power_n = 1;
    bool power_verify = false;
    power->add_option("matrix", power_input, "matrix JSON ('-' reads stdin)")->required();
    power->add_option("--n", power_n, "exponent")->required();
    power->add_flag("--verify", power_verify, "cross-check against brute force");

    // cavity
    auto* cavity = app.add_subcommand("cavity", "laser cavity rows (CSV)");
    std::optional<double> cav_a, cav_b, cav_R, cav_s, cav_d;
    std::int64_t cav_cycles = 1;
    std::string cav_sweep;
    cavity->add_option("--a", cav_a, "normalized start offset d/s");
    cavity->add_option("--b", cav_b, "normalized curvature 2s/R");
    cavity->add_option("--R", cav_R, "mirror radius of curvature");
    cavity->add_option("--s", cav_s, "mirror separation");
    cavity->add_option("--d", cav_d, "cycle start offset from a mirror");
    cavity->add_option("--n-cycles", cav_cycles, "full round trips (default 1)");
    cavity->add_option("--sweep", cav_sweep, "sweep spec name=start:stop:steps");

    // stack
    auto* stack = app.add_subcommand("stack", "two-medium multilayer rows (CSV)");
    double stk_r = 0.0, stk_a1 = 0.0, stk_a2 = 0.0;
    std::optional<double> stk_t;
    std::int64_t stk_cycles = 1;
    std::string stk_sweep;
    stack->add_option("--r", stk_r, "reflection coefficient")->required();
    stack->add_option("--t", stk_t, "transmission coefficient (default sqrt(1-r^2))");
    stack->add_option("--alpha1", stk_a1, "phase 2*k1*d1 in radians");
    stack->add_option("--alpha2", stk_a2, "phase 2*k2*d2 in radians");
    stack->add_option("--n-cycles", stk_cycles, "periods (default 1)");
    stack->add_option("--sweep", stk_sweep, "sweep spec name=start:stop:steps");

    // verify
    auto* verify = app.add_subcommand("verify", "oracle suite: closed form vs brute force");
    std::int64_t ver_trials = 1000;
    std::uint64_t ver_seed = 1;
    double ver_eta_max = 5.0;
    std::string ver_nlist = "3,17,256";
    verify->add_option("--trials", ver_trials, "number of random draws");
    verify->add_option("--seed", ver_seed, "deterministic sampler seed");
    verify->add_option("--eta-max", ver_eta_max, "squeeze range of the draws");
    verify->add_option("--n-list", ver_nlist, "comma-separated exponents");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (classify->parsed()) return cmd_classify(g, classify_input);
        if (power->parsed()) return cmd_power(g, power_input, power_n, power_verify);
        if (cavity->parsed())
            return cmd_cavity(g, cav_a, cav_b, cav_R, cav_s, cav_d, cav_cycles,
                              cav_sweep);
        if (stack->parsed())
            return cmd_stack(g, stk_r, stk_t, stk_a1, stk_a2, stk_cycles, stk_sweep);
        if (verify->parsed())
            return cmd_verify(g, ver_trials, ver_seed, ver_eta_max, ver_nlist);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "sp2: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "sp2: parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sp2::Error& e) {
        std::cerr << "sp2: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
