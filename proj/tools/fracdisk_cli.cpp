// fracdisk command line: series generation, operator application, grid
// checks, bound verification and batch sweeps, all through the JSON/CSV
// interchange formats of the library.

#include "fracdisk/banach.hpp"
#include "fracdisk/diskcheck.hpp"
#include "fracdisk/operators.hpp"
#include "fracdisk/rng.hpp"
#include "fracdisk/special.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace fracdisk;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPremise = 3;

int exit_code(Verdict v) {
    switch (v) {
    case Verdict::pass: return kExitPass;
    case Verdict::fail: return kExitFail;
    case Verdict::premise_not_met: return kExitPremise;
    }
    return kExitUsage;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

// locale-independent shortest round-trip formatting
std::string fmt(double x) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, p);
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        out.push_back(std::stod(item));
    }
    return out;
}

DiskGrid make_grid(double r_max, int angles, const std::string& radii_csv) {
    if (!radii_csv.empty())
        return DiskGrid(parse_list(radii_csv), angles);
    return DiskGrid::standard(r_max, angles);
}

FracPowerSeries load_series(const std::string& path) {
    return series_from_json(read_file(path));
}

int emit_report(const CheckReport& rep, const std::string& out_path) {
    write_output(out_path, rep.to_json_string());
    return exit_code(rep.verdict);
}

struct GridFlags {
    double r_max = 0.99;
    int angles = 128;
    std::string radii;
    double tol = 1e-9;

    void attach(CLI::App* cmd) {
        cmd->add_option("--rmax", r_max, "largest sampled radius (default 0.99)");
        cmd->add_option("--angles", angles, "angles per radius (default 128)");
        cmd->add_option("--radii", radii, "explicit comma-separated radii overriding --rmax");
        cmd->add_option("--tol", tol, "verdict tolerance (default 1e-9)");
    }
};

int run(int argc, char** argv) {
    CLI::App app{"fracdisk: fractional analytic series and convolution-operator checks "
                 "on the unit disk"};
    app.require_subcommand(1);

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a generator-family series document");
    double g_alpha = 1.0, g_mu = 1.0;
    int g_order = 64;
    std::string g_out;
    bool g_echo = false;
    gen->add_option("--alpha", g_alpha, "generator exponent, >= 1")
        ->check(CLI::Validator(
            [](std::string& s) {
                return std::stod(s) >= 1.0 ? std::string{} : std::string{"alpha must be >= 1"};
            },
            "ALPHA>=1"));
    gen->add_option("--mu", g_mu, "fractional power parameter, >= 1")
        ->check(CLI::Validator(
            [](std::string& s) {
                return std::stod(s) >= 1.0 ? std::string{} : std::string{"mu must be >= 1"};
            },
            "MU>=1"));
    gen->add_option("--order", g_order, "truncation order N (default 64)");
    gen->add_option("--out", g_out, "output path (stdout when omitted)");
    gen->add_flag("--echo", g_echo, "print the coefficient table");
    gen->callback([&] {
        const FracPowerSeries f = koebe_frac(g_alpha, g_mu, g_order);
        if (g_echo)
            for (int n = 1; n <= f.order(); ++n)
                std::cout << n << " " << fmt(f.coeff(n).real()) << " " << fmt(f.coeff(n).imag())
                          << "\n";
        write_output(g_out, to_json(f));
    });

    // ---- apply --------------------------------------------------------
    auto* apply = app.add_subcommand("apply", "apply a convolution operator to a series");
    std::string a_op, a_in, a_out;
    double a_beta = 1.0;
    bool a_literal = false;
    apply->add_option("--op", a_op, "ruscheweyh | noor | znoor")->required();
    apply->add_option("--beta", a_beta, "operator order, >= 0");
    apply->add_option("--in", a_in, "input series document")->required();
    apply->add_option("--out", a_out, "output path (stdout when omitted)");
    apply->add_flag("--literal-leading", a_literal,
                    "znoor only: differentiate the n = 1 term too (echoes raw coefficients)");
    apply->callback([&] {
        const FracPowerSeries f = load_series(a_in);
        if (a_op == "ruscheweyh") {
            write_output(a_out, to_json(ruscheweyh_frac(f, a_beta)));
        } else if (a_op == "noor") {
            write_output(a_out, to_json(noor_frac(f, a_beta)));
        } else if (a_op == "znoor") {
            if (a_literal) {
                const CoeffVec c =
                    z_noor_derivative_coeffs(f, a_beta, LeadingTerm::differentiated);
                nlohmann::json doc;
                doc["mu"] = f.mu();
                doc["N"] = f.order();
                auto arr = nlohmann::json::array();
                for (Eigen::Index i = 0; i < c.size(); ++i)
                    arr.push_back({c(i).real(), c(i).imag()});
                doc["coeffs"] = std::move(arr);
                doc["leading"] = "differentiated";
                write_output(a_out, doc.dump(2) + "\n");
            } else {
                write_output(a_out, to_json(z_noor_derivative(f, a_beta)));
            }
        } else {
            throw CLI::ValidationError("--op must be ruscheweyh, noor or znoor");
        }
    });

    // ---- eval ---------------------------------------------------------
    auto* ev = app.add_subcommand("eval", "evaluate a series and its derivatives at a point");
    std::string e_in;
    double e_re = 0.0, e_im = 0.0;
    ev->add_option("--in", e_in, "input series document")->required();
    ev->add_option("--re", e_re, "Re z")->required();
    ev->add_option("--im", e_im, "Im z");
    ev->callback([&] {
        const FracPowerSeries f = load_series(e_in);
        const Complex z(e_re, e_im);
        nlohmann::json doc;
        doc["z"] = {z.real(), z.imag()};
        const Complex v = evaluate(f, z);
        doc["f"] = {v.real(), v.imag()};
        if (z != Complex(0.0, 0.0) || f.mu() == std::floor(f.mu())) {
            const Complex d1 = evaluate_d1(f, z);
            const Complex d2 = evaluate_d2(f, z);
            doc["f1"] = {d1.real(), d1.imag()};
            doc["f2"] = {d2.real(), d2.imag()};
        }
        std::cout << doc.dump(2) << "\n";
    });

    // ---- check --------------------------------------------------------
    auto* check = app.add_subcommand("check", "run a geometric or coefficient check");
    std::string c_in, c_name, c_out;
    GridFlags c_grid;
    int c_zeta = 64;
    double c_alpha = 1.0;
    check->add_option("--in", c_in, "input series document")->required();
    check
        ->add_option("--check", c_name,
                     "starlike | convex | ucv | ucv2 | duren-starlike | duren-convex | goodman | "
                     "class-a | class-x")
        ->required();
    c_grid.attach(check);
    check->add_option("--zeta", c_zeta, "zeta samples for ucv2 (default 64)");
    check->add_option("--alpha", c_alpha, "class parameter for class-a/class-x");
    check->add_option("--out", c_out, "report path (stdout when omitted)");
    int rc_check = kExitPass;
    check->callback([&] {
        const FracPowerSeries f = load_series(c_in);
        const CheckOptions opts{c_grid.tol};
        CheckReport rep;
        if (c_name == "starlike")
            rep = is_starlike(f, make_grid(c_grid.r_max, c_grid.angles, c_grid.radii), opts);
        else if (c_name == "convex")
            rep = is_convex(f, make_grid(c_grid.r_max, c_grid.angles, c_grid.radii), opts);
        else if (c_name == "ucv")
            rep = is_ucv(f, make_grid(c_grid.r_max, c_grid.angles, c_grid.radii), opts);
        else if (c_name == "ucv2")
            rep = ucv_two_point(f, make_grid(c_grid.r_max, c_grid.angles, c_grid.radii), c_zeta,
                                opts);
        else if (c_name == "duren-starlike")
            rep = duren_bound_check(f, BoundKind::starlike, opts);
        else if (c_name == "duren-convex")
            rep = duren_bound_check(f, BoundKind::convex, opts);
        else if (c_name == "goodman")
            rep = goodman_bound_check(f, opts);
        else if (c_name == "class-a" || c_name == "class-x") {
            const bool ok = c_name == "class-a" ? in_class_a_mu(f, c_alpha)
                                                : in_class_x_mu(f, c_alpha);
            rep.check = c_name;
            rep.verdict = ok ? Verdict::pass : Verdict::fail;
            rep.worst_margin = ok ? 0.0 : -1.0;
            rep.params["alpha"] = c_alpha;
        } else
            throw CLI::ValidationError("unknown check name: " + c_name);
        rc_check = emit_report(rep, c_out);
    });

    // ---- bound --------------------------------------------------------
    auto* bound = app.add_subcommand("bound", "verify the Fox-Wright majorant of the Noor "
                                              "transform of a generator series");
    std::string b_check = "starlike-bound", b_radii = "0.5", b_out;
    double b_alpha = 1.0, b_beta = 1.0, b_mu = 1.0, b_tol = 1e-9;
    int b_order = 64;
    bound->add_option("--check", b_check, "starlike-bound | convex-bound");
    bound->add_option("--alpha", b_alpha, "generator exponent");
    bound->add_option("--beta", b_beta, "operator order");
    bound->add_option("--mu", b_mu, "fractional power parameter");
    bound->add_option("--radii", b_radii, "comma-separated radii (default 0.5)");
    bound->add_option("--order", b_order, "series truncation order");
    bound->add_option("--tol", b_tol, "verdict tolerance");
    bound->add_option("--out", b_out, "report path (stdout when omitted)");
    int rc_bound = kExitPass;
    bound->callback([&] {
        BoundKind kind;
        if (b_check == "starlike-bound" || b_check == "theorem2")
            kind = BoundKind::starlike;
        else if (b_check == "convex-bound" || b_check == "theorem3")
            kind = BoundKind::convex;
        else
            throw CLI::ValidationError("--check must be starlike-bound or convex-bound");
        const CheckReport rep = verify_noor_bound(kind, b_alpha, b_beta, b_mu,
                                                  parse_list(b_radii), b_order, {b_tol});
        rc_bound = emit_report(rep, b_out);
    });

    // ---- foxwright ----------------------------------------------------
    auto* fw = app.add_subcommand("foxwright", "evaluate the Fox-Wright 2Psi1 series");
    FoxWrightParams fwp;
    double fw_z = 0.0;
    fw->add_option("--a1", fwp.a1, "first numerator parameter");
    fw->add_option("--A1", fwp.A1, "first numerator weight");
    fw->add_option("--a2", fwp.a2, "second numerator parameter");
    fw->add_option("--A2", fwp.A2, "second numerator weight");
    fw->add_option("--b1", fwp.b1, "denominator parameter");
    fw->add_option("--B1", fwp.B1, "denominator weight");
    fw->add_option("--z", fw_z, "argument in [0, 1)")->required();
    fw->add_option("--tol", fwp.tol, "truncation tolerance (default 1e-12)");
    fw->callback([&] {
        const FoxWrightResult res = fox_wright_2psi1(fwp, fw_z);
        nlohmann::json doc;
        doc["value"] = res.value;
        doc["tail_bound"] = res.tail_bound;
        doc["terms"] = res.terms;
        std::cout << doc.dump(2) << "\n";
    });

    // ---- norm ---------------------------------------------------------
    auto* norm = app.add_subcommand("norm", "pre-Schwarzian norm estimate of a series");
    std::string n_in;
    GridFlags n_grid;
    norm->add_option("--in", n_in, "input series document")->required();
    n_grid.attach(norm);
    norm->callback([&] {
        const FracPowerSeries f = load_series(n_in);
        const double v =
            pre_schwarzian_norm(f, make_grid(n_grid.r_max, n_grid.angles, n_grid.radii));
        nlohmann::json doc;
        doc["pre_schwarzian_norm"] = v;
        doc["r_max"] = n_grid.r_max;
        std::cout << doc.dump(2) << "\n";
    });

    // ---- banach -------------------------------------------------------
    auto* ban = app.add_subcommand("banach", "run a check on a finite-dimensional model");
    std::string ba_in, ba_name, ba_out;
    GridFlags ba_grid;
    double ba_alpha = 1.0, ba_beta = 1.0;
    int ba_dirs = 64, ba_samples = 100;
    std::uint64_t ba_seed = 1;
    ban->add_option("--in", ba_in, "model document")->required();
    ban->add_option("--check", ba_name,
                    "ucv | coeff-bound | kernel | sufficient | bounded | distortion | compactness")
        ->required();
    ba_grid.attach(ban);
    ban->add_option("--alpha", ba_alpha, "distortion generator exponent");
    ban->add_option("--beta", ba_beta, "operator order");
    ban->add_option("--directions", ba_dirs, "sampled unit directions (default 64)");
    ban->add_option("--samples", ba_samples, "interior samples for the sufficient condition");
    ban->add_option("--seed", ba_seed, "sampling seed (default 1)");
    ban->add_option("--out", ba_out, "report path (stdout when omitted)");
    int rc_ban = kExitPass;
    ban->callback([&] {
        const BanachModel model = BanachModel::from_json(read_file(ba_in));
        const DiskGrid grid = make_grid(ba_grid.r_max, ba_grid.angles, ba_grid.radii);
        const CheckOptions opts{ba_grid.tol};
        CheckReport rep;
        if (ba_name == "ucv")
            rep = ucv_membership(model, SliceFamily::sample(model, ba_dirs, ba_seed), grid, opts);
        else if (ba_name == "coeff-bound" || ba_name == "theorem4")
            rep = coefficient_bound_check(model, SliceFamily::sample(model, ba_dirs, ba_seed),
                                          grid, opts);
        else if (ba_name == "kernel")
            rep = kernel_vanishing_check(model, kernel_directions(model, ba_dirs),
                                         SliceFamily::sample(model, ba_dirs, ba_seed), grid, opts);
        else if (ba_name == "sufficient") {
            Rng rng(ba_seed);
            std::vector<Vec> samples;
            for (int i = 0; i < ba_samples; ++i) {
                Vec w(model.dim());
                for (int j = 0; j < model.dim(); ++j)
                    w(j) = rng.complex_normal();
                const double nw = model.norm(w);
                if (nw == 0.0)
                    continue;
                w *= rng.uniform(0.05, 0.9) / nw;
                samples.push_back(std::move(w));
            }
            rep = sufficient_condition_check(model, samples, opts);
        } else if (ba_name == "bounded")
            rep = boundedness_check(model, SliceFamily::sample(model, ba_dirs, ba_seed), ba_beta,
                                    grid, opts);
        else if (ba_name == "distortion" || ba_name == "theorem8")
            rep = noor_distortion_check(
                model, SliceFamily::sample(model, 1, ba_seed).directions.front(), ba_alpha,
                ba_beta, grid, opts);
        else if (ba_name == "compactness") {
            std::vector<double> scales;
            for (int m = 0; m <= 10; ++m)
                scales.push_back(std::pow(0.5, m));
            rep = compactness_decay_check(model,
                                          SliceFamily::sample(model, 1, ba_seed).directions.front(),
                                          ba_beta, grid, scales, opts);
        } else
            throw CLI::ValidationError("unknown banach check: " + ba_name);
        rc_ban = emit_report(rep, ba_out);
    });

    // ---- sweep --------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "batch-verify bounds over parameter grids (CSV)");
    std::string s_check = "starlike-bound", s_alpha = "1", s_beta = "1", s_mu = "1",
                s_radii = "0.3,0.6,0.9", s_out, s_in;
    int s_order = 64, s_angles = 128;
    std::uint64_t s_seed = 1;
    std::string s_format = "csv";
    sweep->add_option("--check", s_check, "starlike-bound | convex-bound | distortion");
    sweep->add_option("--alpha", s_alpha, "comma-separated alpha values");
    sweep->add_option("--beta", s_beta, "comma-separated beta values");
    sweep->add_option("--mu", s_mu, "comma-separated mu values");
    sweep->add_option("--radii", s_radii, "comma-separated radii");
    sweep->add_option("--order", s_order, "series truncation order");
    sweep->add_option("--angles", s_angles, "angles per radius for distortion rows");
    sweep->add_option("--in", s_in, "model document for distortion rows");
    sweep->add_option("--seed", s_seed, "direction seed for distortion rows");
    sweep->add_option("--format", s_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--out", s_out, "output path (stdout when omitted)");
    int rc_sweep = kExitPass;
    sweep->callback([&] {
        const auto alphas = parse_list(s_alpha);
        const auto betas = parse_list(s_beta);
        const auto mus = parse_list(s_mu);
        const auto radii = parse_list(s_radii);

        struct Row {
            std::string check;
            double alpha, beta, mu, r;
            std::string verdict;
            double margin, literal, tail;
        };
        std::vector<Row> rows;

        if (s_check == "starlike-bound" || s_check == "theorem2" || s_check == "convex-bound" ||
            s_check == "theorem3") {
            const bool star = s_check == "starlike-bound" || s_check == "theorem2";
            const BoundKind kind = star ? BoundKind::starlike : BoundKind::convex;
            const std::string name = star ? "starlike-bound" : "convex-bound";
            for (double al : alphas)
                for (double be : betas)
                    for (double m : mus) {
                        if (radii.empty())
                            continue;
                        const CheckReport rep =
                            verify_noor_bound(kind, al, be, m, radii, s_order);
                        const bool skipped = !rep.params.contains("tail_margins");
                        for (std::size_t i = 0; i < radii.size(); ++i) {
                            Row row{name, al, be, m, radii[i], to_string(rep.verdict),
                                    std::numeric_limits<double>::quiet_NaN(),
                                    std::numeric_limits<double>::quiet_NaN(), rep.tail_note};
                            if (!skipped) {
                                row.margin = rep.params["tail_margins"][i].get<double>();
                                row.literal = rep.params["literal_margins"][i].get<double>();
                            }
                            rows.push_back(row);
                        }
                    }
        } else if (s_check == "distortion" || s_check == "theorem8") {
            BanachModel model = [&] {
                if (!s_in.empty())
                    return BanachModel::from_json(read_file(s_in));
                // default demo model: admissible diagonal coefficients
                std::vector<Complex> p;
                for (int n = 2; n <= 8; ++n)
                    p.emplace_back(1.0 / (n * (2.0 * n - 1.0)), 0.0);
                Vec c(2);
                c << Complex(1, 0), Complex(0, 0);
                return BanachModel::diagonal(2, std::move(c), 1.0, VectorNorm::euclidean, p);
            }();
            const Vec a = SliceFamily::sample(model, 1, s_seed).directions.front();
            for (double al : alphas)
                for (double be : betas)
                    for (double r : radii) {
                        const DiskGrid grid({r}, s_angles);
                        const CheckReport rep =
                            noor_distortion_check(model, a, al, be, grid);
                        rows.push_back({"distortion", al, be, model.mu(), r,
                                        to_string(rep.verdict), rep.worst_margin,
                                        std::numeric_limits<double>::quiet_NaN(), rep.tail_note});
                    }
        } else
            throw CLI::ValidationError("unknown sweep check: " + s_check);

        bool any_fail = false, any_premise = false;
        for (const Row& row : rows) {
            any_fail = any_fail || row.verdict == "fail";
            any_premise = any_premise || row.verdict == "premise-not-met";
        }
        std::ostringstream out;
        if (s_format == "json") {
            auto arr = nlohmann::json::array();
            for (const Row& row : rows)
                arr.push_back({{"check", row.check},
                               {"alpha", row.alpha},
                               {"beta", row.beta},
                               {"mu", row.mu},
                               {"r", row.r},
                               {"verdict", row.verdict},
                               {"worst_margin", row.margin},
                               {"literal_margin", row.literal},
                               {"tail_note", row.tail}});
            out << arr.dump(2) << "\n";
        } else {
            out << "check,alpha,beta,mu,r,verdict,worst_margin,literal_margin,tail_note\n";
            for (const Row& row : rows) {
                out << row.check << "," << fmt(row.alpha) << "," << fmt(row.beta) << ","
                    << fmt(row.mu) << "," << fmt(row.r) << "," << row.verdict << ",";
                out << (std::isnan(row.margin) ? "" : fmt(row.margin)) << ",";
                out << (std::isnan(row.literal) ? "" : fmt(row.literal)) << ",";
                out << fmt(row.tail) << "\n";
            }
        }
        write_output(s_out, out.str());
        rc_sweep = any_fail ? kExitFail : any_premise ? kExitPremise : kExitPass;
    });

    // ---- plotdata -----------------------------------------------------
    auto* plot = app.add_subcommand("plotdata", "emit boundary image points as CSV");
    std::string p_in, p_radii = "0.5", p_op = "none", p_out;
    int p_samples = 256;
    double p_beta = 1.0;
    plot->add_option("--in", p_in, "input series document")->required();
    plot->add_option("--radii", p_radii, "comma-separated ring radii");
    plot->add_option("--samples", p_samples, "points per ring (default 256)");
    plot->add_option("--op", p_op, "none | ruscheweyh | noor | znoor applied before evaluation");
    plot->add_option("--beta", p_beta, "operator order for --op");
    plot->add_option("--out", p_out, "output path (stdout when omitted)");
    plot->callback([&] {
        FracPowerSeries f = load_series(p_in);
        if (p_op == "ruscheweyh")
            f = ruscheweyh_frac(f, p_beta);
        else if (p_op == "noor")
            f = noor_frac(f, p_beta);
        else if (p_op == "znoor")
            f = z_noor_derivative(f, p_beta);
        else if (p_op != "none")
            throw CLI::ValidationError("--op must be none, ruscheweyh, noor or znoor");
        if (p_samples < 1)
            throw CLI::ValidationError("--samples must be positive");
        std::ostringstream out;
        out << "r,theta,re,im\n";
        for (double r : parse_list(p_radii)) {
            for (int k = 0; k < p_samples; ++k) {
                const double theta = 2.0 * M_PI * k / p_samples;
                const Complex z = r * std::exp(Complex(0.0, theta));
                const Complex v = evaluate(f, z);
                out << fmt(r) << "," << fmt(theta) << "," << fmt(v.real()) << ","
                    << fmt(v.imag()) << "\n";
            }
        }
        write_output(p_out, out.str());
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    if (check->parsed())
        return rc_check;
    if (bound->parsed())
        return rc_bound;
    if (ban->parsed())
        return rc_ban;
    if (sweep->parsed())
        return rc_sweep;
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const fracdisk::degenerate_sample_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
