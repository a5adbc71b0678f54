// Acceptance suite: one criterion per invocation, selected by --criterion.
// Each criterion prints a single PASS/FAIL line with its measured numbers
// and exits nonzero on failure, so the ctest entries stay independent.

#include "fracdisk/banach.hpp"
#include "fracdisk/diskcheck.hpp"
#include "fracdisk/operators.hpp"
#include "fracdisk/rng.hpp"
#include "fracdisk/special.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace fracdisk;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli_path;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool ok = true;
    std::string detail;
};

FracPowerSeries random_class_series(Rng& rng, int order) {
    const double alpha = rng.uniform(1.0, 3.0);
    CoeffVec c(order);
    c(0) = 1.0;
    double bound = 1.0;
    for (int n = 2; n <= order; ++n) {
        bound = bound * (alpha + n - 2) / (n - 1);
        c(n - 1) = bound * rng.uniform() * rng.unit_complex();
    }
    return FracPowerSeries(rng.uniform(1.0, 2.0), std::move(c));
}

// --- criterion 1: operator inverse identity -----------------------------

Outcome criterion_inverse_identity() {
    const auto t0 = Clock::now();
    Rng rng(1001);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = random_class_series(rng, 64);
        for (double beta : {0.0, 0.5, 1.0, 2.0, 5.0}) {
            const auto g = noor_frac(ruscheweyh_frac(f, beta), beta);
            // coefficient comparison after relative normalization
            for (int n = 1; n <= f.order(); ++n)
                worst = std::max(worst, std::abs(g.coeff(n) - f.coeff(n)) /
                                            std::max(1.0, std::abs(f.coeff(n))));
        }
    }
    const double dt = seconds_since(t0);
    Outcome out;
    out.ok = worst < 1e-12 && dt < 1.0;
    std::ostringstream ss;
    ss << "max normalized coefficient error " << worst << " over 100 series x 5 betas, " << dt
       << " s";
    out.detail = ss.str();
    return out;
}

// --- criterion 2: factorial vs Gamma weight forms ------------------------

Outcome criterion_weight_forms() {
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double beta = 10.0 * i / 49.0;
        for (int n = 2; n <= 64; ++n) {
            const double a = z_noor_weight(n, 1.0, beta);
            const double b = z_noor_weight_gamma(n, 1.0, beta);
            worst = std::max(worst, std::abs(a - b) / std::abs(b));
        }
    }
    const double dt = seconds_since(t0);
    Outcome out;
    out.ok = worst <= 1e-10 && dt < 1.0;
    std::ostringstream ss;
    ss << "max relative gap " << worst << " over n <= 64, 50-point beta grid, " << dt << " s";
    out.detail = ss.str();
    return out;
}

// --- criterion 3: Fox-Wright closed-form anchors --------------------------

Outcome criterion_bound_anchors() {
    const auto t0 = Clock::now();
    const double star = starlike_noor_bound(1.0, 1.0, 0.5);
    const double conv = convex_noor_bound(1.0, 1.0, 0.5);
    const double conv_ref = -std::log(0.5) - 0.5;
    const double e1 = std::abs(star - 0.5);
    const double e2 = std::abs(conv - conv_ref);
    const double dt = seconds_since(t0);
    Outcome out;
    out.ok = e1 < 1e-10 && e2 < 1e-10 && dt < 0.1;
    std::ostringstream ss;
    ss << "starlike bound " << star << " (err " << e1 << "), convex bound " << conv << " (err "
       << e2 << "), " << dt << " s";
    out.detail = ss.str();
    return out;
}

// --- criterion 4: bound verification sweep --------------------------------

Outcome criterion_bound_sweep() {
    const auto t0 = Clock::now();
    std::vector<double> radii;
    for (int k = 1; k <= 9; ++k)
        radii.push_back(0.1 * k);
    double worst = 1e300;
    int literal_passes = 0, rows = 0;
    bool ok = true;
    for (BoundKind kind : {BoundKind::starlike, BoundKind::convex}) {
        for (double beta : {1.0, 2.0, 3.0}) {
            for (double mu : {1.0, 1.5, 2.0}) {
                const auto rep = verify_noor_bound(kind, 1.0, beta, mu, radii);
                ok = ok && rep.verdict != Verdict::fail;
                ok = ok && rep.params["tail_form_pass"].get<bool>();
                const auto margins = rep.params["tail_margins"].get<std::vector<double>>();
                for (double m : margins) {
                    worst = std::min(worst, m);
                    ok = ok && m >= -1e-9;
                }
                const auto lits = rep.params["literal_margins"].get<std::vector<double>>();
                for (double m : lits) {
                    ++rows;
                    literal_passes += m >= -1e-9 ? 1 : 0;
                }
            }
        }
    }
    const double dt = seconds_since(t0);
    Outcome out;
    out.ok = ok && dt < 5.0;
    std::ostringstream ss;
    ss << "worst tail-form margin " << worst << "; literal form passes " << literal_passes << "/"
       << rows << " rows (logged, not asserted), " << dt << " s";
    out.detail = ss.str();
    return out;
}

// --- criterion 5: classical geometry oracle -------------------------------

Outcome criterion_classical_geometry() {
    const auto t0 = Clock::now();
    const auto grid = DiskGrid::standard();
    const auto koebe = koebe_frac(2.0, 1.0, 128);
    const auto half = koebe_frac(1.0, 1.0, 128);

    const auto star1 = is_starlike(koebe, grid);
    const auto star2 = is_starlike(koebe, grid);
    const auto conv_k = is_convex(koebe, grid);
    const auto ucv_k = is_ucv(koebe, grid);
    const auto conv_h1 = is_convex(half, grid);
    const auto conv_h2 = is_convex(half, grid);

    bool ok = star1.passed() && conv_k.verdict == Verdict::fail &&
              ucv_k.verdict == Verdict::fail && conv_h1.passed();
    const bool repro =
        std::memcmp(&star1.worst_margin, &star2.worst_margin, sizeof(double)) == 0 &&
        std::memcmp(&conv_h1.worst_margin, &conv_h2.worst_margin, sizeof(double)) == 0 &&
        star1.witness == star2.witness;
    ok = ok && repro;
    const double dt = seconds_since(t0);
    Outcome out;
    out.ok = ok && dt < 5.0;
    std::ostringstream ss;
    ss << "koebe: starlike " << to_string(star1.verdict) << " (margin " << star1.worst_margin
       << "), convex " << to_string(conv_k.verdict) << ", ucv " << to_string(ucv_k.verdict)
       << "; half-plane convex " << to_string(conv_h1.verdict) << "; bit-reproducible "
       << (repro ? "yes" : "no") << ", " << dt << " s";
    out.detail = ss.str();
    return out;
}

// --- criterion 6: pre-Schwarzian norm targets ------------------------------

Outcome criterion_pre_schwarzian() {
    const auto t0 = Clock::now();
    const auto grid = DiskGrid::standard(0.999);
    const double n2 = pre_schwarzian_norm(koebe_frac(2.0, 1.0, 128), grid);
    const double n1 = pre_schwarzian_norm(koebe_frac(1.0, 1.0, 128), grid);
    const double dt = seconds_since(t0);
    Outcome out;
    out.ok = n2 >= 5.9 && n2 <= 6.0 && n1 >= 3.9 && n1 <= 4.0 && dt < 5.0;
    std::ostringstream ss;
    ss << "order-128 estimates " << n2 << " (target [5.9, 6.0]) and " << n1
       << " (target [3.9, 4.0]), " << dt
       << " s; the truncated series cannot reach the analytic suprema at this order "
          "(order 1024 reaches "
       << pre_schwarzian_norm(koebe_frac(2.0, 1.0, 1024), grid) << " and "
       << pre_schwarzian_norm(koebe_frac(1.0, 1.0, 1024), grid) << ")";
    out.detail = ss.str();
    return out;
}

// --- criterion 7: coefficient bound + kernel vanishing suite ---------------

Outcome criterion_slice_bounds() {
    const auto t0 = Clock::now();
    Rng rng(7001);
    const auto grid = DiskGrid::standard(0.99);
    bool ok = true;
    double worst = 1e300;
    int membership_passes = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const int d = rng.uniform_int(2, 4);
        const int maxdeg = rng.uniform_int(4, 8);
        std::vector<Complex> p;
        double budget = 0.9;
        for (int n = 2; n <= maxdeg; ++n) {
            const double cap = budget / (n * (2.0 * n - 1.0));
            const double mag = cap * rng.uniform();
            p.push_back(mag * rng.unit_complex());
            budget -= n * (2.0 * n - 1.0) * mag;
        }
        Vec c = Vec::Zero(d);
        c(0) = 1.0;
        const auto model = BanachModel::diagonal(d, std::move(c), 1.0, VectorNorm::euclidean, p);
        const auto fam = SliceFamily::sample(model, 64, 9000 + trial);
        const auto rep = coefficient_bound_check(model, fam, grid);
        membership_passes += rep.verdict != Verdict::premise_not_met ? 1 : 0;
        ok = ok && rep.passed();
        worst = std::min(worst, rep.worst_margin);
        ok = ok && rep.worst_margin >= -1e-6;
    }

    // a-power models vanish on exact kernel directions
    double worst_kernel = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const int d = rng.uniform_int(2, 4);
        Vec c(d);
        for (int i = 0; i < d; ++i)
            c(i) = rng.complex_normal();
        std::vector<Complex> p;
        for (int n = 2; n <= 6; ++n)
            p.push_back(rng.uniform(0.0, 0.2) * rng.unit_complex());
        const auto model = BanachModel::a_power(d, c, 1.0, VectorNorm::euclidean, p);
        for (const Vec& a : kernel_directions(model, 8)) {
            if (model.functional(a) != Complex(0.0, 0.0))
                ok = false;
            for (int n = 2; n <= model.max_degree(); ++n)
                worst_kernel = std::max(worst_kernel, std::abs(model.poly(n, a)));
        }
    }
    ok = ok && worst_kernel == 0.0;

    const double dt = seconds_since(t0);
    Outcome out;
    out.ok = ok && dt < 30.0;
    std::ostringstream ss;
    ss << "30/30 models, membership passed " << membership_passes
       << ", worst coefficient margin " << worst << ", max kernel |P_n(a)| " << worst_kernel
       << ", " << dt << " s";
    out.detail = ss.str();
    return out;
}

// --- criterion 8: quasi-Hadamard closure -----------------------------------

Outcome criterion_quasi_closure() {
    const auto t0 = Clock::now();
    Rng rng(8001);
    bool ok = true;
    double worst = 1e300;
    for (int trial = 0; trial < 100; ++trial) {
        const int l = rng.uniform_int(0, 2);
        const int s = rng.uniform_int(l == 0 ? 1 : 0, l == 0 ? 4 : 4 - l);
        const int len = rng.uniform_int(1, 7);
        std::vector<Eigen::VectorXd> ps, phis;
        std::vector<double> avals;
        auto make_family = [&] {
            Eigen::VectorXd fam(len);
            const double a = rng.uniform(0.5, 2.0);
            double budget = a * rng.uniform(0.1, 1.0);
            for (int i = 0; i < len; ++i) {
                const double n = i + 2.0;
                const double take = budget * rng.uniform() / n;
                fam(i) = take;
                budget -= n * take;
            }
            avals.push_back(a);
            return fam;
        };
        for (int j = 0; j < l; ++j)
            ps.push_back(make_family());
        for (int j = 0; j < s; ++j)
            phis.push_back(make_family());
        const auto rep = quasi_class_check(ps, phis, avals);
        ok = ok && rep.passed() && rep.worst_margin >= -1e-12;
        worst = std::min(worst, rep.worst_margin);
    }

    // boundary case: a single n = 2 term at equality closes with margin 0
    Eigen::VectorXd boundary(1);
    boundary << 0.5;
    const auto brep = quasi_class_check({boundary}, {}, {1.0});
    ok = ok && brep.passed() && brep.worst_margin == 0.0;

    const double dt = seconds_since(t0);
    Outcome out;
    out.ok = ok && dt < 2.0;
    std::ostringstream ss;
    ss << "100 random tuples, worst margin " << worst << ", boundary margin "
       << brep.worst_margin << " (exact zero required), " << dt << " s";
    out.detail = ss.str();
    return out;
}

// --- criterion 9: compactness decay ----------------------------------------

Outcome criterion_compactness_decay() {
    const auto t0 = Clock::now();
    std::vector<Complex> p;
    for (int n = 2; n <= 8; ++n)
        p.emplace_back(-0.5 / (n * n), 0.0);
    Vec c(2);
    c << Complex(1, 0), Complex(0, 0);
    const auto model = BanachModel::diagonal(2, std::move(c), 1.0, VectorNorm::euclidean, p);
    Vec a = Vec::Zero(2);
    a(0) = 1.0;
    std::vector<double> scales;
    for (int m = 0; m <= 10; ++m)
        scales.push_back(std::pow(0.5, m));
    const auto rep = compactness_decay_check(model, a, 1.0, DiskGrid::standard(), scales);
    const auto ts = rep.params["t_norms"].get<std::vector<double>>();
    const double dt = seconds_since(t0);
    Outcome out;
    out.ok = rep.passed() && dt < 10.0;
    std::ostringstream ss;
    ss << "t_0 " << ts.front() << " -> t_10 " << ts.back() << " (ratio "
       << ts.back() / ts.front() << ", required < 1e-3), monotone decay, " << dt << " s";
    out.detail = ss.str();
    return out;
}

// --- criterion 10: determinism and round trips ------------------------------

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome criterion_determinism() {
    Outcome out;
    if (g_cli_path.empty()) {
        out.ok = false;
        out.detail = "missing --cli path to the command line binary";
        return out;
    }
    const std::string dir = "acceptance_tmp";
    if (std::system(("mkdir -p " + dir).c_str()) != 0) {
        out.ok = false;
        out.detail = "cannot create scratch directory";
        return out;
    }
    auto run = [&](const std::string& args) {
        return std::system((g_cli_path + " " + args + " > /dev/null 2>&1").c_str());
    };

    bool ok = true;
    std::ostringstream ss;

    // gen twice: byte-identical series documents
    ok = ok && run("gen --alpha 2 --mu 1 --order 32 --out " + dir + "/s1.json") == 0;
    ok = ok && run("gen --alpha 2 --mu 1 --order 32 --out " + dir + "/s2.json") == 0;
    const std::string s1 = slurp(dir + "/s1.json");
    ok = ok && !s1.empty() && s1 == slurp(dir + "/s2.json");

    // gen -> read round-trips bit-exactly against the in-memory generator
    const auto parsed = series_from_json(s1);
    const auto reference = koebe_frac(2.0, 1.0, 32);
    for (int n = 1; n <= 32; ++n)
        ok = ok && parsed.coeff(n) == reference.coeff(n);
    ok = ok && parsed.mu() == reference.mu();

    // identical (config, seed): byte-identical reports
    ok = ok && run("check --in " + dir + "/s1.json --check starlike --out " + dir + "/r1.json") == 0;
    ok = ok && run("check --in " + dir + "/s1.json --check starlike --out " + dir + "/r2.json") == 0;
    const std::string r1 = slurp(dir + "/r1.json");
    ok = ok && !r1.empty() && r1 == slurp(dir + "/r2.json");

    const int ban1 = std::system((g_cli_path + " sweep --check distortion --alpha 1 --beta 1 "
                                  "--radii 0.3,0.6 --seed 42 --out " +
                                  dir + "/w1.csv > /dev/null 2>&1")
                                     .c_str());
    const int ban2 = std::system((g_cli_path + " sweep --check distortion --alpha 1 --beta 1 "
                                  "--radii 0.3,0.6 --seed 42 --out " +
                                  dir + "/w2.csv > /dev/null 2>&1")
                                     .c_str());
    ok = ok && ban1 == ban2;
    const std::string w1 = slurp(dir + "/w1.csv");
    ok = ok && !w1.empty() && w1 == slurp(dir + "/w2.csv");

    out.ok = ok;
    ss << "series docs identical, reports identical, sweep identical, generator round-trip "
          "bit-exact";
    out.detail = ss.str();
    return out;
}

} // namespace

int main(int argc, char** argv) {
    int criterion = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            criterion = std::atoi(argv[++i]);
        else if (std::strcmp(argv[i], "--cli") == 0 && i + 1 < argc)
            g_cli_path = argv[++i];
    }
    if (criterion < 1 || criterion > 10) {
        std::cerr << "usage: acceptance --criterion 1..10 [--cli path]\n";
        return 2;
    }

    struct Entry {
        const char* name;
        Outcome (*fn)();
    };
    const Entry entries[10] = {
        {"operator inverse identity", criterion_inverse_identity},
        {"factorial vs Gamma weight forms", criterion_weight_forms},
        {"Fox-Wright closed-form anchors", criterion_bound_anchors},
        {"Noor-transform bound sweep", criterion_bound_sweep},
        {"classical geometry oracle", criterion_classical_geometry},
        {"pre-Schwarzian norm targets", criterion_pre_schwarzian},
        {"slice coefficient bound and kernel vanishing", criterion_slice_bounds},
        {"quasi-Hadamard closure", criterion_quasi_closure},
        {"compactness decay", criterion_compactness_decay},
        {"determinism and round trips", criterion_determinism},
    };

    const Entry& e = entries[criterion - 1];
    Outcome out;
    try {
        out = e.fn();
    } catch (const std::exception& ex) {
        out.ok = false;
        out.detail = std::string("exception: ") + ex.what();
    }
    std::cout << "A" << criterion << " " << (out.ok ? "PASS" : "FAIL") << " " << e.name << ": "
              << out.detail << "\n";
    return out.ok ? 0 : 1;
}
