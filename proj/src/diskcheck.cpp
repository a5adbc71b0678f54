#include "fracdisk/diskcheck.hpp"

#include "fracdisk/operators.hpp"
#include "fracdisk/special.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <future>
#include <thread>

namespace fracdisk {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::premise_not_met: return "premise-not-met";
    }
    return "unknown";
}

nlohmann::json CheckReport::to_json() const {
    nlohmann::json doc;
    doc["check"] = check;
    doc["verdict"] = to_string(verdict);
    doc["worst_margin"] = worst_margin;
    doc["witness"] = {witness.real(), witness.imag()};
    doc["params"] = params;
    doc["tail_note"] = tail_note;
    return doc;
}

std::string CheckReport::to_json_string() const {
    return to_json().dump(2) + "\n";
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

int thread_cap() {
    static const int cap = [] {
        int v = 0;
        if (const char* s = std::getenv("GFT_FRAC_THREADS"))
            v = std::atoi(s);
        if (v <= 0)
            v = static_cast<int>(std::thread::hardware_concurrency());
        return std::max(1, v);
    }();
    return cap;
}

// pointwise evaluation outcome before classification
struct PointEval {
    double margin = kNaN;
    double err = kInf;       // certified bound on the margin error; inf = undecidable
    bool degenerate = false; // exact zero where a ratio is needed
};

struct RingScan {
    double worst = kInf; // min margin over decided points of this ring
    int worst_angle = -1;
    bool any_fail = false;
    long decided = 0;
    long indeterminate = 0;
    double max_err = 0.0;
    int degenerate_angle = -1;
};

// evaluates one ring; classification against the tolerance happens here so
// the merge step only aggregates
template <class Fn>
RingScan scan_ring(const DiskGrid& grid, int ring, double tol, const Fn& point_eval) {
    RingScan out;
    for (int k = 0; k < grid.angles_per_radius(); ++k) {
        const Complex z = grid.point(ring, k);
        const PointEval pe = point_eval(ring, k, z);
        if (pe.degenerate) {
            out.degenerate_angle = k;
            return out;
        }
        if (!(pe.err < kInf) || !(pe.margin == pe.margin)) {
            ++out.indeterminate;
            continue;
        }
        if (pe.margin - pe.err >= -tol) {
            // decided pass
        } else if (pe.margin + pe.err < -tol) {
            out.any_fail = true;
        } else {
            ++out.indeterminate;
            continue;
        }
        ++out.decided;
        out.max_err = std::max(out.max_err, pe.err);
        if (pe.margin < out.worst) {
            out.worst = pe.margin;
            out.worst_angle = k;
        }
    }
    return out;
}

// deterministic grid scan: rings may run on separate threads (capped by
// GFT_FRAC_THREADS), results merge in ring order
template <class Fn>
CheckReport run_grid_check(std::string name, const DiskGrid& grid, const CheckOptions& opts,
                           const Fn& point_eval) {
    const int rings = grid.ring_count();
    std::vector<RingScan> scans(rings);
    const int workers = std::min(thread_cap(), rings);
    if (workers <= 1) {
        for (int i = 0; i < rings; ++i)
            scans[i] = scan_ring(grid, i, opts.tolerance, point_eval);
    } else {
        std::vector<std::future<void>> tasks;
        std::atomic<int> next{0};
        for (int w = 0; w < workers; ++w)
            tasks.push_back(std::async(std::launch::async, [&] {
                for (int i = next.fetch_add(1); i < rings; i = next.fetch_add(1))
                    scans[i] = scan_ring(grid, i, opts.tolerance, point_eval);
            }));
        for (auto& t : tasks)
            t.get();
    }

    CheckReport rep;
    rep.check = std::move(name);
    double worst = kInf;
    int worst_ring = -1, worst_angle = -1;
    long decided = 0, indeterminate = 0;
    bool any_fail = false;
    double max_err = 0.0;
    for (int i = 0; i < rings; ++i) {
        const RingScan& s = scans[i];
        if (s.degenerate_angle >= 0) {
            const Complex z = grid.point(i, s.degenerate_angle);
            throw degenerate_sample_error(
                rep.check + ": degenerate sample at z = (" + std::to_string(z.real()) + ", " +
                    std::to_string(z.imag()) + ")",
                z);
        }
        decided += s.decided;
        indeterminate += s.indeterminate;
        any_fail = any_fail || s.any_fail;
        max_err = std::max(max_err, s.max_err);
        if (s.worst_angle >= 0 && s.worst < worst) {
            worst = s.worst;
            worst_ring = i;
            worst_angle = s.worst_angle;
        }
    }

    rep.params["decided_samples"] = decided;
    rep.params["indeterminate_samples"] = indeterminate;
    rep.params["tolerance"] = opts.tolerance;
    rep.params["r_max"] = grid.r_max();
    rep.params["angles_per_radius"] = grid.angles_per_radius();
    rep.tail_note = max_err;
    if (decided == 0) {
        rep.verdict = Verdict::premise_not_met;
        rep.params["note"] = "no sample decidable under the truncation bounds";
        return rep;
    }
    rep.verdict = any_fail ? Verdict::fail : Verdict::pass;
    rep.worst_margin = worst;
    rep.witness = grid.point(worst_ring, worst_angle);
    return rep;
}

// per-ring truncation bounds (envelope extrapolation plus fp noise)
std::vector<TailBounds> ring_bounds(const FracPowerSeries& f, const DiskGrid& grid) {
    TailEnvelope env(f);
    std::vector<TailBounds> out(grid.ring_count());
    for (int i = 0; i < grid.ring_count(); ++i) {
        const double r = grid.radii()[i];
        const TailBounds tail = env.at(r);
        const TailBounds noise = eval_noise(f, r);
        out[i] = {tail.f0 + noise.f0, tail.f1 + noise.f1, tail.f2 + noise.f2};
    }
    return out;
}

// certified error of u/v given |du| <= eu, |dv| <= ev; inf when v is not
// separated from zero
double ratio_err(Complex u, Complex v, double eu, double ev) {
    const double av = std::abs(v);
    if (!(av > ev))
        return kInf;
    return (eu + ev * std::abs(u / v)) / (av - ev);
}

} // namespace

CheckReport is_starlike(const FracPowerSeries& f, const DiskGrid& grid, const CheckOptions& opts) {
    const auto bounds = ring_bounds(f, grid);
    auto rep = run_grid_check(
        "starlike", grid, opts, [&](int ring, int, Complex z) {
            PointEval pe;
            const Complex v = eval_raw(f.mu(), f.coeffs(), z, 0);
            if (v == Complex(0.0, 0.0)) {
                pe.degenerate = true;
                return pe;
            }
            const Complex u = z * eval_raw(f.mu(), f.coeffs(), z, 1);
            const double r = std::abs(z);
            const double err = ratio_err(u, v, r * bounds[ring].f1, bounds[ring].f0);
            pe.margin = (u / v).real();
            pe.err = err;
            return pe;
        });
    rep.params["mu"] = f.mu();
    rep.params["order"] = f.order();
    return rep;
}

namespace {

// shared kernel of the convexity-type checks: Q = z F''/F'
struct QEval {
    Complex q;
    double err;
    bool degenerate = false;
};

QEval eval_q(const FracPowerSeries& f, Complex z, const TailBounds& b) {
    QEval out{Complex(0, 0), kInf};
    const Complex v = eval_raw(f.mu(), f.coeffs(), z, 1);
    if (v == Complex(0.0, 0.0)) {
        out.degenerate = true;
        return out;
    }
    const Complex u = z * eval_raw(f.mu(), f.coeffs(), z, 2);
    out.q = u / v;
    out.err = ratio_err(u, v, std::abs(z) * b.f2, b.f1);
    return out;
}

} // namespace

CheckReport is_convex(const FracPowerSeries& f, const DiskGrid& grid, const CheckOptions& opts) {
    const auto bounds = ring_bounds(f, grid);
    auto rep = run_grid_check(
        "convex", grid, opts, [&](int ring, int, Complex z) {
            PointEval pe;
            const QEval qe = eval_q(f, z, bounds[ring]);
            if (qe.degenerate) {
                pe.degenerate = true;
                return pe;
            }
            pe.margin = 1.0 + qe.q.real();
            pe.err = qe.err;
            return pe;
        });
    rep.params["mu"] = f.mu();
    rep.params["order"] = f.order();
    return rep;
}

CheckReport is_ucv(const FracPowerSeries& f, const DiskGrid& grid, const CheckOptions& opts) {
    const auto bounds = ring_bounds(f, grid);
    auto rep = run_grid_check(
        "ucv", grid, opts, [&](int ring, int, Complex z) {
            PointEval pe;
            const QEval qe = eval_q(f, z, bounds[ring]);
            if (qe.degenerate) {
                pe.degenerate = true;
                return pe;
            }
            pe.margin = 1.0 + qe.q.real() - std::abs(qe.q);
            pe.err = 2.0 * qe.err; // Re and |.| are each 1-Lipschitz in Q
            return pe;
        });
    rep.params["mu"] = f.mu();
    rep.params["order"] = f.order();
    return rep;
}

CheckReport ucv_two_point(const FracPowerSeries& f, const DiskGrid& grid, int zeta_samples,
                          const CheckOptions& opts) {
    if (zeta_samples < 1)
        throw std::invalid_argument("ucv_two_point: need at least one zeta sample");
    // quasi-uniform spiral over the sampled disk, origin included
    std::vector<Complex> zetas;
    zetas.reserve(zeta_samples + 1);
    zetas.emplace_back(0.0, 0.0);
    constexpr double golden = 0.6180339887498949;
    for (int j = 0; j < zeta_samples; ++j) {
        const double rho = grid.r_max() * std::sqrt((j + 0.5) / zeta_samples);
        const double a = 2.0 * M_PI * golden * j;
        zetas.emplace_back(rho * std::cos(a), rho * std::sin(a));
    }

    const auto bounds = ring_bounds(f, grid);
    auto rep = run_grid_check(
        "ucv-two-point", grid, opts, [&](int ring, int, Complex z) {
            PointEval pe;
            const QEval qe = eval_q(f, z, bounds[ring]);
            if (qe.degenerate) {
                pe.degenerate = true;
                return pe;
            }
            const Complex t = qe.q / z; // F''/F'
            const double terr = qe.err / std::abs(z);
            double worst = kInf;
            for (const Complex& zeta : zetas)
                worst = std::min(worst, 1.0 + ((z - zeta) * t).real());
            pe.margin = worst;
            pe.err = (std::abs(z) + grid.r_max()) * terr;
            return pe;
        });
    rep.params["zeta_samples"] = zeta_samples;
    rep.params["mu"] = f.mu();
    // recover the zeta half of the worst (z, zeta) pair at the witness
    if (!std::isnan(rep.worst_margin)) {
        const Complex z = rep.witness;
        const Complex t = eval_raw(f.mu(), f.coeffs(), z, 2) / eval_raw(f.mu(), f.coeffs(), z, 1);
        double worst = kInf;
        Complex worst_zeta{0.0, 0.0};
        for (const Complex& zeta : zetas) {
            const double m = 1.0 + ((z - zeta) * t).real();
            if (m < worst) {
                worst = m;
                worst_zeta = zeta;
            }
        }
        rep.params["witness_zeta"] = {worst_zeta.real(), worst_zeta.imag()};
    }
    return rep;
}

namespace {

CheckReport coefficient_check(std::string name, const FracPowerSeries& f,
                              const CheckOptions& opts,
                              const std::function<double(int)>& bound_of) {
    CheckReport rep;
    rep.check = std::move(name);
    double worst = kInf;
    int worst_n = -1;
    for (int n = 2; n <= f.order(); ++n) {
        const double m = bound_of(n) - std::abs(f.coeff(n));
        if (m < worst) {
            worst = m;
            worst_n = n;
        }
    }
    if (worst_n < 0) { // order-1 series: nothing to test
        rep.verdict = Verdict::pass;
        rep.worst_margin = kInf;
        rep.params["note"] = "no coefficients with n >= 2";
        return rep;
    }
    rep.worst_margin = worst;
    rep.verdict = worst >= -opts.tolerance ? Verdict::pass : Verdict::fail;
    rep.params["worst_n"] = worst_n;
    rep.params["order"] = f.order();
    return rep;
}

} // namespace

CheckReport duren_bound_check(const FracPowerSeries& f, BoundKind kind, const CheckOptions& opts) {
    const bool star = kind == BoundKind::starlike;
    auto rep = coefficient_check(star ? "duren-starlike" : "duren-convex", f, opts,
                                 [star](int n) { return star ? double(n) : 1.0; });
    return rep;
}

CheckReport goodman_bound_check(const FracPowerSeries& f, const CheckOptions& opts) {
    return coefficient_check("goodman", f, opts, [](int n) { return 1.0 / n; });
}

namespace {

PremiseReport premise_by_ratio(double alpha, int order, bool against_n_factorial) {
    if (!(alpha >= 1.0))
        throw std::domain_error("premise: alpha must be >= 1");
    if (order < 2)
        throw std::invalid_argument("premise: order must be >= 2");
    PremiseReport rep;
    // q_n = (alpha)_{n-1} / n!  or  (alpha)_{n-1} / (n-1)!, advanced by ratio
    // so that the equality cases stay exact in floating point
    double q = against_n_factorial ? alpha / 2.0 : alpha;
    for (int n = 2; n <= order; ++n) {
        rep.strict.push_back(q < 1.0);
        rep.non_strict.push_back(q <= 1.0);
        rep.all_strict = rep.all_strict && rep.strict.back();
        rep.all_non_strict = rep.all_non_strict && rep.non_strict.back();
        q *= against_n_factorial ? (alpha + n - 1) / (n + 1) : (alpha + n - 1) / n;
    }
    return rep;
}

} // namespace

PremiseReport starlike_premise(double alpha, int order) {
    return premise_by_ratio(alpha, order, true);
}

PremiseReport convex_premise(double alpha, int order) {
    return premise_by_ratio(alpha, order, false);
}

CheckReport verify_noor_bound(BoundKind kind, const FracPowerSeries& f, double alpha, double beta,
                              const std::vector<double>& radii, const CheckOptions& opts) {
    const bool star = kind == BoundKind::starlike;
    CheckReport rep;
    rep.check = star ? "verify-starlike-bound" : "verify-convex-bound";
    if (radii.empty())
        throw std::invalid_argument("verify_noor_bound: need at least one radius");
    for (double r : radii)
        if (!(r > 0.0 && r < 1.0))
            throw std::domain_error("verify_noor_bound: radii must lie in (0, 1)");

    const PremiseReport premise =
        star ? starlike_premise(alpha, f.order()) : convex_premise(alpha, f.order());
    rep.params["alpha"] = alpha;
    rep.params["beta"] = beta;
    rep.params["mu"] = f.mu();
    rep.params["order"] = f.order();
    rep.params["premise_strict"] = premise.all_strict;
    rep.params["premise_non_strict"] = premise.all_non_strict;
    rep.params["radii"] = radii;

    if (!premise.all_non_strict) {
        rep.verdict = Verdict::premise_not_met;
        rep.params["note"] = "generator premise fails even non-strictly; bound not evaluated";
        return rep;
    }

    const double mu = f.mu();
    std::vector<double> margins, literal_margins, tails;
    double worst = kInf, worst_r = radii.front(), max_tail = 0.0;
    for (double r : radii) {
        const double x = std::pow(r, mu);
        double s = 0.0, w = 1.0, xn = x;
        for (int n = 2; n <= f.order(); ++n) {
            w = w * (n - 1) / (beta + n - 1);
            xn *= x;
            s += w * std::abs(f.coeff(n)) * xn;
        }
        // class-bound continuation of the left side past the truncation
        double tail = 0.0, b = 1.0;
        for (int j = 2; j <= f.order(); ++j)
            b = b * (alpha + j - 2) / (j - 1);
        {
            double wb = w, xb = xn, term;
            for (int n = f.order() + 1; n <= 200000; ++n) {
                wb = wb * (n - 1) / (beta + n - 1);
                b = b * (alpha + n - 2) / (n - 1);
                xb *= x;
                term = wb * b * xb;
                tail += term;
                if (term < 1e-16 * (s + tail))
                    break;
            }
        }
        const double bound =
            star ? starlike_noor_bound(beta, mu, r) : convex_noor_bound(beta, mu, r);
        margins.push_back(bound - s);
        literal_margins.push_back(bound - (r + s));
        tails.push_back(tail);
        max_tail = std::max(max_tail, tail);
        if (margins.back() < worst) {
            worst = margins.back();
            worst_r = r;
        }
    }
    rep.params["tail_margins"] = margins;
    rep.params["literal_margins"] = literal_margins;
    rep.params["left_tail_estimates"] = tails;
    bool literal_all = true;
    for (double m : literal_margins)
        literal_all = literal_all && m >= -opts.tolerance;
    rep.params["literal_pass"] = literal_all;
    rep.worst_margin = worst;
    rep.witness = Complex(worst_r, 0.0);
    rep.tail_note = max_tail;

    const bool tail_ok = worst >= -opts.tolerance;
    if (!premise.all_strict)
        rep.verdict = Verdict::premise_not_met;
    else
        rep.verdict = tail_ok ? Verdict::pass : Verdict::fail;
    rep.params["tail_form_pass"] = tail_ok;
    return rep;
}

CheckReport verify_noor_bound(BoundKind kind, double alpha, double beta, double mu,
                              const std::vector<double>& radii, int order,
                              const CheckOptions& opts) {
    return verify_noor_bound(kind, koebe_frac(alpha, mu, order), alpha, beta, radii, opts);
}

double pre_schwarzian_norm(const FracPowerSeries& f, const DiskGrid& grid) {
    const auto bounds = ring_bounds(f, grid);
    const TailEnvelope env(f);

    const auto value_at = [&](Complex z, const TailBounds& b, double& out) {
        const Complex v = eval_raw(f.mu(), f.coeffs(), z, 1);
        if (!(std::abs(v) > b.f1))
            return false;
        const Complex u = eval_raw(f.mu(), f.coeffs(), z, 2);
        const double r = std::abs(z);
        out = (1.0 - r * r) * std::abs(u / v);
        return true;
    };

    double best = -1.0;
    int best_ring = -1, best_angle = -1;
    for (int i = 0; i < grid.ring_count(); ++i) {
        for (int k = 0; k < grid.angles_per_radius(); ++k) {
            double g;
            if (!value_at(grid.point(i, k), bounds[i], g))
                continue;
            if (g > best) {
                best = g;
                best_ring = i;
                best_angle = k;
            }
        }
    }
    if (best_ring < 0)
        throw degenerate_sample_error("pre_schwarzian_norm: no decidable samples", Complex(0, 0));

    // one round of radial refinement at the maximizing angle
    const auto& radii = grid.radii();
    const double lo = best_ring > 0 ? radii[best_ring - 1] : radii[best_ring] / 2.0;
    const double hi = best_ring + 1 < grid.ring_count() ? radii[best_ring + 1] : radii[best_ring];
    const double theta = 2.0 * M_PI * best_angle / grid.angles_per_radius();
    const Complex dir = std::exp(Complex(0.0, theta));
    constexpr int kRefine = 64;
    for (int j = 0; j <= kRefine; ++j) {
        const double r = lo + (hi - lo) * j / kRefine;
        const TailBounds tail = env.at(r);
        const TailBounds noise = eval_noise(f, r);
        const TailBounds b{tail.f0 + noise.f0, tail.f1 + noise.f1, tail.f2 + noise.f2};
        double g;
        if (value_at(r * dir, b, g))
            best = std::max(best, g);
    }
    return best;
}

} // namespace fracdisk
