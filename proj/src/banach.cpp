#include "fracdisk/banach.hpp"

#include "fracdisk/operators.hpp"
#include "fracdisk/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>

namespace fracdisk {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kKernelTol = 1e-9;
constexpr int kPolynomialPad = 8; // trailing zeros marking slices as exact

nlohmann::json complex_to_json(Complex z) {
    return {z.real(), z.imag()};
}

nlohmann::json vec_to_json(const Vec& v) {
    auto arr = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        arr.push_back(complex_to_json(v(i)));
    return arr;
}

} // namespace

BanachModel::BanachModel(Vec functional, double mu, VectorNorm norm)
    : functional_(std::move(functional)), mu_(mu), norm_(norm) {
    if (functional_.size() < 1 || functional_.size() > 8)
        throw std::invalid_argument("BanachModel: dimension must lie in 1..8");
    if (functional_.norm() == 0.0)
        throw std::invalid_argument("BanachModel: the functional must be nonzero");
    if (!(mu_ >= 1.0))
        throw std::invalid_argument("BanachModel: mu must be >= 1");
}

void BanachModel::add_poly(int degree, PolyFn fn) {
    if (degree < 2)
        throw std::invalid_argument("BanachModel: polynomial degrees start at 2");
    for (const auto& p : polys_)
        if (p.degree == degree)
            throw std::invalid_argument("BanachModel: degree already registered");

    // homogeneity self-test on seeded samples
    Rng rng(0x9e3779b9u + static_cast<std::uint64_t>(degree));
    for (int trial = 0; trial < 4; ++trial) {
        Vec w(dim());
        for (int i = 0; i < dim(); ++i)
            w(i) = 0.5 * rng.complex_normal();
        const Complex lambda = rng.uniform(0.3, 1.7) * rng.unit_complex();
        const Complex lhs = fn((lambda * w).eval());
        const Complex rhs = std::pow(lambda, double(degree)) * fn(w);
        const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
        if (std::abs(lhs - rhs) > 1e-10 * scale)
            throw std::invalid_argument(
                "BanachModel: evaluator is not homogeneous of the declared degree");
    }
    polys_.push_back({degree, std::move(fn)});
    std::sort(polys_.begin(), polys_.end(),
              [](const Poly& a, const Poly& b) { return a.degree < b.degree; });
    kind_ = "custom";
}

BanachModel BanachModel::diagonal(int dim, Vec functional, double mu, VectorNorm norm,
                                  const std::vector<Complex>& p) {
    if (static_cast<int>(functional.size()) != dim)
        throw std::invalid_argument("BanachModel: functional length must match dimension");
    BanachModel m(std::move(functional), mu, norm);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const int n = static_cast<int>(i) + 2;
        const Complex pn = p[i];
        m.add_poly(n, [pn, n](const Vec& w) { return pn * std::pow(w(0), double(n)); });
    }
    m.kind_ = "diagonal";
    m.kind_p_ = p;
    return m;
}

BanachModel BanachModel::a_power(int dim, Vec functional, double mu, VectorNorm norm,
                                 const std::vector<Complex>& p) {
    if (static_cast<int>(functional.size()) != dim)
        throw std::invalid_argument("BanachModel: functional length must match dimension");
    BanachModel m(std::move(functional), mu, norm);
    const Vec c = m.functional_coeffs();
    for (std::size_t i = 0; i < p.size(); ++i) {
        const int n = static_cast<int>(i) + 2;
        const Complex pn = p[i];
        m.add_poly(n, [pn, n, c](const Vec& w) {
            return pn * std::pow((c.array() * w.array()).sum(), double(n));
        });
    }
    m.kind_ = "a-power";
    m.kind_p_ = p;
    return m;
}

Complex BanachModel::poly(int degree, const Vec& w) const {
    for (const auto& p : polys_)
        if (p.degree == degree)
            return p.fn(w);
    return {0.0, 0.0};
}

int BanachModel::max_degree() const {
    return polys_.empty() ? 1 : polys_.back().degree;
}

double BanachModel::norm(const Vec& w) const {
    if (norm_ == VectorNorm::euclidean)
        return w.norm();
    return w.cwiseAbs().maxCoeff();
}

BanachModel BanachModel::perturbation_scaled(double eps) const {
    BanachModel m(functional_, mu_, norm_);
    for (const auto& p : polys_) {
        auto fn = p.fn;
        m.polys_.push_back({p.degree, [fn, eps](const Vec& w) { return eps * fn(w); }});
    }
    m.kind_ = kind_ == "custom" ? "custom" : kind_;
    if (!kind_p_.empty()) {
        m.kind_p_ = kind_p_;
        for (auto& v : m.kind_p_)
            v *= eps;
    }
    return m;
}

BanachModel BanachModel::scaled(Complex lambda) const {
    if (lambda == Complex(0.0, 0.0))
        throw std::invalid_argument("BanachModel: scaling must be nonzero");
    BanachModel m(lambda * functional_, mu_, norm_);
    for (const auto& p : polys_) {
        auto fn = p.fn;
        m.polys_.push_back({p.degree, [fn, lambda](const Vec& w) { return lambda * fn(w); }});
    }
    m.kind_ = "custom";
    return m;
}

std::string BanachModel::to_json() const {
    if (kind_ != "diagonal" && kind_ != "a-power")
        throw std::invalid_argument("BanachModel: only built-in families serialize");
    nlohmann::json doc;
    doc["d"] = dim();
    doc["A"] = vec_to_json(functional_);
    doc["mu"] = mu_;
    doc["norm"] = norm_ == VectorNorm::euclidean ? "euclidean" : "max";
    nlohmann::json polys;
    polys["kind"] = kind_;
    auto arr = nlohmann::json::array();
    for (const Complex& v : kind_p_) {
        if (v.imag() == 0.0)
            arr.push_back(v.real());
        else
            arr.push_back(complex_to_json(v));
    }
    polys["p"] = std::move(arr);
    doc["polys"] = std::move(polys);
    return doc.dump(2) + "\n";
}

BanachModel BanachModel::from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("model document: ") + e.what());
    }
    for (const char* key : {"d", "A", "mu", "norm", "polys"})
        if (!doc.contains(key))
            throw std::invalid_argument(std::string("model document: missing field ") + key);
    const int d = doc["d"].get<int>();
    const auto& a = doc["A"];
    if (!a.is_array() || static_cast<int>(a.size()) != d)
        throw std::invalid_argument("model document: A must list d complex entries");
    Vec c(d);
    for (int i = 0; i < d; ++i) {
        const auto& e = a[i];
        if (e.is_number())
            c(i) = Complex(e.get<double>(), 0.0);
        else if (e.is_array() && e.size() == 2)
            c(i) = Complex(e[0].get<double>(), e[1].get<double>());
        else
            throw std::invalid_argument("model document: A entries must be numbers or [re, im]");
    }
    const std::string normname = doc["norm"].get<std::string>();
    VectorNorm norm;
    if (normname == "euclidean")
        norm = VectorNorm::euclidean;
    else if (normname == "max")
        norm = VectorNorm::max;
    else
        throw std::invalid_argument("model document: norm must be euclidean or max");
    const auto& polys = doc["polys"];
    const std::string kind = polys.at("kind").get<std::string>();
    std::vector<Complex> p;
    for (const auto& e : polys.at("p")) {
        if (e.is_number())
            p.emplace_back(e.get<double>(), 0.0);
        else if (e.is_array() && e.size() == 2)
            p.emplace_back(e[0].get<double>(), e[1].get<double>());
        else
            throw std::invalid_argument("model document: p entries must be numbers or [re, im]");
    }
    const double mu = doc["mu"].get<double>();
    if (kind == "diagonal")
        return diagonal(d, std::move(c), mu, norm, p);
    if (kind == "a-power")
        return a_power(d, std::move(c), mu, norm, p);
    throw std::invalid_argument("model document: polys.kind must be diagonal or a-power");
}

FracPowerSeries slice(const BanachModel& model, const Vec& a, SliceExponent exponent) {
    if (a.size() != model.dim())
        throw std::invalid_argument("slice: direction dimension mismatch");
    if (std::abs(model.norm(a) - 1.0) > 1e-9)
        throw std::invalid_argument("slice: direction must be a unit vector");
    const Complex aa = model.functional(a);
    if (std::abs(aa) <= kKernelTol)
        throw kernel_direction_error("slice: direction lies in the kernel of A");
    const int deg = model.max_degree();
    CoeffVec c = CoeffVec::Zero(std::max(deg, 1) + kPolynomialPad);
    c(0) = 1.0;
    for (int n = 2; n <= deg; ++n)
        c(n - 1) = model.poly(n, a) / aa;
    const double mu = exponent == SliceExponent::printed ? model.mu() : 1.0;
    return FracPowerSeries(mu, std::move(c));
}

SliceFamily SliceFamily::sample(const BanachModel& model, int count, std::uint64_t seed) {
    if (count < 1)
        throw std::invalid_argument("SliceFamily: count must be >= 1");
    SliceFamily fam;
    Rng rng(seed);
    int guard = 0;
    while (static_cast<int>(fam.directions.size()) < count) {
        if (++guard > 100 * count)
            throw std::runtime_error("SliceFamily: functional rejects nearly every direction");
        Vec w(model.dim());
        for (int i = 0; i < model.dim(); ++i)
            w(i) = rng.complex_normal();
        const double nw = model.norm(w);
        if (nw < 1e-6)
            continue;
        w /= nw;
        if (std::abs(model.functional(w)) <= kKernelTol)
            continue;
        fam.directions.push_back(std::move(w));
    }
    return fam;
}

std::vector<Vec> kernel_directions(const BanachModel& model, int count) {
    std::vector<Vec> out;
    const Vec& c = model.functional_coeffs();
    const int d = model.dim();
    // coordinate directions of vanishing functional components are exact
    // unit kernel vectors
    for (int i = 0; i < d && static_cast<int>(out.size()) < count; ++i) {
        if (c(i) == Complex(0.0, 0.0)) {
            Vec a = Vec::Zero(d);
            a(i) = 1.0;
            out.push_back(std::move(a));
        }
    }
    if (d < 2)
        return out; // otherwise the kernel meets the sphere only from dimension 2 on
    for (int i = 0; i < d && static_cast<int>(out.size()) < count; ++i) {
        for (int j = i + 1; j < d && static_cast<int>(out.size()) < count; ++j) {
            if (c(i) == Complex(0.0, 0.0) || c(j) == Complex(0.0, 0.0))
                continue;
            // the swap (c_j, -c_i) makes A(a) = c_i c_j - c_j c_i cancel
            // bit-exactly; scaling by a power of two preserves that, so the
            // returned vectors have norm in (0.5, 1] rather than exactly 1
            Vec a = Vec::Zero(d);
            a(i) = c(j);
            a(j) = -c(i);
            const double na = model.norm(a);
            if (na == 0.0)
                continue;
            out.push_back(a / std::exp2(std::ceil(std::log2(na))));
        }
    }
    return out;
}

namespace {

void merge_worst(CheckReport& rep, const CheckReport& sub, int index, int& worst_index) {
    if (std::isnan(rep.worst_margin) ||
        (!std::isnan(sub.worst_margin) && sub.worst_margin < rep.worst_margin)) {
        rep.worst_margin = sub.worst_margin;
        rep.witness = sub.witness;
        worst_index = index;
    }
    rep.tail_note = std::max(rep.tail_note, sub.tail_note);
}

} // namespace

CheckReport ucv_membership(const BanachModel& model, const SliceFamily& dirs, const DiskGrid& grid,
                           const CheckOptions& opts) {
    if (dirs.directions.empty())
        throw std::invalid_argument("ucv_membership: need at least one direction");
    CheckReport rep;
    rep.check = "ucv-membership";
    rep.verdict = Verdict::pass;
    int worst_dir = -1;
    for (std::size_t i = 0; i < dirs.directions.size(); ++i) {
        const CheckReport sub = is_ucv(slice(model, dirs.directions[i]), grid, opts);
        if (sub.verdict != Verdict::pass)
            rep.verdict = Verdict::fail;
        merge_worst(rep, sub, static_cast<int>(i), worst_dir);
    }
    rep.params["directions"] = dirs.directions.size();
    if (worst_dir >= 0) {
        rep.params["worst_direction_index"] = worst_dir;
        rep.params["worst_direction"] = vec_to_json(dirs.directions[worst_dir]);
    }
    rep.params["mu"] = model.mu();
    return rep;
}

CheckReport coefficient_bound_check(const BanachModel& model, const SliceFamily& dirs,
                                    const DiskGrid& grid, const CheckOptions& opts) {
    CheckReport rep;
    rep.check = "slice-coefficient-bound";
    const CheckReport membership = ucv_membership(model, dirs, grid, opts);
    const bool premise = membership.passed();

    double worst = kInf;
    int worst_n = -1, worst_dir = -1;
    for (std::size_t i = 0; i < dirs.directions.size(); ++i) {
        const Vec& a = dirs.directions[i];
        const double aa = std::abs(model.functional(a));
        for (int n = 2; n <= model.max_degree(); ++n) {
            const double m = aa / n - std::abs(model.poly(n, a));
            if (m < worst) {
                worst = m;
                worst_n = n;
                worst_dir = static_cast<int>(i);
            }
        }
    }
    if (worst_n < 0) {
        rep.verdict = Verdict::pass;
        rep.worst_margin = kInf;
        rep.params["note"] = "model has no polynomial part";
        return rep;
    }
    rep.worst_margin = worst;
    rep.params["worst_n"] = worst_n;
    rep.params["worst_direction_index"] = worst_dir;
    rep.params["membership_verdict"] = to_string(membership.verdict);
    const bool bound_ok = worst >= -opts.tolerance;
    if (!premise) {
        rep.verdict = Verdict::premise_not_met;
        // a failed bound alongside failed membership is the contrapositive
        // of the coefficient bound, worth recording
        rep.params["consistent_contrapositive"] = !bound_ok;
    } else {
        rep.verdict = bound_ok ? Verdict::pass : Verdict::fail;
    }
    return rep;
}

CheckReport kernel_vanishing_check(const BanachModel& model, const std::vector<Vec>& kernel_dirs,
                                   const SliceFamily& reference, const DiskGrid& grid,
                                   const CheckOptions& opts) {
    CheckReport rep;
    rep.check = "kernel-vanishing";
    // context for the corollary: whether the coefficient bound holds off the
    // kernel. Recorded, not gating: a nonvanishing kernel polynomial is
    // itself the exhibit of non-membership.
    const CheckReport ref = coefficient_bound_check(model, reference, grid, opts);
    rep.params["reference_verdict"] = to_string(ref.verdict);
    if (kernel_dirs.empty()) {
        rep.verdict = Verdict::pass;
        rep.worst_margin = kInf;
        rep.params["note"] = "no kernel directions to sample";
        return rep;
    }
    constexpr double vanish_tol = 1e-10;
    double worst_p = 0.0;
    int worst_n = -1, worst_dir = -1;
    for (std::size_t i = 0; i < kernel_dirs.size(); ++i) {
        const Vec& a = kernel_dirs[i];
        if (std::abs(model.functional(a)) > 1e-12)
            throw std::invalid_argument("kernel_vanishing_check: direction is not in the kernel");
        for (int n = 2; n <= model.max_degree(); ++n) {
            const double p = std::abs(model.poly(n, a));
            if (p > worst_p) {
                worst_p = p;
                worst_n = n;
                worst_dir = static_cast<int>(i);
            }
        }
    }
    rep.worst_margin = vanish_tol - worst_p;
    rep.verdict = rep.worst_margin >= -opts.tolerance ? Verdict::pass : Verdict::fail;
    rep.params["max_poly_magnitude"] = worst_p;
    rep.params["kernel_directions"] = kernel_dirs.size();
    if (worst_n >= 0) {
        rep.params["worst_n"] = worst_n;
        rep.params["worst_direction_index"] = worst_dir;
    }
    return rep;
}

CheckReport sufficient_condition_check(const BanachModel& model, const std::vector<Vec>& w_samples,
                                       const CheckOptions& opts) {
    if (w_samples.empty())
        throw std::invalid_argument("sufficient_condition_check: need samples");
    CheckReport rep;
    rep.check = "sufficient-condition";
    double worst = kInf;
    int worst_idx = -1;
    long skipped = 0;
    for (std::size_t i = 0; i < w_samples.size(); ++i) {
        const Vec& w = w_samples[i];
        const double z = model.norm(w);
        if (z == 0.0) {
            ++skipped;
            continue;
        }
        if (z >= 1.0)
            throw std::domain_error("sufficient_condition_check: samples must satisfy ||w|| < 1");
        const Vec a = w / z;
        Complex q;
        try {
            const FracPowerSeries s = slice(model, a);
            const Complex d1 = evaluate_d1(s, Complex(z, 0.0));
            if (d1 == Complex(0.0, 0.0))
                throw degenerate_sample_error("sufficient_condition_check: F'(w)(w) vanishes",
                                              Complex(z, 0.0));
            q = Complex(z, 0.0) * evaluate_d2(s, Complex(z, 0.0)) / d1;
        } catch (const kernel_direction_error&) {
            throw degenerate_sample_error("sufficient_condition_check: sample direction in kernel",
                                          Complex(z, 0.0));
        }
        const double m = 1.0 + q.real() - std::abs(q);
        if (m < worst) {
            worst = m;
            worst_idx = static_cast<int>(i);
        }
    }
    if (worst_idx < 0) {
        rep.verdict = Verdict::pass;
        rep.params["note"] = "all samples at the origin";
        return rep;
    }
    rep.worst_margin = worst;
    rep.witness = Complex(model.norm(w_samples[worst_idx]), 0.0);
    rep.verdict = worst >= -opts.tolerance ? Verdict::pass : Verdict::fail;
    rep.params["samples"] = w_samples.size();
    rep.params["skipped_origin_samples"] = skipped;
    rep.params["worst_sample_index"] = worst_idx;
    return rep;
}

Eigen::VectorXd quasi_hadamard(const std::vector<Eigen::VectorXd>& families) {
    if (families.empty())
        throw std::invalid_argument("quasi_hadamard: need at least one family");
    const Eigen::Index len = families.front().size();
    for (const auto& f : families)
        if (f.size() != len)
            throw std::invalid_argument("quasi_hadamard: family lengths must match");
    Eigen::VectorXd h = Eigen::VectorXd::Ones(len);
    for (const auto& f : families)
        h = h.cwiseProduct(f);
    return h;
}

CheckReport quasi_class_check(const std::vector<Eigen::VectorXd>& p_families,
                              const std::vector<Eigen::VectorXd>& phi_families,
                              const std::vector<double>& a_values, const CheckOptions& opts) {
    const int l = static_cast<int>(p_families.size());
    const int s = static_cast<int>(phi_families.size());
    if (l + s < 1)
        throw std::invalid_argument("quasi_class_check: need at least one family");
    if (static_cast<int>(a_values.size()) != l + s)
        throw std::invalid_argument("quasi_class_check: need one A value per family");

    std::vector<Eigen::VectorXd> all = p_families;
    all.insert(all.end(), phi_families.begin(), phi_families.end());

    CheckReport rep;
    rep.check = "quasi-hadamard-class";
    rep.params["l"] = l;
    rep.params["s"] = s;

    // premise: sum_n n P_n <= A for every input family
    for (std::size_t j = 0; j < all.size(); ++j) {
        double lhs = 0.0;
        for (Eigen::Index i = 0; i < all[j].size(); ++i)
            lhs += (static_cast<double>(i) + 2.0) * all[j](i);
        if (lhs > a_values[j] + 1e-12 * std::max(1.0, a_values[j])) {
            rep.verdict = Verdict::premise_not_met;
            rep.params["violating_family"] = j;
            rep.params["premise_excess"] = lhs - a_values[j];
            return rep;
        }
    }

    const Eigen::VectorXd h = quasi_hadamard(all);
    double lhs = 0.0;
    for (Eigen::Index i = 0; i < h.size(); ++i)
        lhs += std::pow(static_cast<double>(i) + 2.0, double(l + s)) * h(i);
    double rhs = 1.0;
    for (double a : a_values)
        rhs *= a;
    rep.worst_margin = rhs - lhs;
    rep.verdict = rep.worst_margin >= -opts.tolerance ? Verdict::pass : Verdict::fail;
    rep.params["lhs"] = lhs;
    rep.params["rhs"] = rhs;
    return rep;
}

CheckReport boundedness_check(const BanachModel& model, const SliceFamily& dirs, double beta,
                              const DiskGrid& grid, const CheckOptions& opts) {
    if (!(beta >= 0.0))
        throw std::domain_error("boundedness_check: beta must be >= 0");
    if (dirs.directions.empty())
        throw std::invalid_argument("boundedness_check: need at least one direction");
    CheckReport rep;
    rep.check = "noor-boundedness";
    double worst = kInf, worst_literal = kInf;
    Complex worst_z{0.0, 0.0};
    int worst_dir = -1;
    for (std::size_t i = 0; i < dirs.directions.size(); ++i) {
        const FracPowerSeries fa = slice(model, dirs.directions[i]);
        const double tnorm = pre_schwarzian_norm(fa, grid);
        const FracPowerSeries g = noor_frac(fa, beta);
        for (int ring = 0; ring < grid.ring_count(); ++ring) {
            const double r = grid.radii()[ring];
            const double rhs_base = 1.0 + tnorm / (1.0 - r * r);
            for (int k = 0; k < grid.angles_per_radius(); ++k) {
                const Complex z = grid.point(ring, k);
                const Complex d1 = eval_raw(g.mu(), g.coeffs(), z, 1);
                if (d1 == Complex(0.0, 0.0))
                    throw degenerate_sample_error("boundedness_check: G' vanishes at a sample", z);
                const double lhs = std::abs(z * eval_raw(g.mu(), g.coeffs(), z, 2) / d1);
                const double m = rhs_base - lhs;
                if (m < worst) {
                    worst = m;
                    worst_z = z;
                    worst_dir = static_cast<int>(i);
                }
                // the statement's literal reading |I F| <= 1 + M ||F||_T,
                // logged alongside the proof's pointwise form
                worst_literal = std::min(
                    worst_literal, rhs_base - std::abs(eval_raw(g.mu(), g.coeffs(), z, 0)));
            }
        }
    }
    rep.worst_margin = worst;
    rep.witness = worst_z;
    rep.verdict = worst >= -opts.tolerance ? Verdict::pass : Verdict::fail;
    rep.params["beta"] = beta;
    rep.params["directions"] = dirs.directions.size();
    rep.params["worst_direction_index"] = worst_dir;
    rep.params["literal_margin"] = worst_literal;
    rep.params["literal_pass"] = worst_literal >= -opts.tolerance;
    return rep;
}

CheckReport compactness_decay_check(const BanachModel& model, const Vec& a, double beta,
                                    const DiskGrid& grid, const std::vector<double>& scales,
                                    const CheckOptions& opts) {
    if (scales.size() < 2)
        throw std::invalid_argument("compactness_decay_check: need at least two scales");
    for (std::size_t i = 0; i + 1 < scales.size(); ++i)
        if (!(scales[i] > 0.0) || !(scales[i + 1] < scales[i]))
            throw std::invalid_argument(
                "compactness_decay_check: scales must be positive and strictly decreasing");

    CheckReport rep;
    rep.check = "compactness-decay";
    std::vector<double> tnorms;
    tnorms.reserve(scales.size());
    for (double eps : scales) {
        const FracPowerSeries fm = slice(model.perturbation_scaled(eps), a);
        tnorms.push_back(pre_schwarzian_norm(noor_frac(fm, beta), grid));
    }
    rep.params["beta"] = beta;
    rep.params["scales"] = scales;
    rep.params["t_norms"] = tnorms;

    constexpr double jitter = 1e-6;
    double worst_jitter = 0.0;
    for (std::size_t i = 0; i + 1 < tnorms.size(); ++i)
        worst_jitter = std::max(worst_jitter, tnorms[i + 1] - tnorms[i]);
    const bool monotone = worst_jitter <= jitter;
    rep.params["max_increase"] = worst_jitter;

    const double t_first = tnorms.front();
    const double t_last = tnorms.back();
    if (t_first == 0.0) {
        rep.verdict = Verdict::pass;
        rep.worst_margin = 0.0;
        return rep;
    }
    rep.worst_margin = monotone ? 1e-3 * t_first - t_last : -worst_jitter;
    rep.verdict =
        (monotone && t_last < 1e-3 * t_first) ? Verdict::pass : Verdict::fail;
    (void)opts;
    return rep;
}

CheckReport noor_distortion_check(const BanachModel& model, const Vec& a, double alpha,
                                  double beta, const DiskGrid& grid, const CheckOptions& opts) {
    CheckReport rep;
    rep.check = "noor-distortion";
    rep.params["alpha"] = alpha;
    rep.params["beta"] = beta;
    if (!(alpha >= 1.0) || !(beta >= 1.0)) {
        rep.verdict = Verdict::premise_not_met;
        rep.params["note"] = "alpha >= 1 and beta >= 1 required";
        return rep;
    }
    const Complex aa = model.functional(a);
    if (std::abs(aa) <= kKernelTol)
        throw kernel_direction_error("noor_distortion_check: direction lies in the kernel of A");
    const double a_mag = std::abs(aa);

    // slice coefficient premise |P_n(a)| <= |A(a)|/n
    for (int n = 2; n <= model.max_degree(); ++n) {
        const double p = std::abs(model.poly(n, a));
        if (p > a_mag / n + 1e-12 * std::max(1.0, a_mag)) {
            rep.verdict = Verdict::premise_not_met;
            rep.params["note"] = "slice coefficients exceed |A(a)|/n";
            rep.params["violating_n"] = n;
            return rep;
        }
    }

    const double mu = model.mu();
    const int deg = std::max(model.max_degree(), 1);
    CoeffVec psi_form = CoeffVec::Zero(deg + kPolynomialPad);
    CoeffVec noor_form = CoeffVec::Zero(deg + kPolynomialPad);
    psi_form(0) = 1.0;
    noor_form(0) = 1.0;
    for (int n = 2; n <= deg; ++n) {
        const Complex pn = model.poly(n, a);
        psi_form(n - 1) = psi_weight(n, alpha, beta, a_mag) * pn;
        noor_form(n - 1) = noor_weight(n, beta) * pn / aa;
    }
    const double psi2 = psi_weight(2, alpha, beta, a_mag);
    rep.params["bound_coefficient"] = psi2;

    double worst_psi = kInf, worst_noor = kInf;
    Complex worst_z{0.0, 0.0};
    for (int ring = 0; ring < grid.ring_count(); ++ring) {
        const double r = grid.radii()[ring];
        const double rhs = psi2 * std::pow(r, 2.0 * mu);
        for (int k = 0; k < grid.angles_per_radius(); ++k) {
            const Complex z = grid.point(ring, k);
            const double lhs_psi = std::abs(std::abs(eval_raw(mu, psi_form, z, 0)) - r);
            const double lhs_noor = std::abs(std::abs(eval_raw(mu, noor_form, z, 0)) - r);
            if (rhs - lhs_psi < worst_psi) {
                worst_psi = rhs - lhs_psi;
                worst_z = z;
            }
            worst_noor = std::min(worst_noor, rhs - lhs_noor);
        }
    }
    rep.worst_margin = worst_psi;
    rep.witness = worst_z;
    rep.verdict = worst_psi >= -opts.tolerance ? Verdict::pass : Verdict::fail;
    rep.params["noor_form_margin"] = worst_noor;
    rep.params["noor_form_pass"] = worst_noor >= -opts.tolerance;
    rep.params["mu"] = mu;
    return rep;
}

} // namespace fracdisk
