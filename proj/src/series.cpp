#include "fracdisk/series.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace fracdisk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// principal-branch power z^mu = exp(mu Log z); mu = 1 short-circuits so
// integer-order series evaluate without exp/log round-trip error
Complex pow_mu(Complex z, double mu) {
    if (mu == 1.0)
        return z;
    return std::exp(mu * std::log(z));
}

} // namespace

double pochhammer(double x, int k) {
    if (k < 0)
        throw std::invalid_argument("pochhammer: k must be nonnegative");
    double p = 1.0;
    for (int j = 0; j < k; ++j)
        p *= x + j;
    return p;
}

FracPowerSeries::FracPowerSeries(double mu, CoeffVec coeffs)
    : mu_(mu), coeffs_(std::move(coeffs)) {
    if (!(mu_ >= 1.0))
        throw std::invalid_argument("FracPowerSeries: mu must be >= 1");
    if (coeffs_.size() < 1)
        throw std::invalid_argument("FracPowerSeries: need at least the n = 1 coefficient");
    if (coeffs_(0) != Complex(1.0, 0.0))
        throw std::invalid_argument("FracPowerSeries: a_1 must equal 1 exactly");
}

FracPowerSeries FracPowerSeries::identity(double mu, int order) {
    if (order < 1)
        throw std::invalid_argument("identity: order must be >= 1");
    CoeffVec c = CoeffVec::Zero(order);
    c(0) = 1.0;
    return FracPowerSeries(mu, std::move(c));
}

FracPowerSeries koebe_frac(double alpha, double mu, int order) {
    if (!(alpha >= 1.0))
        throw std::domain_error("koebe_frac: alpha must be >= 1");
    if (!(mu >= 1.0))
        throw std::domain_error("koebe_frac: mu must be >= 1");
    if (order < 1)
        throw std::invalid_argument("koebe_frac: order must be >= 1");
    CoeffVec c(order);
    c(0) = 1.0;
    double a = 1.0;
    // multiply before dividing keeps integer alpha integer-exact
    for (int n = 2; n <= order; ++n) {
        a = a * (alpha + n - 2) / (n - 1);
        c(n - 1) = a;
    }
    return FracPowerSeries(mu, std::move(c));
}

Complex eval_raw(double mu, const CoeffVec& coeffs, Complex z, int deriv) {
    const int n = static_cast<int>(coeffs.size());
    const Complex w = pow_mu(z, mu);
    Complex acc{0.0, 0.0};
    for (int k = n; k >= 1; --k) {
        double wk = 1.0;
        if (deriv == 1)
            wk = mu * k;
        else if (deriv == 2)
            wk = mu * k * (mu * k - 1.0);
        acc = acc * w + wk * coeffs(k - 1);
    }
    // the Horner loop leaves sum_k wk a_k w^{k-1}; restore the exponent
    // mu k - deriv without a w * z round trip when mu = 1
    if (mu == 1.0) {
        if (deriv == 0)
            acc *= z;
        else if (deriv == 2)
            acc /= z;
        return acc;
    }
    acc *= w;
    if (deriv == 1)
        acc /= z;
    else if (deriv == 2)
        acc /= z * z;
    return acc;
}

namespace {

void require_inside_disk(Complex z) {
    if (std::abs(z) >= 1.0)
        throw std::domain_error("series evaluation requires |z| < 1");
}

bool is_integer(double x) {
    return x == std::floor(x);
}

} // namespace

Complex evaluate(const FracPowerSeries& f, Complex z) {
    require_inside_disk(z);
    if (z == Complex(0.0, 0.0))
        return {0.0, 0.0};
    return eval_raw(f.mu(), f.coeffs(), z, 0);
}

Complex evaluate_d1(const FracPowerSeries& f, Complex z) {
    require_inside_disk(z);
    if (z == Complex(0.0, 0.0)) {
        if (!is_integer(f.mu()))
            throw std::domain_error("evaluate_d1: z = 0 is a branch point for non-integer mu");
        // termwise limit: only the exponent mu n - 1 = 0 term survives
        return f.mu() == 1.0 ? f.coeff(1) : Complex(0.0, 0.0);
    }
    return eval_raw(f.mu(), f.coeffs(), z, 1);
}

Complex evaluate_d2(const FracPowerSeries& f, Complex z) {
    require_inside_disk(z);
    if (z == Complex(0.0, 0.0)) {
        if (!is_integer(f.mu()))
            throw std::domain_error("evaluate_d2: z = 0 is a branch point for non-integer mu");
        if (f.mu() == 1.0)
            return f.order() >= 2 ? 2.0 * f.coeff(2) : Complex(0.0, 0.0);
        if (f.mu() == 2.0)
            return 2.0 * f.coeff(1);
        return {0.0, 0.0};
    }
    return eval_raw(f.mu(), f.coeffs(), z, 2);
}

FracPowerSeries hadamard(const FracPowerSeries& f, const FracPowerSeries& g) {
    if (f.mu() != g.mu())
        throw std::invalid_argument("hadamard: series must share mu");
    const int n = std::min(f.order(), g.order());
    CoeffVec c = f.coeffs().head(n).cwiseProduct(g.coeffs().head(n));
    return FracPowerSeries(f.mu(), std::move(c));
}

namespace {

bool leq_with_slack(double value, double bound) {
    return value <= bound + 1e-12 * std::max(1.0, bound);
}

} // namespace

bool in_class_a_mu(const FracPowerSeries& f, double alpha) {
    if (!(alpha >= 1.0))
        throw std::domain_error("in_class_a_mu: alpha must be >= 1");
    double bound = 1.0;
    for (int n = 2; n <= f.order(); ++n) {
        bound = bound * (alpha + n - 2) / (n - 1);
        if (!leq_with_slack(std::abs(f.coeff(n)), bound))
            return false;
    }
    return true;
}

bool in_class_x_mu(const FracPowerSeries& f, double alpha) {
    if (!in_class_a_mu(f, alpha))
        return false;
    for (int n = 2; n <= f.order(); ++n) {
        const Complex a = f.coeff(n);
        if (std::abs(a.imag()) > 1e-12 || a.real() > 1e-12)
            return false;
    }
    return true;
}

TailEnvelope::TailEnvelope(const FracPowerSeries& f)
    : growth_(0.0), mu_(f.mu()), order_(f.order()) {
    const int lo = std::max(2, order_ - 7);
    for (int n = lo; n <= order_; ++n) {
        const double an = std::abs(f.coeff(n));
        if (an > 0.0)
            growth_ = std::max(growth_, std::pow(an, 1.0 / n));
    }
}

TailBounds TailEnvelope::at(double r) const {
    TailBounds t;
    if (growth_ == 0.0)
        return t;
    const double q = growth_ * std::pow(r, mu_);
    if (q >= 1.0) {
        t.f0 = t.f1 = t.f2 = kInf;
        return t;
    }
    const double n1 = order_ + 1.0;
    const double qn = std::pow(q, n1);
    const double d = 1.0 - q;
    // closed forms of sum_{n>N} q^n, n q^n, n^2 q^n; mu n (mu n - 1) <= mu^2 n^2
    t.f0 = qn / d;
    t.f1 = (mu_ / r) * qn * (n1 - (n1 - 1.0) * q) / (d * d);
    const double nn = n1 - 1.0;
    t.f2 = (mu_ * mu_ / (r * r)) * qn *
           (n1 * n1 - (2.0 * nn * nn + 2.0 * nn - 1.0) * q + nn * nn * q * q) / (d * d * d);
    return t;
}

TailBounds eval_noise(const FracPowerSeries& f, double r) {
    const double x = std::pow(r, f.mu());
    double s0 = 0.0, s1 = 0.0, s2 = 0.0;
    double xn = 1.0;
    for (int n = 1; n <= f.order(); ++n) {
        xn *= x;
        const double an = std::abs(f.coeff(n)) * xn;
        s0 += an;
        s1 += f.mu() * n * an / r;
        s2 += f.mu() * n * std::abs(f.mu() * n - 1.0) * an / (r * r);
    }
    const double c = 4.0 * f.order() * std::numeric_limits<double>::epsilon();
    return {c * s0, c * s1, c * s2};
}

DiskGrid::DiskGrid(std::vector<double> radii, int angles_per_radius)
    : radii_(std::move(radii)), angles_(angles_per_radius) {
    if (radii_.empty())
        throw std::invalid_argument("DiskGrid: need at least one radius");
    if (angles_ < 8)
        throw std::invalid_argument("DiskGrid: need at least 8 angles per radius");
    double prev = 0.0;
    for (double r : radii_) {
        if (!(r > prev))
            throw std::invalid_argument("DiskGrid: radii must be positive and strictly ascending");
        prev = r;
    }
    if (!(radii_.back() < 1.0))
        throw std::invalid_argument("DiskGrid: radii must stay below 1");
}

DiskGrid DiskGrid::standard(double r_max, int angles_per_radius) {
    if (!(r_max > 0.0 && r_max < 1.0))
        throw std::invalid_argument("DiskGrid: r_max must lie in (0, 1)");
    std::vector<double> rs;
    for (int k = 1;; ++k) {
        const double r = 0.05 * k;
        if (r > std::min(r_max, 0.95) + 1e-12)
            break;
        rs.push_back(r);
    }
    if (rs.empty())
        rs.push_back(r_max);
    if (r_max >= 0.99 - 1e-12 && rs.back() < 0.99 - 1e-12)
        rs.push_back(0.99);
    if (r_max > rs.back() + 1e-12)
        rs.push_back(r_max);
    return DiskGrid(std::move(rs), angles_per_radius);
}

Complex DiskGrid::point(int ring, int angle) const {
    const double theta = 2.0 * M_PI * angle / angles_;
    return radii_[ring] * std::exp(Complex(0.0, theta));
}

std::string to_json(const FracPowerSeries& f) {
    nlohmann::json doc;
    doc["mu"] = f.mu();
    doc["N"] = f.order();
    auto coeffs = nlohmann::json::array();
    for (int n = 1; n <= f.order(); ++n)
        coeffs.push_back({f.coeff(n).real(), f.coeff(n).imag()});
    doc["coeffs"] = std::move(coeffs);
    return doc.dump(2) + "\n";
}

FracPowerSeries series_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("series document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("mu") || !doc.contains("N") || !doc.contains("coeffs"))
        throw std::invalid_argument("series document: need fields mu, N, coeffs");
    const double mu = doc["mu"].get<double>();
    const int order = doc["N"].get<int>();
    const auto& coeffs = doc["coeffs"];
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order)
        throw std::invalid_argument("series document: coeffs length must equal N");
    CoeffVec c(order);
    for (int i = 0; i < order; ++i) {
        const auto& entry = coeffs[i];
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("series document: coeffs entries must be [re, im]");
        c(i) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
    return FracPowerSeries(mu, std::move(c));
}

} // namespace fracdisk
