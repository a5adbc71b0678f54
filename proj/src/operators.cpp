#include "fracdisk/operators.hpp"

#include "fracdisk/special.hpp"

#include <cmath>

namespace fracdisk {

namespace {

void require_beta(double beta) {
    if (!(beta >= 0.0))
        throw std::domain_error("operator order beta must be >= 0");
}

} // namespace

double ruscheweyh_weight(int n, double beta) {
    require_beta(beta);
    if (n < 1)
        throw std::invalid_argument("ruscheweyh_weight: n must be >= 1");
    double w = 1.0;
    for (int j = 1; j < n; ++j)
        w = w * (beta + j) / j;
    return w;
}

double noor_weight(int n, double beta) {
    require_beta(beta);
    if (n < 1)
        throw std::invalid_argument("noor_weight: n must be >= 1");
    double w = 1.0;
    for (int j = 1; j < n; ++j)
        w = w * j / (beta + j);
    return w;
}

double z_noor_weight(int n, double mu, double beta) {
    require_beta(beta);
    if (n < 2)
        throw std::invalid_argument("z_noor_weight: n must be >= 2");
    // mu n! / (beta+1)_{n-1} as a running ratio to avoid factorial overflow
    double w = mu;
    for (int j = 1; j < n; ++j)
        w = w * (j + 1) / (beta + j);
    return w;
}

double z_noor_weight_gamma(int n, double mu, double beta) {
    require_beta(beta);
    if (n < 2)
        throw std::invalid_argument("z_noor_weight_gamma: n must be >= 2");
    if (beta == 0.0)
        return mu * n; // Gamma(n+1)/Gamma(n) = n
    return mu * gamma_real(n + 1.0) * gamma_real(beta + 1.0) / gamma_real(n + beta);
}

double psi_weight(int n, double alpha, double beta, double a_value) {
    if (n < 2)
        throw std::invalid_argument("psi_weight: n must be >= 2");
    if (!(alpha >= 1.0) || !(beta >= 1.0))
        throw std::domain_error("psi_weight: alpha and beta must be >= 1");
    if (!(a_value > 0.0))
        throw std::domain_error("psi_weight: A(a) must be positive");
    double ratio = 1.0; // (alpha)_{n-1} / (beta)_{n-1}
    for (int j = 0; j < n - 1; ++j)
        ratio = ratio * (alpha + j) / (beta + j);
    return ratio * a_value / n;
}

namespace {

template <class WeightStep>
FracPowerSeries transform(const FracPowerSeries& f, WeightStep step) {
    CoeffVec c(f.order());
    c(0) = 1.0;
    double w = 1.0;
    for (int n = 2; n <= f.order(); ++n) {
        w = step(w, n);
        c(n - 1) = w * f.coeff(n);
    }
    return FracPowerSeries(f.mu(), std::move(c));
}

} // namespace

FracPowerSeries ruscheweyh_frac(const FracPowerSeries& f, double beta) {
    require_beta(beta);
    return transform(f, [beta](double w, int n) { return w * (beta + n - 1) / (n - 1); });
}

FracPowerSeries noor_frac(const FracPowerSeries& f, double beta) {
    require_beta(beta);
    return transform(f, [beta](double w, int n) { return w * (n - 1) / (beta + n - 1); });
}

FracPowerSeries z_noor_derivative(const FracPowerSeries& f, double beta) {
    require_beta(beta);
    const double mu = f.mu();
    CoeffVec c(f.order());
    c(0) = 1.0;
    for (int n = 2; n <= f.order(); ++n)
        c(n - 1) = z_noor_weight(n, mu, beta) * f.coeff(n);
    return FracPowerSeries(mu, std::move(c));
}

CoeffVec z_noor_derivative_coeffs(const FracPowerSeries& f, double beta, LeadingTerm leading) {
    require_beta(beta);
    const double mu = f.mu();
    CoeffVec c(f.order());
    c(0) = leading == LeadingTerm::as_printed ? 1.0 : mu;
    for (int n = 2; n <= f.order(); ++n)
        c(n - 1) = z_noor_weight(n, mu, beta) * f.coeff(n);
    return c;
}

} // namespace fracdisk
