#include "fracdisk/special.hpp"

#include "fracdisk/series.hpp"

#include <algorithm>
#include <cmath>

namespace fracdisk {

double gamma_real(double x) {
    if (!(x > 0.0))
        throw std::domain_error("gamma_real: argument must be positive");
    if (x > 100.0)
        return std::exp(std::lgamma(x));
    return std::tgamma(x);
}

void FoxWrightParams::validate() const {
    if (!(A1 > 0.0 && A2 > 0.0 && B1 > 0.0))
        throw std::domain_error("fox_wright: weights A1, A2, B1 must be positive");
    if (!(a1 > 0.0 && a2 > 0.0 && b1 > 0.0))
        throw std::domain_error("fox_wright: a1, a2, b1 must be positive (no poles on the path)");
    if (!(tol > 0.0))
        throw std::domain_error("fox_wright: tol must be positive");
    if (max_terms < 1)
        throw std::invalid_argument("fox_wright: max_terms must be >= 1");
}

namespace {

// log of term n (without the z^n factor)
double log_term(const FoxWrightParams& p, double n) {
    return std::lgamma(p.a1 + p.A1 * n) + std::lgamma(p.a2 + p.A2 * n) -
           std::lgamma(p.b1 + p.B1 * n) - std::lgamma(n + 1.0);
}

// ratio term_{n+1}/term_n at index n for argument z
double term_ratio(const FoxWrightParams& p, double n, double z) {
    return z * std::exp(log_term(p, n + 1.0) - log_term(p, n));
}

// upper estimate of sup_{m >= n} ratio(m): geometric probes plus the limit
double ratio_majorant(const FoxWrightParams& p, double n, double z) {
    double rho = z;
    for (double m : {n, n + 4.0, n + 16.0, n + 64.0, n + 256.0})
        rho = std::max(rho, term_ratio(p, m, z));
    return rho;
}

} // namespace

FoxWrightResult fox_wright_2psi1(const FoxWrightParams& p, double z) {
    p.validate();
    if (z < 0.0 || z >= 1.0)
        throw std::domain_error("fox_wright: argument must lie in [0, 1)");

    FoxWrightResult res;
    const double lz = z > 0.0 ? std::log(z) : 0.0;
    double term = std::exp(log_term(p, 0.0));
    double sum = term;
    if (z == 0.0) {
        res.value = sum;
        res.terms = 1;
        return res;
    }

    int stalled = 0;
    for (int n = 1; n < p.max_terms; ++n) {
        term = std::exp(log_term(p, n) + n * lz);
        sum += term;
        const double ratio = term_ratio(p, n, z);
        stalled = ratio >= 1.0 ? stalled + 1 : 0;
        if (stalled > 256)
            throw convergence_error("fox_wright: term ratio stays >= 1, series does not converge");
        if (n >= 4 && term < p.tol * sum) {
            const double rho = ratio_majorant(p, n, z);
            if (rho < 1.0) {
                const double tail = 2.0 * term * rho / (1.0 - rho);
                if (tail < p.tol * sum) {
                    res.value = sum;
                    res.tail_bound = tail;
                    res.terms = n + 1;
                    return res;
                }
            }
        }
    }
    throw convergence_error("fox_wright: term budget exhausted before convergence");
}

namespace {

double noor_bound(double a1, double beta, double mu, double r) {
    if (!(beta >= 1.0))
        throw std::domain_error("noor bound: beta must be >= 1");
    if (!(mu >= 1.0))
        throw std::domain_error("noor bound: mu must be >= 1");
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("noor bound: r must lie in (0, 1)");
    FoxWrightParams p;
    p.a1 = a1;
    p.a2 = 1.0;
    p.b1 = beta + 2.0;
    return gamma_real(beta + 1.0) * std::pow(r, 2.0 * mu) *
           fox_wright_2psi1(p, std::pow(r, mu)).value;
}

} // namespace

double starlike_noor_bound(double beta, double mu, double r) {
    return noor_bound(3.0, beta, mu, r);
}

double convex_noor_bound(double beta, double mu, double r) {
    return noor_bound(2.0, beta, mu, r);
}

} // namespace fracdisk
