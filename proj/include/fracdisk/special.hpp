#ifndef FRACDISK_SPECIAL_HPP
#define FRACDISK_SPECIAL_HPP

#include <stdexcept>

namespace fracdisk {

/// Gamma function on the positive axis, relative error within 1e-12.
/// Computed in log space for large arguments; x <= 0 is out of scope.
double gamma_real(double x);

/// Parameters of the Fox-Wright series
///   sum_{n>=0} Gamma(a1 + A1 n) Gamma(a2 + A2 n) / Gamma(b1 + B1 n) z^n / n!.
/// All Gamma arguments must stay positive along the summation path, which
/// for positive weights reduces to a1, a2, b1 > 0.
struct FoxWrightParams {
    double a1 = 1.0, A1 = 1.0;
    double a2 = 1.0, A2 = 1.0;
    double b1 = 1.0, B1 = 1.0;
    double tol = 1e-12;
    int max_terms = 10000;

    void validate() const;
};

struct FoxWrightResult {
    double value = 0.0;
    double tail_bound = 0.0; // geometric majorant of the omitted remainder
    int terms = 0;           // summed terms (index of the first omitted one)
};

/// Partial sum with a two-part stopping rule: the running term and a
/// geometric tail majorant must both drop below tol times the sum.
/// Throws convergence_error when the term ratio will not fall below 1 or
/// the term budget runs out.
FoxWrightResult fox_wright_2psi1(const FoxWrightParams& p, double z);

/// Gamma(beta+1) r^{2 mu} 2Psi1[(3,1)(1,1); (beta+2,1)](r^mu): majorant of
/// the Noor transform of a starlike-class generator on |z| = r.
double starlike_noor_bound(double beta, double mu, double r);

/// Same with (2,1) in place of (3,1): the convex-class variant, termwise
/// no larger than the starlike one.
double convex_noor_bound(double beta, double mu, double r);

} // namespace fracdisk

#endif
