#ifndef FRACDISK_OPERATORS_HPP
#define FRACDISK_OPERATORS_HPP

#include "fracdisk/series.hpp"

namespace fracdisk {

// Coefficient weights of the convolution operators, n >= 1. Each is the
// exact algebraic reciprocal of its partner, so the operator pair inverts
// coefficientwise.
double ruscheweyh_weight(int n, double beta); // (beta+1)_{n-1} / (n-1)!
double noor_weight(int n, double beta);       // (n-1)! / (beta+1)_{n-1}

/// Weight of z (I F)'(z) for n >= 2 in factorial form, mu n! / (beta+1)_{n-1}.
double z_noor_weight(int n, double mu, double beta);

/// The same weight in Gamma form, mu Gamma(n+1) Gamma(beta+1) / Gamma(n+beta).
double z_noor_weight_gamma(int n, double mu, double beta);

/// Distortion weight psi(n) = (alpha)_{n-1} A / (n (beta)_{n-1}), n >= 2,
/// normalized so psi(2) = alpha A / (2 beta).
double psi_weight(int n, double alpha, double beta, double a_value);

/// Ruscheweyh-type transform: b_n = (beta+1)_{n-1}/(n-1)! a_n. beta = 0 is
/// the identity.
FracPowerSeries ruscheweyh_frac(const FracPowerSeries& f, double beta);

/// Noor-type transform: b_n = (n-1)!/(beta+1)_{n-1} a_n, the convolution
/// inverse of ruscheweyh_frac. beta = 0 is the identity.
FracPowerSeries noor_frac(const FracPowerSeries& f, double beta);

/// z (I_{beta,mu} F)'(z) as a coefficient transform with the leading
/// coefficient kept at 1.
FracPowerSeries z_noor_derivative(const FracPowerSeries& f, double beta);

/// Leading-term convention for z_noor_derivative_coeffs: `as_printed` keeps
/// b_1 = 1; `differentiated` applies the term rule to n = 1 as well, giving
/// b_1 = mu (no longer a normalized series, hence the raw vector).
enum class LeadingTerm { as_printed, differentiated };

CoeffVec z_noor_derivative_coeffs(const FracPowerSeries& f, double beta, LeadingTerm leading);

} // namespace fracdisk

#endif
