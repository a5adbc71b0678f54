#ifndef FRACDISK_SERIES_HPP
#define FRACDISK_SERIES_HPP

#include <Eigen/Core>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracdisk {

using Complex = std::complex<double>;
using CoeffVec = Eigen::VectorXcd;

/// Thrown when a pointwise quantity cannot be formed at a sample (for
/// example the series value vanishes exactly where a ratio is needed).
class degenerate_sample_error : public std::runtime_error {
public:
    degenerate_sample_error(const std::string& what, Complex where)
        : std::runtime_error(what), where_(where) {}
    Complex where() const { return where_; }

private:
    Complex where_;
};

/// Thrown when a series summation fails to converge within its term budget.
class convergence_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a slice direction lies in the kernel of the model functional.
class kernel_direction_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rising factorial x(x+1)...(x+k-1); returns 1 for k = 0.
double pochhammer(double x, int k);

/// Truncated fractional power series  sum_{n=1..N} a_n z^{mu n}  with a_1 = 1.
///
/// Powers use the principal branch, z^{mu n} = exp(mu n Log z), so the
/// series is single-valued on the slit disk and real-positive on (0,1).
/// Values are immutable after construction.
class FracPowerSeries {
public:
    FracPowerSeries(double mu, CoeffVec coeffs);

    double mu() const { return mu_; }
    int order() const { return static_cast<int>(coeffs_.size()); }
    const CoeffVec& coeffs() const { return coeffs_; }

    /// 1-based coefficient access: coeff(1) == 1.
    Complex coeff(int n) const { return coeffs_(n - 1); }

    /// The series z^{mu} (a_n = 0 for n >= 2), the convolution annihilator
    /// of every nonlinear part.
    static FracPowerSeries identity(double mu, int order);

private:
    double mu_;
    CoeffVec coeffs_;
};

/// Generator series of the fractional Koebe family: a_n = (alpha)_{n-1}/(n-1)!.
/// alpha = 1 gives the all-ones sequence, alpha = 2 (mu = 1) the Koebe function.
FracPowerSeries koebe_frac(double alpha, double mu, int order);

/// Raw series sum  sum_n c_n z^{mu n}  (deriv = 0), or its first/second
/// termwise derivative, without any normalization requirement on c.
Complex eval_raw(double mu, const CoeffVec& coeffs, Complex z, int deriv = 0);

/// Series value; 0 at z = 0, domain error for |z| >= 1.
Complex evaluate(const FracPowerSeries& f, Complex z);

/// Termwise derivatives sum a_n mu n z^{mu n - 1} and
/// sum a_n mu n (mu n - 1) z^{mu n - 2}. z = 0 is allowed only for integer mu
/// (the termwise limit); elsewhere the exponents are branch points.
Complex evaluate_d1(const FracPowerSeries& f, Complex z);
Complex evaluate_d2(const FracPowerSeries& f, Complex z);

/// Coefficientwise (Hadamard) product; requires matching mu, truncates to
/// the shorter order.
FracPowerSeries hadamard(const FracPowerSeries& f, const FracPowerSeries& g);

/// |a_n| <= (alpha)_{n-1}/(n-1)! for all n >= 2 (slack 1e-12 admits the
/// generator's equality case).
bool in_class_a_mu(const FracPowerSeries& f, double alpha);

/// As in_class_a_mu, and additionally every a_n (n >= 2) is real and <= 0.
bool in_class_x_mu(const FracPowerSeries& f, double alpha);

/// Pointwise truncation majorants at radius r for the series value and its
/// first two derivatives.
struct TailBounds {
    double f0 = 0.0;
    double f1 = 0.0;
    double f2 = 0.0;
};

/// Geometric model of the coefficients beyond the truncation order, fitted
/// to the trailing coefficient window: |a_n| <= growth^n for n > N.
///
/// A series padded with trailing zeros (an exact polynomial) gets growth 0
/// and therefore empty tails; a genuine truncation of an analytic function
/// gets the observed geometric envelope. Checks use these majorants to
/// refuse verdicts at samples their own truncation noise would decide.
class TailEnvelope {
public:
    explicit TailEnvelope(const FracPowerSeries& f);

    double growth() const { return growth_; }

    /// Extrapolated-tail majorants at radius r; infinite entries when the
    /// envelope diverges there (growth * r^mu >= 1).
    TailBounds at(double r) const;

private:
    double growth_;
    double mu_;
    int order_;
};

/// Floating-point evaluation noise floor at radius r (Horner rounding),
/// for the value and the first two derivatives.
TailBounds eval_noise(const FracPowerSeries& f, double r);

/// Sampling scheme for pointwise criteria: concentric rings of equally
/// spaced angles, z = r exp(2 pi i k / angles). z = 0 is never sampled.
class DiskGrid {
public:
    DiskGrid(std::vector<double> radii, int angles_per_radius);

    /// Rings at 0.05, 0.10, ..., capped by r_max, plus 0.99 and r_max
    /// themselves when they extend the list. 128 angles per ring.
    static DiskGrid standard(double r_max = 0.99, int angles_per_radius = 128);

    const std::vector<double>& radii() const { return radii_; }
    int angles_per_radius() const { return angles_; }
    double r_max() const { return radii_.back(); }
    int ring_count() const { return static_cast<int>(radii_.size()); }

    Complex point(int ring, int angle) const;

private:
    std::vector<double> radii_;
    int angles_;
};

/// JSON interchange document {"mu": number, "N": integer,
/// "coeffs": [[re, im], ...]}, coeffs[0] corresponding to n = 1.
std::string to_json(const FracPowerSeries& f);
FracPowerSeries series_from_json(const std::string& text);

} // namespace fracdisk

#endif
