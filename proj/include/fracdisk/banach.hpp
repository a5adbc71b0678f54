#ifndef FRACDISK_BANACH_HPP
#define FRACDISK_BANACH_HPP

#include "fracdisk/diskcheck.hpp"
#include "fracdisk/series.hpp"

#include <Eigen/Core>

#include <functional>
#include <vector>

namespace fracdisk {

using Vec = Eigen::VectorXcd;

enum class VectorNorm { euclidean, max };

/// Finite-dimensional model of a vector-valued analytic map
///   F(w) = A(w) + sum_{n>=2} P_n(w)
/// with A a linear functional (coefficient vector c, A(w) = sum c_i w_i)
/// and each P_n a homogeneous polynomial of degree n supplied as an
/// evaluator. Homogeneity is self-tested at registration on seeded random
/// inputs. Dimension is capped at 8.
class BanachModel {
public:
    using PolyFn = std::function<Complex(const Vec&)>;

    BanachModel(Vec functional, double mu, VectorNorm norm = VectorNorm::euclidean);

    /// Registers P_n; throws if the evaluator fails the homogeneity
    /// self-test P(lambda w) = lambda^n P(w) within 1e-10 relative.
    void add_poly(int degree, PolyFn fn);

    /// P_n(w) = p[n-2] w_1^n.
    static BanachModel diagonal(int dim, Vec functional, double mu, VectorNorm norm,
                                const std::vector<Complex>& p);

    /// P_n(w) = p[n-2] A(w)^n; vanishes wherever A does.
    static BanachModel a_power(int dim, Vec functional, double mu, VectorNorm norm,
                               const std::vector<Complex>& p);

    int dim() const { return static_cast<int>(functional_.size()); }
    double mu() const { return mu_; }
    VectorNorm norm_kind() const { return norm_; }
    const Vec& functional_coeffs() const { return functional_; }

    // A is linear, not sesquilinear: A(w) = sum c_i w_i with no conjugation
    Complex functional(const Vec& w) const { return (functional_.array() * w.array()).sum(); }
    Complex poly(int degree, const Vec& w) const;
    int max_degree() const;

    double norm(const Vec& w) const;

    /// Model with every P_n multiplied by eps (A unchanged): the geometric
    /// perturbation used by the compactness decay check.
    BanachModel perturbation_scaled(double eps) const;

    /// Model with A and every P_n multiplied by lambda; slices are invariant.
    BanachModel scaled(Complex lambda) const;

    /// {"d", "A", "mu", "norm", "polys": {"kind": "diagonal"|"a-power", "p": [...]}}
    /// Only the two built-in families serialize.
    std::string to_json() const;
    static BanachModel from_json(const std::string& text);

private:
    Vec functional_;
    double mu_;
    VectorNorm norm_;
    struct Poly {
        int degree;
        PolyFn fn;
    };
    std::vector<Poly> polys_;
    std::string kind_ = "custom";
    std::vector<Complex> kind_p_;
};

/// One-variable restriction along a unit direction with A(a) != 0:
///   F_a(z) = F(z a)/A(a) = z + sum P_n(a)/A(a) z^{mu n}.
/// `printed` keeps the model's mu as the exponent parameter; `homogeneous`
/// uses the exponent z^n that degree-n homogeneity actually produces.
enum class SliceExponent { printed, homogeneous };

FracPowerSeries slice(const BanachModel& model, const Vec& a,
                      SliceExponent exponent = SliceExponent::printed);

/// Unit directions off the kernel of A, sampled quasi-uniformly from a
/// seeded stream (|A(a)| > 1e-9 enforced).
struct SliceFamily {
    std::vector<Vec> directions;

    static SliceFamily sample(const BanachModel& model, int count, std::uint64_t seed);
};

/// Unit directions with A(a) = 0 exactly: coordinate-pair swaps
/// (c_j, -c_i) whose functional value cancels bit-exactly, normalized.
std::vector<Vec> kernel_directions(const BanachModel& model, int count);

/// Every slice along the family passes the uniform-convexity grid check;
/// the worst direction is recorded in params.
CheckReport ucv_membership(const BanachModel& model, const SliceFamily& dirs, const DiskGrid& grid,
                           const CheckOptions& opts = {});

/// |P_n(a)| <= |A(a)|/n over the family, premised on ucv_membership.
CheckReport coefficient_bound_check(const BanachModel& model, const SliceFamily& dirs,
                                    const DiskGrid& grid, const CheckOptions& opts = {});

/// P_n vanishes on sampled kernel directions, premised on the coefficient
/// bound holding on a reference family off the kernel.
CheckReport kernel_vanishing_check(const BanachModel& model, const std::vector<Vec>& kernel_dirs,
                                   const SliceFamily& reference, const DiskGrid& grid,
                                   const CheckOptions& opts = {});

/// Re(1 + F''(w)(w,w)/F'(w)(w)) >= |F''(w)(w,w)/F'(w)(w)| along samples w,
/// evaluated through the slice identity at z = ||w||, a = w/||w||.
CheckReport sufficient_condition_check(const BanachModel& model, const std::vector<Vec>& w_samples,
                                       const CheckOptions& opts = {});

/// Termwise product of coefficient families (index 0 <-> n = 2).
Eigen::VectorXd quasi_hadamard(const std::vector<Eigen::VectorXd>& families);

/// Closure inequality sum_n n^{l+s} H_n <= prod A for the quasi-Hadamard
/// product of l + s admissible families; each family must satisfy
/// sum_n n P_n <= A first (premise).
CheckReport quasi_class_check(const std::vector<Eigen::VectorXd>& p_families,
                              const std::vector<Eigen::VectorXd>& phi_families,
                              const std::vector<double>& a_values, const CheckOptions& opts = {});

/// |z G''/G'| <= 1 + ||F_a||_T/(1-|z|^2) with G the Noor transform of the
/// slice, per direction and grid point.
CheckReport boundedness_check(const BanachModel& model, const SliceFamily& dirs, double beta,
                              const DiskGrid& grid, const CheckOptions& opts = {});

/// Pre-Schwarzian norms t_m of the Noor transforms of geometrically scaled
/// slices must decay: monotone within 1e-6 jitter and t_last < 1e-3 t_first.
CheckReport compactness_decay_check(const BanachModel& model, const Vec& a, double beta,
                                    const DiskGrid& grid, const std::vector<double>& scales,
                                    const CheckOptions& opts = {});

/// Distortion bound | |I F_a(z)| - |z| | <= psi(2) |z|^{2 mu} under the
/// slice coefficient premise |P_n(a)| <= |A(a)|/n. Both the psi-weighted
/// transform and the plain Noor-weighted transform are evaluated; the
/// verdict follows the psi form, the other margin lands in params.
CheckReport noor_distortion_check(const BanachModel& model, const Vec& a, double alpha,
                                  double beta, const DiskGrid& grid,
                                  const CheckOptions& opts = {});

} // namespace fracdisk

#endif
