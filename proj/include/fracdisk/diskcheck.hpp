#ifndef FRACDISK_DISKCHECK_HPP
#define FRACDISK_DISKCHECK_HPP

#include "fracdisk/series.hpp"

#include <json.hpp>

#include <limits>
#include <string>
#include <vector>

namespace fracdisk {

enum class Verdict { pass, fail, premise_not_met };

std::string to_string(Verdict v);

/// Structured outcome of a pointwise or coefficientwise check.
///
/// worst_margin is the smallest slack of the tested inequality over the
/// decided samples; the verdict is pass exactly when it stays above
/// -tolerance. Samples whose truncation error bars straddle the threshold
/// are excluded and counted in params["indeterminate_samples"]; tail_note
/// carries the largest certified truncation influence among decided points.
struct CheckReport {
    std::string check;
    Verdict verdict = Verdict::pass;
    double worst_margin = std::numeric_limits<double>::quiet_NaN();
    Complex witness{0.0, 0.0};
    nlohmann::json params = nlohmann::json::object();
    double tail_note = 0.0;

    bool passed() const { return verdict == Verdict::pass; }
    nlohmann::json to_json() const;
    std::string to_json_string() const;
};

struct CheckOptions {
    double tolerance = 1e-9;
};

/// Re(z F'/F) > 0 over the grid.
CheckReport is_starlike(const FracPowerSeries& f, const DiskGrid& grid,
                        const CheckOptions& opts = {});

/// Re(1 + z F''/F') > 0 over the grid.
CheckReport is_convex(const FracPowerSeries& f, const DiskGrid& grid,
                      const CheckOptions& opts = {});

/// Re(1 + Q) >= |Q| with Q = z F''/F' over the grid (uniform convexity).
CheckReport is_ucv(const FracPowerSeries& f, const DiskGrid& grid,
                   const CheckOptions& opts = {});

/// Two-point form Re((z - zeta) F''/F' + 1) >= 0 over grid x zeta samples
/// (zeta on a quasi-uniform spiral of the stated size, plus the origin).
CheckReport ucv_two_point(const FracPowerSeries& f, const DiskGrid& grid, int zeta_samples,
                          const CheckOptions& opts = {});

enum class BoundKind { starlike, convex };

/// Coefficient bounds |a_n| <= n (starlike) or |a_n| <= 1 (convex).
CheckReport duren_bound_check(const FracPowerSeries& f, BoundKind kind,
                              const CheckOptions& opts = {});

/// Uniform-convexity coefficient bound |a_n| <= 1/n.
CheckReport goodman_bound_check(const FracPowerSeries& f, const CheckOptions& opts = {});

/// Generator-premise products (alpha)_{n-1} compared against n! (starlike
/// kind) or (n-1)! (convex kind), reported strictly and non-strictly per n.
struct PremiseReport {
    std::vector<bool> strict;     // index 0 corresponds to n = 2
    std::vector<bool> non_strict;
    bool all_strict = true;
    bool all_non_strict = true;
};

PremiseReport starlike_premise(double alpha, int order);
PremiseReport convex_premise(double alpha, int order);

/// Checks the Fox-Wright majorant of the Noor transform of the generator
/// series koebe_frac(alpha, mu, order) at each radius: the n >= 2 sum
/// S(r) = sum (n-1)!/(beta+1)_{n-1} |a_n| r^{mu n} against the bound.
/// The literal reading with the leading r added to the left side is
/// evaluated alongside and reported in params. Premise failures downgrade
/// the verdict to premise_not_met; the margins are still reported whenever
/// the non-strict premise holds.
CheckReport verify_noor_bound(BoundKind kind, double alpha, double beta, double mu,
                              const std::vector<double>& radii, int order = 64,
                              const CheckOptions& opts = {});

/// Same check for an explicit series in place of the generator.
CheckReport verify_noor_bound(BoundKind kind, const FracPowerSeries& f, double alpha,
                              double beta, const std::vector<double>& radii,
                              const CheckOptions& opts = {});

/// Grid lower estimate of sup (1-|z|^2)|F''/F'| with one round of radial
/// refinement around the maximizing sample. Samples whose truncation
/// bounds cannot certify the denominator are skipped.
double pre_schwarzian_norm(const FracPowerSeries& f, const DiskGrid& grid);

} // namespace fracdisk

#endif
