#ifndef UTM_SOLVER_SEMI_HPP
#define UTM_SOLVER_SEMI_HPP

#include <vector>

#include "utm/contours.hpp"
#include "utm/model.hpp"
#include "utm/quadrature.hpp"
#include "utm/transforms.hpp"

namespace utm {

/// Rational coefficients of the two-half-line solution representation.
struct SemiCoefficients {
    double den;         // beta_R sigma_L + beta_L sqrt(sigma_L sigma_R)
    double den2;        // beta_L sigma_R + beta_R sqrt(sigma_L sigma_R) = den sqrt(sigma_R/sigma_L)
    double reflection;  // (beta_R sigma_L - beta_L sqrt(sigma_L sigma_R)) / den
    cplx phi_pref_left;   // beta_R sigma_L (gamma_R - gamma_L) / den
    cplx phi_pref_right;  // beta_L sqrt(sigma_L sigma_R) (gamma_R - gamma_L) / den
    double trans_left;    // beta_R sigma_L / den2   (left solution's transmission weight)
    double trans_right;   // beta_L sigma_R / den    (right solution's transmission weight)
};

class ZeroDenominator : public std::runtime_error {
public:
    explicit ZeroDenominator(const std::string& what) : std::runtime_error(what) {}
};

SemiCoefficients coefficients_semi(const SemiInfiniteProblem& p);

struct PointValue {
    cplx value = 0.0;
    double est_error = 0.0;
    bool converged = true;
};

struct SemiSettings {
    double tol = 1e-8;
    double tail_tol = 1e-12;
    double r_cap = 1e4;
    double deformation = 0.0;  // near-origin arc radius for the D boundaries
    long max_panels = 40000;
};

/// Evaluates the explicit two-half-line solution. Immutable after
/// construction; evaluations are pure and safe to run concurrently.
class SemiEvaluator {
public:
    SemiEvaluator(SemiInfiniteProblem problem, SemiSettings settings = {});

    const SemiInfiniteProblem& problem() const { return problem_; }
    const SemiCoefficients& coefficients() const { return coef_; }
    const SemiSettings& settings() const { return settings_; }

    /// q^L(x, t) for x <= 0 (x = 0 gives the left-limit value).
    PointValue evaluate_left(double x, double t, double tol = 0.0) const;
    /// q^R(x, t) for x >= 0 (x = 0 gives the right-limit value).
    PointValue evaluate_right(double x, double t, double tol = 0.0) const;

    /// d/dx of the respective formula, by differentiation under the integral.
    PointValue evaluate_left_dx(double x, double t, double tol = 0.0) const;
    PointValue evaluate_right_dx(double x, double t, double tol = 0.0) const;

    /// Pointwise field on a grid; x = 0 reports the average of both limits.
    /// OpenMP-parallel over points with index-ordered (deterministic) output.
    std::vector<PointValue> evaluate_grid(const std::vector<double>& xs,
                                          const std::vector<double>& ts,
                                          double tol = 0.0) const;
    /// Serial reference path of evaluate_grid, kept for testing; results are
    /// bitwise identical to the parallel path at fixed settings.
    std::vector<PointValue> evaluate_grid_serial(const std::vector<double>& xs,
                                                 const std::vector<double>& ts,
                                                 double tol = 0.0) const;

private:
    PointValue eval_side(bool left, bool derivative, double x, double t, double tol) const;

    SemiInfiniteProblem problem_;
    SemiSettings settings_;
    SemiCoefficients coef_;
    TransformedProfile vhat_left_, vhat_right_;
    double s_ratio_;  // sqrt(sigma_L / sigma_R)
};

}  // namespace utm

#endif
