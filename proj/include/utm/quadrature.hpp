#ifndef UTM_QUADRATURE_HPP
#define UTM_QUADRATURE_HPP

#include <functional>
#include <optional>

#include "utm/common.hpp"
#include "utm/contours.hpp"
#include "utm/transforms.hpp"

namespace utm {

struct IntegralResult {
    cplx value = 0.0;
    double est_error = 0.0;
    long nodes_used = 0;
    double tail_estimate = 0.0;
    bool converged = true;
};

class ConvergenceFailure : public std::runtime_error {
public:
    IntegralResult partial;
    ConvergenceFailure(const std::string& what, IntegralResult r)
        : std::runtime_error(what), partial(r) {}
};

/// Analytic phase of an oscillatory factor e^{i theta(k)}. Im theta >= O(-1)
/// must hold along the integration path so the factor never overflows.
struct PhaseSpec {
    std::function<cplx(cplx)> theta;
    std::function<cplx(cplx)> dtheta;
};

/// Integrand f(k) = amplitude(k) * e^{i theta(k)}, or plain amplitude(k)
/// when no phase is attached.
struct Integrand {
    std::function<cplx(cplx)> amplitude;
    std::optional<PhaseSpec> phase;
};

struct QuadSettings {
    double tol = 1e-10;
    long max_panels = 40000;
    double levin_phase_threshold = 12.0;  // min phase sweep (rad) to use Levin
    int max_depth = 30;
    bool throw_on_failure = false;
};

/// Adaptive panel integration of an oscillatory integrand along a contour.
/// Panels use nested Clenshaw-Curtis; fast-phase panels switch to Levin
/// collocation. Panel sums are accumulated in path order, so results are
/// bitwise reproducible at fixed settings.
IntegralResult integrate_contour(const Integrand& f, const Contour& contour,
                                 const QuadSettings& settings, double tail_estimate = 0.0);

/// Plain adaptive integration of a complex-valued function on [a, b].
IntegralResult integrate_real_interval(const std::function<cplx(double)>& f, double a, double b,
                                       const QuadSettings& settings);

/// First-term integration-by-parts correction for a truncated oscillatory
/// tail int_{k_end}^{sgn*inf} g e^{i theta} dk ~ -g e^{i theta}/(i theta')
/// evaluated at the truncation point (sign +1 for an upper tail, -1 lower).
/// Returns the correction and writes a second-order magnitude estimate.
cplx osc_tail_correction(const Integrand& f, cplx k_end, double sign, double* next_order);

/// (1/2pi) int_R f.amplitude(k) e^{i(kx + sigma k^2 t)} dk for an arbitrary
/// amplitude, with a mandatory panel break at the stationary point
/// k* = -x/(2 sigma t) and truncation chosen from the integration-by-parts
/// tail bound (first tail terms added back analytically). The integrand's
/// phase field is ignored and replaced by the Fourier phase.
IntegralResult fourier_line_integral(const Integrand& f, double sigma, double x, double t,
                                     const QuadSettings& settings, double tail_tol = 1e-12,
                                     double r_cap = 1e4);

/// First term of the solution representations:
///   (1/2pi) int_R e^{i(kx + sigma k^2 t)} qhat0(k) dk.
IntegralResult real_line_fourier_term(const TransformedProfile& qhat0, double sigma, double x,
                                      double t, const QuadSettings& settings,
                                      double tail_tol = 1e-12, double r_cap = 1e4);

}  // namespace utm

#endif
