#include "utm/solver_semi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "utm/special_functions.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace utm {

SemiCoefficients coefficients_semi(const SemiInfiniteProblem& p) {
    const double sL = p.left.sigma, sR = p.right.sigma;
    const double bL = p.left.beta, bR = p.right.beta;
    const double root = std::sqrt(sL * sR);
    SemiCoefficients c{};
    c.den = bR * sL + bL * root;
    c.den2 = bL * sR + bR * root;
    if (c.den == 0.0 || c.den2 == 0.0)
        throw ZeroDenominator("coefficients_semi: beta signs cancel the denominator");
    c.reflection = (bR * sL - bL * root) / c.den;
    const cplx dgamma = p.right.gamma - p.left.gamma;
    c.phi_pref_left = bR * sL * dgamma / c.den;
    c.phi_pref_right = bL * root * dgamma / c.den;
    c.trans_left = bR * sL / c.den2;
    c.trans_right = bL * sR / c.den;
    return c;
}

namespace {

// One-sided limit of phi at the interface: the formulas live on open half
// lines, so x = 0 takes the sgn value of the owning side.
cplx phi_sided(double sigma, double x, double t, bool left_side) {
    if (t == 0.0) return 0.0;
    if (x == 0.0) return left_side ? cplx(1.0) : cplx(-1.0);
    return phi(sigma, x, t).value;
}

}  // namespace

SemiEvaluator::SemiEvaluator(SemiInfiniteProblem problem, SemiSettings settings)
    : problem_(std::move(problem)),
      settings_(settings),
      coef_(coefficients_semi(problem_)),
      vhat_left_(problem_.ic_left),
      vhat_right_(problem_.ic_right),
      s_ratio_(std::sqrt(problem_.left.sigma / problem_.right.sigma)) {
    require_valid(problem_);
    const double strip = std::min(vhat_left_.strip, vhat_right_.strip);
    if (settings_.deformation >= strip)
        throw DeformationTooLarge("SemiEvaluator: arc radius exceeds a transform strip");
}

PointValue SemiEvaluator::eval_side(bool left, bool derivative, double x, double t,
                                    double tol) const {
    if (tol <= 0.0) tol = settings_.tol;
    const MediumParams& med = left ? problem_.left : problem_.right;
    const double sigma = med.sigma;
    const cplx gamma = med.gamma;

    PointValue out;
    if (t == 0.0) {
        // Contour representation converges non-uniformly as t -> 0+.
        const Profile& ic = left ? problem_.ic_left : problem_.ic_right;
        if (derivative) {
            const double h = 1e-6;
            out.value = (ic.value(x + h) - ic.value(x - h)) / (2.0 * h);
            out.est_error = 1e-8;
        } else {
            out.value = ic.value(x);
        }
        return out;
    }

    QuadSettings qs;
    qs.tol = tol / 6.0;
    qs.max_panels = settings_.max_panels;

    // phi term and constant.
    cplx total = 0.0;
    if (!derivative) {
        total += gamma;
        const cplx pref = left ? coef_.phi_pref_left : coef_.phi_pref_right;
        total += pref * phi_sided(sigma, x, t, left);
    } else {
        const cplx pref = left ? coef_.phi_pref_left : coef_.phi_pref_right;
        total += pref * phi_dx(sigma, x, t);
    }

    // Whole-line term with the side's own transform.
    const TransformedProfile& own = left ? vhat_left_ : vhat_right_;
    Integrand f1;
    f1.amplitude = [&own, derivative](cplx k) {
        const cplx v = own(k);
        return derivative ? iu * k * v : v;
    };
    f1.phase = PhaseSpec{
        [=](cplx k) { return k * x + sigma * k * k * t; },
        [=](cplx k) { return cplx(x) + 2.0 * sigma * k * t; },
    };
    IntegralResult r1 =
        fourier_line_integral(f1, sigma, x, t, qs, settings_.tail_tol, settings_.r_cap);
    total += r1.value;

    // Contour term over the boundary of D^- (left) or D^+ (right), with the
    // reflection and transmission amplitudes combined into one integrand.
    const SemiCoefficients& c = coef_;
    const double refl = c.reflection;
    const TransformedProfile& other = left ? vhat_right_ : vhat_left_;
    const double arg_scale = left ? s_ratio_ : 1.0 / s_ratio_;
    const double trans = left ? c.trans_left : c.trans_right;
    const double trans_sign = left ? -1.0 : 1.0;

    Integrand f2;
    f2.amplitude = [&, refl, arg_scale, trans, trans_sign, derivative](cplx k) {
        cplx amp = refl / (2.0 * pi) * own(-k) +
                   trans_sign * trans / pi * other(k * arg_scale);
        if (derivative) amp *= iu * k;
        return amp;
    };
    f2.phase = f1.phase;

    // Truncation radii: IBP bound on the real leg, decay/oscillation bound on
    // the imaginary leg.
    auto amp_mag = [&](cplx k) {
        return std::abs(f2.amplitude(k));
    };
    const double sgn_real = left ? 1.0 : -1.0;  // real leg sits on this side
    double R = 30.0;
    while (R < settings_.r_cap) {
        const cplx kr = sgn_real * R;
        const double rate_real = std::abs(x + 2.0 * sigma * sgn_real * R * t);
        const double tail_real = amp_mag(kr) / std::max(1.0, rate_real);
        const cplx kim = left ? cplx(0.0, -R) : cplx(0.0, R);
        const double decay = std::exp(-std::min(700.0, std::abs(x) * R));
        const double tail_imag = amp_mag(kim) * decay / std::max(1.0, 2.0 * sigma * R * t);
        if (tail_real + tail_imag < settings_.tail_tol) break;
        R *= 1.8;
    }
    R = std::min(R, settings_.r_cap);

    Contour dcont = boundary_D(!left, R, settings_.deformation,
                               std::min(vhat_left_.strip, vhat_right_.strip));
    IntegralResult r2 = integrate_contour(f2, dcont, qs);
    // The real leg of either boundary is traversed from the far end toward
    // the origin for D^-, and from -R toward the origin for D^+; in both
    // cases the missing tail is the lower-orientation piece.
    // Both boundaries arrive from the far real end toward the origin, so the
    // neglected piece is a lower tail in traversal orientation either way.
    double next_order = 0.0;
    if (std::abs(x + 2.0 * sigma * sgn_real * R * t) > 0.5) {
        r2.value += osc_tail_correction(f2, sgn_real * R, -1.0, &next_order);
    } else {
        next_order = amp_mag(sgn_real * R);
    }
    total += r2.value;

    out.value = total;
    out.est_error = r1.est_error + r1.tail_estimate + r2.est_error + next_order;
    out.converged = r1.converged && r2.converged;
    return out;
}

PointValue SemiEvaluator::evaluate_left(double x, double t, double tol) const {
    if (x > 0.0) throw DomainError("evaluate_left: x must be <= 0");
    if (t < 0.0) throw DomainError("evaluate_left: t must be >= 0");
    return eval_side(true, false, x, t, tol);
}

PointValue SemiEvaluator::evaluate_right(double x, double t, double tol) const {
    if (x < 0.0) throw DomainError("evaluate_right: x must be >= 0");
    if (t < 0.0) throw DomainError("evaluate_right: t must be >= 0");
    return eval_side(false, false, x, t, tol);
}

PointValue SemiEvaluator::evaluate_left_dx(double x, double t, double tol) const {
    if (x > 0.0) throw DomainError("evaluate_left_dx: x must be <= 0");
    return eval_side(true, true, x, t, tol);
}

PointValue SemiEvaluator::evaluate_right_dx(double x, double t, double tol) const {
    if (x < 0.0) throw DomainError("evaluate_right_dx: x must be >= 0");
    return eval_side(false, true, x, t, tol);
}

namespace {

PointValue average(const PointValue& a, const PointValue& b) {
    PointValue out;
    out.value = 0.5 * (a.value + b.value);
    out.est_error = 0.5 * (a.est_error + b.est_error) + 0.5 * std::abs(a.value - b.value);
    out.converged = a.converged && b.converged;
    return out;
}

}  // namespace

std::vector<PointValue> SemiEvaluator::evaluate_grid(const std::vector<double>& xs,
                                                     const std::vector<double>& ts,
                                                     double tol) const {
    std::vector<PointValue> out(xs.size() * ts.size());
    const long n = static_cast<long>(out.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long idx = 0; idx < n; ++idx) {
        const std::size_t it = static_cast<std::size_t>(idx) / xs.size();
        const std::size_t ix = static_cast<std::size_t>(idx) % xs.size();
        const double x = xs[ix], t = ts[it];
        PointValue pv;
        try {
            if (x < 0.0) {
                pv = evaluate_left(x, t, tol);
            } else if (x > 0.0) {
                pv = evaluate_right(x, t, tol);
            } else {
                pv = average(evaluate_left(0.0, t, tol), evaluate_right(0.0, t, tol));
            }
        } catch (const std::exception&) {
            pv.converged = false;
            pv.est_error = std::numeric_limits<double>::infinity();
        }
        out[static_cast<std::size_t>(idx)] = pv;
    }
    return out;
}

std::vector<PointValue> SemiEvaluator::evaluate_grid_serial(const std::vector<double>& xs,
                                                            const std::vector<double>& ts,
                                                            double tol) const {
    std::vector<PointValue> out(xs.size() * ts.size());
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
        const std::size_t it = idx / xs.size();
        const std::size_t ix = idx % xs.size();
        const double x = xs[ix], t = ts[it];
        if (x < 0.0) {
            out[idx] = evaluate_left(x, t, tol);
        } else if (x > 0.0) {
            out[idx] = evaluate_right(x, t, tol);
        } else {
            out[idx] = average(evaluate_left(0.0, t, tol), evaluate_right(0.0, t, tol));
        }
    }
    return out;
}

}  // namespace utm
