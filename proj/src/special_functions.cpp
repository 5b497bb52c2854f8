#include "utm/special_functions.hpp"

#include <array>
#include <cmath>

namespace utm {

namespace {

// Sampling step for the sinc-expansion below. Discretization error of the
// corrected rule is O(e^{-(pi/h)^2}) ~ 4e-22 at h = 0.45.
constexpr double kStep = 0.45;
constexpr int kTerms = 16;  // covers |t| <= 7.4, where e^{-t^2} < 1e-23

// Midpoint-rule representation with its residue correction, valid for
// Im z >= 0 (Chiarella-Reichel). Nodes tau_n = (n+1/2)h:
//   w(z) = (ih/pi) sum_n e^{-tau_n^2}/(z - tau_n) + 2 e^{-z^2}/(1 + e^{-2 pi i z/h}).
// The trapezoid variant (nodes n h, denominator 1 - e^{-2 pi i z / h}) is used
// when z sits too close to a midpoint node, so the two singular pieces never
// cancel catastrophically.
cplx w_sum_rule(cplx z) {
    const double x = z.real(), y = z.imag();

    // Distance from x to the nearest midpoint node decides the node family.
    const double m = std::round(x / kStep - 0.5);
    const double dist_mid = std::abs(x - (m + 0.5) * kStep);
    const bool use_midpoint = !(dist_mid < 0.25 * kStep && y < 0.25 * kStep);

    cplx sum = 0.0;
    if (use_midpoint) {
        for (int n = -kTerms; n < kTerms; ++n) {
            const double tau = (n + 0.5) * kStep;
            sum += std::exp(-tau * tau) / (z - tau);
        }
    } else {
        for (int n = -kTerms; n <= kTerms; ++n) {
            const double tau = n * kStep;
            sum += std::exp(-tau * tau) / (z - tau);
        }
    }
    cplx w = (iu * kStep / pi) * sum;

    // Pole correction 2 e^{-z^2} / (1 -+ e^{-2 pi i z/h}); negligible once
    // y^2 - x^2 - 2 pi y / h is very negative.
    const double corr_exponent = y * y - x * x - 2.0 * pi * y / kStep;
    if (corr_exponent > -60.0) {
        const cplx ez2 = std::exp(-z * z);
        const cplx q = std::exp(-2.0 * pi * iu * z / kStep);
        w += use_midpoint ? 2.0 * ez2 / (1.0 + q) : 2.0 * ez2 / (1.0 - q);
    }
    return w;
}

// Laplace continued fraction w(z) = (i/sqrt(pi)) / (z - a1/(z - a2/(...))),
// a_n = n/2, evaluated backward. Depth 48 exceeds double accuracy for |z| >= 8.
cplx w_cf(cplx z) {
    cplx denom = z;
    for (int n = 48; n >= 1; --n) {
        denom = z - (0.5 * n) / denom;
    }
    return iu / (sqrt_pi * denom);
}

}  // namespace

cplx faddeeva(cplx z) {
    if (z.imag() < 0.0) {
        // Reflection into the upper half plane; growth of e^{-z^2} is the
        // function's own growth there.
        return 2.0 * std::exp(-z * z) - faddeeva(-z);
    }
    const double r2 = std::norm(z);
    if (r2 >= 64.0) {
        cplx w = w_cf(z);
        if (z.imag() == 0.0) {
            // CF convergents are purely imaginary on the real axis; the real
            // part of w is exactly e^{-x^2}.
            const double x = z.real();
            const double ex = (x * x < 700.0) ? std::exp(-x * x) : 0.0;
            w = cplx(ex, w.imag());
        }
        return w;
    }
    return w_sum_rule(z);
}

PhiResult phi(double sigma, double x, double t) {
    if (sigma <= 0.0) throw DomainError("phi: sigma must be positive");
    if (t < 0.0) throw DomainError("phi: t must be non-negative");
    if (t == 0.0 || x == 0.0) return {cplx(0.0), 0.0};

    const double X = x / (2.0 * std::sqrt(sigma * t));
    const double aX = std::abs(X);
    const double sgn = (x > 0.0) ? 1.0 : -1.0;
    // phi = -sgn(x) erfc(e^{i pi/4}|X|) = -sgn(x) e^{-iX^2} w(|X| e^{3 i pi/4})
    const cplx arg = aX * std::polar(1.0, 3.0 * pi / 4.0);
    const cplx value = -sgn * std::exp(cplx(0.0, -X * X)) * faddeeva(arg);
    return {value, 1e-14 * std::max(1.0, std::abs(value))};
}

cplx phi_dx(double sigma, double x, double t) {
    if (sigma <= 0.0) throw DomainError("phi_dx: sigma must be positive");
    if (t <= 0.0) throw DomainError("phi_dx: t must be positive");
    const double st = sigma * t;
    return std::polar(1.0, pi / 4.0 - x * x / (4.0 * st)) / std::sqrt(pi * st);
}

cplx digamma(cplx z) {
    // Reflect arguments with negative real part.
    if (z.real() < 0.5) {
        // psi(1-z) - psi(z) = pi cot(pi z)
        return digamma(1.0 - z) - pi / std::tan(pi * z);
    }
    cplx shift = 0.0;
    while (z.real() < 10.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    // Asymptotic series with Bernoulli coefficients.
    static const std::array<double, 7> B = {
        1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6};
    const cplx inv2 = 1.0 / (z * z);
    cplx series = 0.0, p = inv2;
    for (std::size_t n = 0; n < B.size(); ++n) {
        series += B[n] / (2.0 * (n + 1.0)) * p;
        p *= inv2;
    }
    return shift + std::log(z) - 0.5 / z - series;
}

}  // namespace utm
