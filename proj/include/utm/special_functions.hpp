#ifndef UTM_SPECIAL_FUNCTIONS_HPP
#define UTM_SPECIAL_FUNCTIONS_HPP

#include "utm/common.hpp"

namespace utm {

/// Value of the interface jump function together with an accuracy estimate.
struct PhiResult {
    cplx value;
    double est_error;
};

/// Scaled complex complementary error function w(z) = e^{-z^2} erfc(-iz).
///
/// Accurate to ~1e-14 relative for Im z >= 0; the lower half plane is reached
/// through w(z) = 2 e^{-z^2} - w(-z) and inherits the conditioning of e^{-z^2}.
cplx faddeeva(cplx z);

/// Fresnel-type jump function
///   phi(sigma, x, t) = -sgn(x) + (pi sigma t)^{-1/2} e^{i pi/4}
///                      \int_0^x e^{-i y^2/(4 sigma t)} dy     (t > 0),
/// and phi = 0 at t = 0. sgn(0) := 0, so phi(sigma, 0, t) = 0.
///
/// Evaluated as -sgn(x) e^{-iX^2} w(|X| e^{3 i pi/4}) with X = x/(2 sqrt(sigma t)).
PhiResult phi(double sigma, double x, double t);

/// d/dx phi(sigma, x, t) for t > 0: e^{i pi/4} e^{-i x^2/(4 sigma t)} / sqrt(pi sigma t).
/// Continuous across x = 0 (the sgn jump has zero derivative off the origin).
cplx phi_dx(double sigma, double x, double t);

/// Digamma function for complex arguments (asymptotic series plus recurrence).
/// Used by the tanh-profile transform series; accurate to ~1e-14.
cplx digamma(cplx z);

}  // namespace utm

#endif
