#ifndef UTM_ASYMPTOTICS_HPP
#define UTM_ASYMPTOTICS_HPP

#include "utm/model.hpp"
#include "utm/transforms.hpp"

namespace utm {

/// Leading-order long-time description of one solution point:
/// value = constant + envelope * e^{i(pi/4 - x^2/(4 sigma t))} / sqrt(4 sigma t).
struct AsymptoticTerm {
    cplx constant;  // the weighted average of the far-field values
    cplx envelope;  // the bracket amplitude
    Side side;
    cplx value(double sigma, double x, double t) const {
        const cplx osc = std::polar(1.0, pi / 4.0 - x * x / (4.0 * sigma * t));
        return constant + envelope * osc / std::sqrt(4.0 * sigma * t);
    }
};

/// (beta_R gamma_R sqrt(sigma_L) + beta_L gamma_L sqrt(sigma_R)) /
/// (beta_R sqrt(sigma_L) + beta_L sqrt(sigma_R))
cplx weighted_average(const SemiInfiniteProblem& p);

/// Two-term stationary-phase approximation of the semi-infinite solution,
/// with the envelope exposed separately from the oscillation.
AsymptoticTerm leading_order_term(Side side, const SemiInfiniteProblem& p, double x, double t);

/// Convenience: the approximate solution value itself.
cplx leading_order(Side side, const SemiInfiniteProblem& p, double x, double t);

}  // namespace utm

#endif
