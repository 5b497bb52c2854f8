#include "utm/asymptotics.hpp"

#include <cmath>

#include "utm/solver_semi.hpp"

namespace utm {

cplx weighted_average(const SemiInfiniteProblem& p) {
    const double wl = p.right.beta * std::sqrt(p.left.sigma);
    const double wr = p.left.beta * std::sqrt(p.right.sigma);
    return (wl * p.right.gamma + wr * p.left.gamma) / (wl + wr);
}

AsymptoticTerm leading_order_term(Side side, const SemiInfiniteProblem& p, double x, double t) {
    if (!(t > 0.0)) throw DomainError("leading_order: t must be positive");
    require_valid(p);
    const SemiCoefficients c = coefficients_semi(p);
    const TransformedProfile vl(p.ic_left), vr(p.ic_right);
    const double sL = p.left.sigma, sR = p.right.sigma;
    const double root = std::sqrt(sL * sR);

    AsymptoticTerm out;
    out.side = side;
    out.constant = weighted_average(p);

    if (side == Side::Left) {
        // bracket = phi-coefficient * x + v0L(-x/2sLt)/sqrt(pi)
        //           - refl v0L(x/2sLt)/sqrt(pi) + transL v0R(-x/(2t root))/sqrt(pi)
        const double k1 = -x / (2.0 * sL * t);
        cplx bracket = c.phi_pref_left * x;
        bracket += vl(k1) / sqrt_pi;
        bracket -= c.reflection * vl(-k1) / sqrt_pi;
        bracket += c.trans_left * vr(-x / (2.0 * t * root)) / sqrt_pi;
        out.envelope = bracket;
    } else {
        const double k1 = -x / (2.0 * sR * t);
        cplx bracket = c.phi_pref_right * x;
        bracket += vr(k1) / sqrt_pi;
        bracket += c.trans_right * vl(-x / (2.0 * t * root)) / sqrt_pi;
        bracket += c.reflection * vr(-k1) / sqrt_pi;
        out.envelope = bracket;
    }
    return out;
}

cplx leading_order(Side side, const SemiInfiniteProblem& p, double x, double t) {
    const AsymptoticTerm term = leading_order_term(side, p, x, t);
    const double sigma = (side == Side::Left) ? p.left.sigma : p.right.sigma;
    return term.value(sigma, x, t);
}

}  // namespace utm
