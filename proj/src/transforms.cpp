#include "utm/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "utm/special_functions.hpp"

namespace utm {

namespace {

constexpr double kEntireStrip = 1e300;

// int_lo^hi x^j e^{-ikx} dx for j = 0..deg, by upward recurrence, or by a
// Taylor expansion in k when |k| * scale is small (the recurrence divides
// by ik and loses accuracy there).
void power_moments(cplx k, double lo, double hi, int deg, std::vector<cplx>& out) {
    out.assign(deg + 1, cplx(0.0));
    const double scale = std::max({std::abs(lo), std::abs(hi), 1e-30});
    if (std::abs(k) * scale < 0.5) {
        // I_j = sum_m (-ik)^m/m! * (hi^{j+m+1} - lo^{j+m+1})/(j+m+1)
        for (int j = 0; j <= deg; ++j) {
            cplx term = 1.0, sum = 0.0;
            double hp = std::pow(hi, j + 1), lp = std::pow(lo, j + 1);
            for (int m = 0;; ++m) {
                const cplx add = term * (hp - lp) / static_cast<double>(j + m + 1);
                sum += add;
                if (std::abs(add) < 1e-18 * (std::abs(sum) + 1e-300) && m > 2) break;
                if (m > 60) break;
                term *= -iu * k / static_cast<double>(m + 1);
                hp *= hi;
                lp *= lo;
            }
            out[j] = sum;
        }
        return;
    }
    const cplx ik = iu * k;
    const cplx elo = std::exp(-ik * lo), ehi = std::exp(-ik * hi);
    out[0] = (elo - ehi) / ik;
    double lj = lo, hj = hi;
    for (int j = 1; j <= deg; ++j) {
        out[j] = (lj * elo - hj * ehi) / ik + static_cast<double>(j) / ik * out[j - 1];
        lj *= lo;
        hj *= hi;
    }
}

// int_lo^hi (alpha + beta x) e^{-ikx} dx
cplx linear_segment_transform(cplx alpha, cplx beta, double lo, double hi, cplx k) {
    std::vector<cplx> I;
    power_moments(k, lo, hi, 1, I);
    return alpha * I[0] + beta * I[1];
}

// Half-line Gaussian moments: int_0^infty e^{ckx - x^2} x^j dx for j = 0,1
// with ck = +ik (left mirror) or -ik (right side).
void gaussian_half_moments(cplx ck, cplx& J0, cplx& J1) {
    // J0 = (sqrt(pi)/2) e^{ck^2/4} erfc(-ck/2) = (sqrt(pi)/2) w(-i ck / 2)
    J0 = 0.5 * sqrt_pi * faddeeva(-iu * ck / 2.0);
    J1 = 0.5 + 0.5 * ck * J0;
}

}  // namespace

cplx Profile::shape(double x) const {
    switch (kind) {
        case ProfileKind::GaussianLinear:
            return (c0 + c1 * x) * std::exp(-x * x);
        case ProfileKind::ShiftedTanh:
            return amplitude * (std::tanh(x) + (side == Side::Left ? 1.0 : -1.0));
        case ProfileKind::ExpDecay:
            return amplitude * std::exp(side == Side::Left ? rate * x : -rate * x);
        case ProfileKind::CompactPolynomial: {
            if (x < support_lo || x > support_hi) return 0.0;
            cplx v = 0.0;
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
            return v;
        }
        case ProfileKind::Sampled: {
            if (grid.empty()) return 0.0;
            if (x <= grid.front())
                return side == Side::Left
                           ? values.front() * std::exp(rate * (x - grid.front()))
                           : values.front();
            if (x >= grid.back())
                return side == Side::Right
                           ? values.back() * std::exp(-rate * (x - grid.back()))
                           : values.back();
            auto it = std::upper_bound(grid.begin(), grid.end(), x);
            const std::size_t i = static_cast<std::size_t>(it - grid.begin()) - 1;
            const double w = (x - grid[i]) / (grid[i + 1] - grid[i]);
            return values[i] * (1.0 - w) + values[i + 1] * w;
        }
    }
    return 0.0;
}

cplx Profile::value(double x) const { return shape(x) + asymptote; }

double Profile::strip() const {
    switch (kind) {
        case ProfileKind::GaussianLinear:
        case ProfileKind::CompactPolynomial:
            return kEntireStrip;
        case ProfileKind::ShiftedTanh:
            return 2.0;
        case ProfileKind::ExpDecay:
        case ProfileKind::Sampled:
            return rate;
    }
    return 0.0;
}

Profile Profile::gaussian_linear(Side s, double c0, double c1, cplx gamma) {
    Profile p;
    p.kind = ProfileKind::GaussianLinear;
    p.side = s;
    p.c0 = c0;
    p.c1 = c1;
    p.asymptote = gamma;
    return p;
}

Profile Profile::shifted_tanh(Side s, double amplitude, cplx gamma) {
    Profile p;
    p.kind = ProfileKind::ShiftedTanh;
    p.side = s;
    p.amplitude = amplitude;
    p.asymptote = gamma;
    return p;
}

Profile Profile::exp_decay(Side s, double amplitude, double rate, cplx gamma) {
    if (rate <= 0.0) throw DomainError("Profile::exp_decay: rate must be positive");
    Profile p;
    p.kind = ProfileKind::ExpDecay;
    p.side = s;
    p.amplitude = amplitude;
    p.rate = rate;
    p.asymptote = gamma;
    return p;
}

Profile Profile::compact_polynomial(Side s, std::vector<double> coeffs, double lo, double hi) {
    if (!(lo < hi)) throw DomainError("Profile::compact_polynomial: empty support");
    Profile p;
    p.kind = ProfileKind::CompactPolynomial;
    p.side = s;
    p.coeffs = std::move(coeffs);
    p.support_lo = lo;
    p.support_hi = hi;
    return p;
}

Profile Profile::sampled(Side s, std::vector<double> grid, std::vector<cplx> values,
                         double decay_rate, cplx gamma) {
    if (grid.size() != values.size() || grid.size() < 2)
        throw DomainError("Profile::sampled: grid/value size mismatch");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) throw DomainError("Profile::sampled: grid not increasing");
    if (decay_rate <= 0.0) throw DomainError("Profile::sampled: decay rate must be positive");
    Profile p;
    p.kind = ProfileKind::Sampled;
    p.side = s;
    p.grid = std::move(grid);
    p.values = std::move(values);
    p.rate = decay_rate;
    p.asymptote = gamma;
    return p;
}

Profile Profile::zero(Side s, cplx gamma) {
    Profile p = gaussian_linear(s, 0.0, 0.0, gamma);
    return p;
}

cplx TransformedProfile::operator()(cplx k) const {
    const bool left = source.side == Side::Left;
    if (left) {
        if (k.imag() < -strip)
            throw OutOfStrip("left transform evaluated below its validity strip");
    } else {
        if (k.imag() > strip)
            throw OutOfStrip("right transform evaluated above its validity strip");
    }

    switch (source.kind) {
        case ProfileKind::GaussianLinear: {
            cplx J0, J1;
            if (left) {
                gaussian_half_moments(iu * k, J0, J1);  // x -> -x mirror
                return source.c0 * J0 - source.c1 * J1;
            }
            gaussian_half_moments(-iu * k, J0, J1);
            return source.c0 * J0 + source.c1 * J1;
        }
        case ProfileKind::ShiftedTanh: {
            // Geometric series tanh x - 1 = -2 sum (-1)^{n-1} e^{-2nx} gives
            // -2A sum (-1)^{n-1}/(2n + ik); summed in closed form via digamma.
            const cplx A = source.amplitude;
            if (left) return 0.5 * A * (digamma(1.0 - iu * k / 4.0) - digamma(0.5 - iu * k / 4.0));
            return -0.5 * A * (digamma(1.0 + iu * k / 4.0) - digamma(0.5 + iu * k / 4.0));
        }
        case ProfileKind::ExpDecay: {
            const cplx A = source.amplitude;
            return left ? A / (source.rate - iu * k) : A / (source.rate + iu * k);
        }
        case ProfileKind::CompactPolynomial: {
            std::vector<cplx> I;
            const int deg = static_cast<int>(source.coeffs.size()) - 1;
            if (deg < 0) return 0.0;
            power_moments(k, source.support_lo, source.support_hi, deg, I);
            cplx sum = 0.0;
            for (int j = 0; j <= deg; ++j) sum += source.coeffs[static_cast<std::size_t>(j)] * I[j];
            return sum;
        }
        case ProfileKind::Sampled: {
            const auto& g = source.grid;
            const auto& v = source.values;
            cplx sum = 0.0;
            for (std::size_t i = 0; i + 1 < g.size(); ++i) {
                const double dx = g[i + 1] - g[i];
                const cplx beta = (v[i + 1] - v[i]) / dx;
                const cplx alpha = v[i] - beta * g[i];
                sum += linear_segment_transform(alpha, beta, g[i], g[i + 1], k);
            }
            // Exponential tails at the declared decay rate.
            if (left) {
                // shape ~ v0 e^{rate (x - x0)} for x < x0
                sum += v.front() * std::exp(-iu * k * g.front()) / (source.rate - iu * k);
            } else {
                sum += v.back() * std::exp(-iu * k * g.back()) / (source.rate + iu * k);
            }
            return sum;
        }
    }
    return 0.0;
}

cplx TimeSignal::value(double t) const {
    switch (kind) {
        case TimeSignalKind::Zero:
            return 0.0;
        case TimeSignalKind::Constant:
            return c;
        case TimeSignalKind::Exponential:
            return c * std::exp(mu * t);
        case TimeSignalKind::Sinusoid:
            return c * std::sin(omega0 * t);
        case TimeSignalKind::Sampled: {
            if (grid.empty()) return 0.0;
            if (t <= grid.front()) return values.front();
            if (t >= grid.back()) return values.back();
            auto it = std::upper_bound(grid.begin(), grid.end(), t);
            const std::size_t i = static_cast<std::size_t>(it - grid.begin()) - 1;
            const double w = (t - grid[i]) / (grid[i + 1] - grid[i]);
            return values[i] * (1.0 - w) + values[i + 1] * w;
        }
    }
    return 0.0;
}

TimeSignal TimeSignal::constant(cplx c) {
    TimeSignal s;
    s.kind = TimeSignalKind::Constant;
    s.c = c;
    return s;
}

TimeSignal TimeSignal::exponential(cplx c, cplx mu) {
    TimeSignal s;
    s.kind = TimeSignalKind::Exponential;
    s.c = c;
    s.mu = mu;
    return s;
}

TimeSignal TimeSignal::sinusoid(cplx c, double omega0) {
    TimeSignal s;
    s.kind = TimeSignalKind::Sinusoid;
    s.c = c;
    s.omega0 = omega0;
    return s;
}

TimeSignal TimeSignal::sampled(std::vector<double> grid, std::vector<cplx> values) {
    if (grid.size() != values.size() || grid.size() < 2)
        throw DomainError("TimeSignal::sampled: grid/value size mismatch");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) throw DomainError("TimeSignal::sampled: grid not increasing");
    TimeSignal s;
    s.kind = TimeSignalKind::Sampled;
    s.grid = std::move(grid);
    s.values = std::move(values);
    return s;
}

namespace {

// int_0^t e^{-lam (t-s)} c e^{mu s} ds = c e^{mu t} t E((-(lam+mu) t)),
// E(u) = (e^u - 1)/u. Stable for Re lam >= 0, Re mu <= 0.
cplx conv_exponential(cplx c, cplx mu, cplx lam, double t) {
    return c * std::exp(mu * t) * t * expm1_over(-(lam + mu) * t);
}

// Same integral against a linear segment f(s) = alpha + beta s on [s0, s1].
cplx conv_linear_segment(cplx alpha, cplx beta, double s0, double s1, cplx lam, double t) {
    if (std::abs(lam) * (s1 - s0) < 1e-6) {
        // Kernel nearly constant across the segment.
        const double sm = 0.5 * (s0 + s1);
        const cplx f0 = alpha + beta * s0, fm = alpha + beta * sm, f1 = alpha + beta * s1;
        const cplx k0 = std::exp(-lam * (t - s0)), km = std::exp(-lam * (t - sm)),
                   k1 = std::exp(-lam * (t - s1));
        return (s1 - s0) / 6.0 * (f0 * k0 + 4.0 * fm * km + f1 * k1);
    }
    // [(alpha + beta s)/lam e^{-lam(t-s)}] - beta/lam^2 e^{-lam(t-s)} at bounds
    auto F = [&](double s) {
        return ((alpha + beta * s) / lam - beta / (lam * lam)) * std::exp(-lam * (t - s));
    };
    return F(s1) - F(s0);
}

}  // namespace

cplx time_transform_convolved(const TimeSignal& f, cplx lam, double t) {
    if (t < 0.0) throw DomainError("time_transform_convolved: t must be non-negative");
    if (t == 0.0) return 0.0;
    switch (f.kind) {
        case TimeSignalKind::Zero:
            return 0.0;
        case TimeSignalKind::Constant:
            return f.c * t * expm1_over(-lam * t);
        case TimeSignalKind::Exponential:
            return conv_exponential(f.c, f.mu, lam, t);
        case TimeSignalKind::Sinusoid:
            // sin(w s) = (e^{iws} - e^{-iws})/(2i)
            return conv_exponential(f.c / (2.0 * iu), iu * f.omega0, lam, t) -
                   conv_exponential(f.c / (2.0 * iu), -iu * f.omega0, lam, t);
        case TimeSignalKind::Sampled: {
            if (f.grid.front() > 0.0 || f.grid.back() < t)
                throw QuadratureFailure("sampled time signal does not cover [0, t]");
            cplx sum = 0.0;
            for (std::size_t i = 0; i + 1 < f.grid.size(); ++i) {
                const double s0 = std::max(0.0, f.grid[i]);
                const double s1 = std::min(t, f.grid[i + 1]);
                if (s1 <= s0) continue;
                const double dx = f.grid[i + 1] - f.grid[i];
                const cplx beta = (f.values[i + 1] - f.values[i]) / dx;
                const cplx alpha = f.values[i] - beta * f.grid[i];
                sum += conv_linear_segment(alpha, beta, s0, s1, lam, t);
            }
            return sum;
        }
    }
    return 0.0;
}

TimeTransformSplit time_transform_split(const TimeSignal& f, cplx lam, double t) {
    TimeTransformSplit out{0.0, 0.0, true};
    switch (f.kind) {
        case TimeSignalKind::Zero:
            return out;
        case TimeSignalKind::Constant:
            if (std::abs(lam) * t < 0.5) break;
            out.plain = f.c / lam;
            out.carrier = -f.c / lam;
            return out;
        case TimeSignalKind::Exponential:
            if (std::abs(lam + f.mu) * t < 0.5) break;
            out.plain = f.c * std::exp(f.mu * t) / (lam + f.mu);
            out.carrier = -f.c / (lam + f.mu);
            return out;
        case TimeSignalKind::Sinusoid: {
            const cplx cp = f.c / (2.0 * iu);
            const cplx d1 = lam + iu * f.omega0, d2 = lam - iu * f.omega0;
            if (std::abs(d1) * t < 0.5 || std::abs(d2) * t < 0.5) break;
            out.plain = cp * std::exp(iu * f.omega0 * t) / d1 - cp * std::exp(-iu * f.omega0 * t) / d2;
            out.carrier = -cp / d1 + cp / d2;
            return out;
        }
        case TimeSignalKind::Sampled:
            break;
    }
    out.valid = false;
    return out;
}

}  // namespace utm
