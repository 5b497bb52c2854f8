#include "utm/quadrature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace utm {

namespace {

constexpr int kN = 16;  // panel order (17 Chebyshev-Lobatto nodes, nested 9)

using CMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;
using CVector = Eigen::Matrix<cplx, Eigen::Dynamic, 1>;

struct ChebTables {
    std::array<double, kN + 1> nodes;               // cos(j pi / N), descending
    std::array<std::array<double, kN + 1>, kN + 1> cosjn;  // cos(n j pi / N)
    std::array<double, kN / 2 + 1> nodes8;
    std::array<std::array<double, kN / 2 + 1>, kN / 2 + 1> cosjn8;
    Eigen::MatrixXd D16, D8;  // differentiation matrices (standard node order)

    ChebTables() {
        for (int j = 0; j <= kN; ++j) nodes[j] = std::cos(j * pi / kN);
        for (int n = 0; n <= kN; ++n)
            for (int j = 0; j <= kN; ++j) cosjn[n][j] = std::cos(n * j * pi / kN);
        const int M = kN / 2;
        for (int j = 0; j <= M; ++j) nodes8[j] = std::cos(j * pi / M);
        for (int n = 0; n <= M; ++n)
            for (int j = 0; j <= M; ++j) cosjn8[n][j] = std::cos(n * j * pi / M);
        D16 = diff_matrix(kN);
        D8 = diff_matrix(M);
    }

    static Eigen::MatrixXd diff_matrix(int N) {
        Eigen::MatrixXd D(N + 1, N + 1);
        std::vector<double> x(N + 1), c(N + 1);
        for (int j = 0; j <= N; ++j) {
            x[j] = std::cos(j * pi / N);
            c[j] = (j == 0 || j == N) ? 2.0 : 1.0;
        }
        for (int i = 0; i <= N; ++i) {
            double diag = 0.0;
            for (int j = 0; j <= N; ++j) {
                if (i == j) continue;
                const double sgn = (((i + j) & 1) == 0) ? 1.0 : -1.0;
                D(i, j) = (c[i] / c[j]) * sgn / (x[i] - x[j]);
                diag -= D(i, j);
            }
            D(i, i) = diag;
        }
        return D;
    }
};

const ChebTables& tables() {
    static const ChebTables t;
    return t;
}

// Clenshaw-Curtis weights applied to values at Chebyshev-Lobatto nodes:
// integral over tau in [-1,1] of the degree-N interpolant.
template <int N, typename Cos>
cplx cc_integrate(const std::array<cplx, N + 1>& v, const Cos& cosjn) {
    cplx total = 0.0;
    for (int n = 0; n <= N; n += 2) {
        cplx b = 0.0;
        for (int j = 0; j <= N; ++j) {
            const double cj = (j == 0 || j == N) ? 0.5 : 1.0;
            b += cj * v[j] * cosjn[n][j];
        }
        const double cn = (n == 0 || n == N) ? 2.0 : 1.0;
        b *= 2.0 / (N * cn);
        total += b * (2.0 / (1.0 - double(n) * double(n)));
    }
    return total;
}

struct PanelEval {
    cplx value;
    double error;
    long nodes;
};

struct SegmentContext {
    const Segment* seg;
    const Integrand* f;
};

// Values of the full integrand (amplitude x oscillatory factor x dk/ds) at
// the 17 panel nodes; the embedded 9-node rule reuses the even entries.
PanelEval eval_panel_cc(const SegmentContext& ctx, double s0, double s1) {
    const auto& T = tables();
    const double m = 0.5 * (s0 + s1), h = 0.5 * (s1 - s0);
    std::array<cplx, kN + 1> v{};
    for (int j = 0; j <= kN; ++j) {
        const double s = m + h * T.nodes[j];
        const cplx k = ctx.seg->point(s);
        cplx val = ctx.f->amplitude(k);
        if (ctx.f->phase) val *= std::exp(iu * ctx.f->phase->theta(k));
        v[j] = val * ctx.seg->tangent(s);
    }
    std::array<cplx, kN / 2 + 1> v8{};
    for (int j = 0; j <= kN / 2; ++j) v8[j] = v[2 * j];
    const cplx i16 = h * cc_integrate<kN>(v, T.cosjn);
    const cplx i8 = h * cc_integrate<kN / 2>(v8, T.cosjn8);
    return {i16, std::abs(i16 - i8), kN + 1};
}

// Levin collocation: solve p' + i theta'(s) p = amplitude * dk/ds on the
// panel and difference p e^{i theta} at the endpoints. Error estimated by the
// embedded half-order solve.
PanelEval eval_panel_levin(const SegmentContext& ctx, double s0, double s1) {
    const auto& T = tables();
    const double m = 0.5 * (s0 + s1), h = 0.5 * (s1 - s0);

    auto solve = [&](int N, const Eigen::MatrixXd& D, const double* nodes) -> cplx {
        CMatrix A(N + 1, N + 1);
        CVector rhs(N + 1);
        std::array<cplx, kN + 1> theta_at{};
        for (int j = 0; j <= N; ++j) {
            const double s = m + h * nodes[j];
            const cplx k = ctx.seg->point(s);
            const cplx dk = ctx.seg->tangent(s);
            rhs(j) = ctx.f->amplitude(k) * dk;
            theta_at[j] = ctx.f->phase->theta(k);
            const cplx dtheta_s = ctx.f->phase->dtheta(k) * dk;
            for (int i = 0; i <= N; ++i) A(j, i) = D(j, i) / h;
            A(j, j) += iu * dtheta_s;
        }
        CVector p = A.partialPivLu().solve(rhs);
        // nodes[0] = +1 maps to s1, nodes[N] = -1 maps to s0
        return p(0) * std::exp(iu * theta_at[0]) - p(N) * std::exp(iu * theta_at[N]);
    };

    const cplx full = solve(kN, T.D16, T.nodes.data());
    const cplx half = solve(kN / 2, T.D8, T.nodes8.data());
    return {full, std::abs(full - half), kN + 1 + kN / 2 + 1};
}

struct AdaptState {
    const QuadSettings* settings;
    long panels_used = 0;
    long nodes = 0;
    double err_sum = 0.0;
    cplx value = 0.0;
    bool budget_exhausted = false;
};

// Phase sweep and stationarity probe across a panel, in s units.
void phase_profile(const SegmentContext& ctx, double s0, double s1, double& sweep,
                   double& min_rate, double& max_rate) {
    sweep = 0.0;
    min_rate = std::numeric_limits<double>::max();
    max_rate = 0.0;
    if (!ctx.f->phase) {
        min_rate = 0.0;
        return;
    }
    const int probes = 5;
    double prev = 0.0;
    for (int j = 0; j <= probes; ++j) {
        const double s = s0 + (s1 - s0) * j / probes;
        const cplx rate = ctx.f->phase->dtheta(ctx.seg->point(s)) * ctx.seg->tangent(s);
        const double r = std::abs(rate);
        min_rate = std::min(min_rate, r);
        max_rate = std::max(max_rate, r);
        if (j > 0) sweep += 0.5 * (prev + r) * (s1 - s0) / probes;
        prev = r;
    }
}

void adapt(const SegmentContext& ctx, double s0, double s1, double local_tol, int depth,
           AdaptState& st) {
    if (st.budget_exhausted) return;
    double sweep, rmin, rmax;
    phase_profile(ctx, s0, s1, sweep, rmin, rmax);

    const bool levin_ok = ctx.f->phase && sweep >= st.settings->levin_phase_threshold &&
                          rmin > 0.25 * rmax && rmin * (s1 - s0) > 1.0;

    PanelEval pe = levin_ok ? eval_panel_levin(ctx, s0, s1) : eval_panel_cc(ctx, s0, s1);
    st.nodes += pe.nodes;

    const bool accept = pe.error <= local_tol || depth >= st.settings->max_depth;
    if (accept) {
        st.value += pe.value;
        st.err_sum += pe.error;
        ++st.panels_used;
        return;
    }
    if (st.panels_used >= st.settings->max_panels) {
        st.value += pe.value;
        st.err_sum += pe.error;
        st.budget_exhausted = true;
        ++st.panels_used;
        return;
    }
    const double sm = 0.5 * (s0 + s1);
    adapt(ctx, s0, sm, 0.5 * local_tol, depth + 1, st);
    adapt(ctx, sm, s1, 0.5 * local_tol, depth + 1, st);
}

}  // namespace

IntegralResult integrate_contour(const Integrand& f, const Contour& contour,
                                 const QuadSettings& settings, double tail_estimate) {
    if (!(settings.tol > 0.0)) throw DomainError("integrate_contour: tol must be positive");
    AdaptState st;
    st.settings = &settings;

    // Fraction of the budgeted tolerance assigned to each seeded panel.
    std::size_t seed_count = 0;
    for (const auto& seg : contour.segments) seed_count += seg.breaks.size() + 1;
    if (seed_count == 0) seed_count = 1;

    for (const auto& seg : contour.segments) {
        SegmentContext ctx{&seg, &f};
        std::vector<double> bounds{0.0};
        for (double b : seg.breaks)
            if (b > 1e-12 && b < 1.0 - 1e-12) bounds.push_back(b);
        bounds.push_back(1.0);
        std::sort(bounds.begin(), bounds.end());
        for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
            adapt(ctx, bounds[i], bounds[i + 1], settings.tol / double(seed_count), 0, st);
        }
    }

    IntegralResult out;
    out.value = st.value;
    out.est_error = st.err_sum;
    out.nodes_used = st.nodes;
    out.tail_estimate = tail_estimate;
    out.converged = !st.budget_exhausted;
    if (!out.converged && settings.throw_on_failure) {
        throw ConvergenceFailure("integrate_contour: panel budget exhausted", out);
    }
    return out;
}

IntegralResult integrate_real_interval(const std::function<cplx(double)>& f, double a, double b,
                                       const QuadSettings& settings) {
    Contour c;
    c.cls = Contour::Class::RealLine;
    c.truncation_radius = std::max(std::abs(a), std::abs(b));
    Segment s;
    s.kind = Segment::Kind::Line;
    s.p0 = a;
    s.p1 = b;
    c.segments.push_back(s);
    Integrand g{[&f](cplx k) { return f(k.real()); }, std::nullopt};
    return integrate_contour(g, c, settings);
}

cplx osc_tail_correction(const Integrand& f, cplx k_end, double sign, double* next_order) {
    // int_{k_end}^{sign inf} g e^{i theta} = [g e^{i theta}/(i theta')] - ...
    const cplx g = f.amplitude(k_end);
    const cplx th = f.phase->theta(k_end);
    const cplx dth = f.phase->dtheta(k_end);
    const cplx boundary = -sign * g * std::exp(iu * th) / (iu * dth);
    if (next_order) {
        // Magnitude of the next IBP term via a one-sided difference of g/theta'.
        const double hstep = 1e-3 * std::max(1.0, std::abs(k_end));
        const cplx kp = k_end + sign * hstep;
        const cplx ratio_p = f.amplitude(kp) / f.phase->dtheta(kp);
        const cplx ratio_0 = g / dth;
        *next_order = std::abs((ratio_p - ratio_0) / hstep) / std::abs(dth);
    }
    return boundary;
}

IntegralResult fourier_line_integral(const Integrand& f_in, double sigma, double x, double t,
                                     const QuadSettings& settings, double tail_tol,
                                     double r_cap) {
    if (t < 0.0) throw DomainError("fourier_line_integral: t must be non-negative");

    Integrand f;
    f.amplitude = f_in.amplitude;
    f.phase = PhaseSpec{
        [=](cplx k) { return k * x + sigma * k * k * t; },
        [=](cplx k) { return cplx(x) + 2.0 * sigma * k * t; },
    };

    const double kstar = (t > 0.0) ? -x / (2.0 * sigma * t) : 0.0;

    // Truncation from the IBP tail bound |g/theta'| at +-R.
    auto tail_at = [&](double R) {
        const double dplus = std::abs(x + 2.0 * sigma * R * t);
        const double dminus = std::abs(x - 2.0 * sigma * R * t);
        const double gp = std::abs(f.amplitude(R));
        const double gm = std::abs(f.amplitude(-R));
        return gp / std::max(1.0, dplus) + gm / std::max(1.0, dminus);
    };
    double R = std::max({30.0, 2.0 * std::abs(kstar), 4.0 * std::abs(x)});
    while (R < r_cap && tail_at(R) > tail_tol) R *= 1.8;
    R = std::min(R, r_cap);

    Contour c;
    c.cls = Contour::Class::RealLine;
    c.truncation_radius = R;
    Segment s;
    s.kind = Segment::Kind::Line;
    s.p0 = -R;
    s.p1 = R;
    // Mandatory break at the stationary point with graded neighbors at the
    // (sigma t)^{-1/2} oscillation scale.
    if (t > 0.0 && std::abs(kstar) < R) {
        const double w = std::sqrt(pi / (4.0 * sigma * t));
        for (double mult : {0.0, 1.0, 2.0, 4.0, 8.0, 16.0, -1.0, -2.0, -4.0, -8.0, -16.0}) {
            const double kb = kstar + mult * w;
            if (std::abs(kb) < R) s.breaks.push_back((kb + R) / (2.0 * R));
        }
        std::sort(s.breaks.begin(), s.breaks.end());
    }
    c.segments.push_back(s);

    double next_order_p = 0.0, next_order_m = 0.0;
    IntegralResult res = integrate_contour(f, c, settings, 0.0);
    // Add the first IBP tail terms; what remains is second order. Skip when
    // the phase is too slow at the cut for the expansion to make sense.
    if (std::abs(x + 2.0 * sigma * R * t) > 0.5) {
        res.value += osc_tail_correction(f, cplx(R), +1.0, &next_order_p);
    } else {
        next_order_p = std::abs(f.amplitude(R));
    }
    if (std::abs(x - 2.0 * sigma * R * t) > 0.5) {
        res.value += osc_tail_correction(f, cplx(-R), -1.0, &next_order_m);
    } else {
        next_order_m = std::abs(f.amplitude(-R));
    }
    res.tail_estimate = next_order_p + next_order_m;
    res.value /= 2.0 * pi;
    res.est_error = res.est_error / (2.0 * pi);
    res.tail_estimate /= 2.0 * pi;
    return res;
}

IntegralResult real_line_fourier_term(const TransformedProfile& qhat0, double sigma, double x,
                                      double t, const QuadSettings& settings, double tail_tol,
                                      double r_cap) {
    Integrand f;
    f.amplitude = [&qhat0](cplx k) { return qhat0(k); };
    return fourier_line_integral(f, sigma, x, t, settings, tail_tol, r_cap);
}

}  // namespace utm
