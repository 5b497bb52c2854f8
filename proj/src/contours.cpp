#include "utm/contours.hpp"

#include <algorithm>
#include <cmath>

namespace utm {

Region region_membership(cplx k) {
    const double s = 2.0 * k.real() * k.imag();
    if (s == 0.0) return Region::Boundary;
    if (s < 0.0) return (k.imag() > 0.0) ? Region::DPlus : Region::DMinus;
    return Region::Exterior;
}

cplx Segment::point(double s) const {
    switch (kind) {
        case Kind::Line:
            return p0 + (p1 - p0) * s;
        case Kind::Arc:
            return center + radius * std::polar(1.0, ang0 + (ang1 - ang0) * s);
        case Kind::HyperbolicLift: {
            const double rho = kap1 / kap0;  // same sign, geometric sweep
            const double kap = kap0 * std::pow(rho, s);
            return {kap, sgn_h * href / std::abs(kap)};
        }
    }
    return 0.0;
}

cplx Segment::tangent(double s) const {
    switch (kind) {
        case Kind::Line:
            return p1 - p0;
        case Kind::Arc:
            return radius * (ang1 - ang0) * iu * std::polar(1.0, ang0 + (ang1 - ang0) * s);
        case Kind::HyperbolicLift: {
            const double rho = kap1 / kap0;
            const double lr = std::log(rho);
            const double kap = kap0 * std::pow(rho, s);
            const double dkap = kap * lr;
            const double dh = -sgn_h * href / (kap * std::abs(kap)) * dkap;
            return {dkap, dh};
        }
    }
    return 0.0;
}

double Segment::param_of_real(double kappa) const {
    switch (kind) {
        case Kind::Line: {
            const double dx = p1.real() - p0.real();
            if (dx == 0.0) return 0.0;
            return (kappa - p0.real()) / dx;
        }
        case Kind::HyperbolicLift:
            return std::log(kappa / kap0) / std::log(kap1 / kap0);
        case Kind::Arc:
            return 0.0;  // not meaningful
    }
    return 0.0;
}

namespace {

// Distance from k to the ray from the origin along the given axis direction.
double ray_distance(cplx k, bool along_real, double sign) {
    if (along_real) {
        return (sign * k.real() >= 0.0) ? std::abs(k.imag()) : std::abs(k);
    }
    return (sign * k.imag() >= 0.0) ? std::abs(k.real()) : std::abs(k);
}

}  // namespace

bool Contour::region_ok(cplx k, double eps) const {
    const double R = truncation_radius + eps;
    const double d = deformation_height + eps;
    if (std::abs(k.real()) > R || std::abs(k.imag()) > R) return false;
    switch (cls) {
        case Class::BoundaryDPlus:
            // Within d of the negative-real or positive-imaginary ray.
            return std::min(ray_distance(k, true, -1.0), ray_distance(k, false, +1.0)) <= d;
        case Class::BoundaryDMinus:
            return std::min(ray_distance(k, true, +1.0), ray_distance(k, false, -1.0)) <= d;
        case Class::DeformedDPlus:
            return k.imag() >= -eps && k.imag() <= d;
        case Class::DeformedDMinus:
            return k.imag() <= eps && k.imag() >= -d;
        case Class::RealLine:
            return std::abs(k.imag()) <= eps;
    }
    return false;
}

Contour Contour::reversed() const {
    Contour out = *this;
    out.segments.clear();
    for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
        Segment s = *it;
        switch (s.kind) {
            case Segment::Kind::Line:
                std::swap(s.p0, s.p1);
                break;
            case Segment::Kind::Arc:
                std::swap(s.ang0, s.ang1);
                break;
            case Segment::Kind::HyperbolicLift:
                std::swap(s.kap0, s.kap1);
                break;
        }
        std::vector<double> rb;
        for (auto b = s.breaks.rbegin(); b != s.breaks.rend(); ++b) rb.push_back(1.0 - *b);
        s.breaks = std::move(rb);
        out.segments.push_back(std::move(s));
    }
    return out;
}

namespace {

Segment line(cplx p0, cplx p1) {
    Segment s;
    s.kind = Segment::Kind::Line;
    s.p0 = p0;
    s.p1 = p1;
    return s;
}

Segment arc(cplx center, double radius, double ang0, double ang1) {
    Segment s;
    s.kind = Segment::Kind::Arc;
    s.center = center;
    s.radius = radius;
    s.ang0 = ang0;
    s.ang1 = ang1;
    return s;
}

Segment hyperbolic(double kap0, double kap1, double href, int sgn_h) {
    Segment s;
    s.kind = Segment::Kind::HyperbolicLift;
    s.kap0 = kap0;
    s.kap1 = kap1;
    s.href = href;
    s.sgn_h = sgn_h;
    return s;
}

}  // namespace

Contour boundary_D(bool plus, double R, double d, double strip_limit) {
    if (!(R > 0.0)) throw DomainError("boundary_D: R must be positive");
    if (d < 0.0) throw DomainError("boundary_D: d must be non-negative");
    if (strip_limit > 0.0 && d >= strip_limit)
        throw DeformationTooLarge("boundary_D: d exceeds a transform validity strip");
    if (d >= R) throw DomainError("boundary_D: d must be smaller than R");

    Contour c;
    c.cls = plus ? Contour::Class::BoundaryDPlus : Contour::Class::BoundaryDMinus;
    c.truncation_radius = R;
    c.deformation_height = d;
    if (plus) {
        if (d == 0.0) {
            c.segments.push_back(line(cplx(-R, 0.0), cplx(0.0, 0.0)));
            c.segments.push_back(line(cplx(0.0, 0.0), cplx(0.0, R)));
        } else {
            c.segments.push_back(line(cplx(-R, 0.0), cplx(-d, 0.0)));
            c.segments.push_back(arc(0.0, d, pi, pi / 2.0));
            c.segments.push_back(line(cplx(0.0, d), cplx(0.0, R)));
        }
    } else {
        if (d == 0.0) {
            c.segments.push_back(line(cplx(R, 0.0), cplx(0.0, 0.0)));
            c.segments.push_back(line(cplx(0.0, 0.0), cplx(0.0, -R)));
        } else {
            c.segments.push_back(line(cplx(R, 0.0), cplx(d, 0.0)));
            c.segments.push_back(arc(0.0, d, 0.0, -pi / 2.0));
            c.segments.push_back(line(cplx(0.0, -d), cplx(0.0, -R)));
        }
    }
    return c;
}

double default_deformation_height(const FiniteProblem& p) {
    const double s = std::sqrt(p.left.sigma / p.right.sigma);
    return std::min(0.5, pi / (8.0 * (p.a + p.b * s)));
}

Contour deformed_D0(bool plus, const FiniteProblem& problem, double R, double d,
                    const D0Options& opts) {
    if (!(d > 0.0)) throw DomainError("deformed_D0: d must be positive");
    if (!(R > d)) throw DomainError("deformed_D0: R must exceed d");
    const double lstrip = problem.ic_left.strip();
    const double rstrip = problem.ic_right.strip();
    if (d >= std::min(lstrip, rstrip))
        throw DeformationTooLarge("deformed_D0: d exceeds a transform validity strip");

    const int side = plus ? +1 : -1;
    Contour c;
    c.cls = plus ? Contour::Class::DeformedDPlus : Contour::Class::DeformedDMinus;
    c.deformation_height = d;

    // Growth side: Re k < 0 for the plus contour, Re k > 0 for the minus one.
    // Flat height d is safe out to kappa_d = budget / (2 sigma_t d); beyond it
    // the arm follows h = budget / (2 sigma_t |kappa|).
    double r_growth = (opts.r_growth > 0.0) ? opts.r_growth : R;
    double kappa_d = r_growth;  // flat all the way when growth inactive
    if (opts.sigma_t > 0.0) {
        kappa_d = opts.growth_budget / (2.0 * opts.sigma_t * d);
        kappa_d = std::max(kappa_d, 4.0 * d);
        kappa_d = std::min(kappa_d, r_growth);
    }
    c.truncation_radius = std::max(R, r_growth);

    const double href = d * kappa_d;  // h(kappa) = href / |kappa| on the arm
    const double gsign = plus ? -1.0 : +1.0;  // sign of Re k on the growth side

    std::vector<Segment> segs;
    // End turn at the growth-side tip.
    const double h_tip = (kappa_d < r_growth) ? href / r_growth : d;
    segs.push_back(line(cplx(gsign * r_growth, 0.0), cplx(gsign * r_growth, side * h_tip)));
    if (kappa_d < r_growth) {
        segs.push_back(hyperbolic(gsign * r_growth, gsign * kappa_d, href, side));
    }
    segs.push_back(line(cplx(gsign * kappa_d, side * d), cplx(-gsign * R, side * d)));
    segs.push_back(line(cplx(-gsign * R, side * d), cplx(-gsign * R, 0.0)));

    c.segments = std::move(segs);
    return c;
}

}  // namespace utm
