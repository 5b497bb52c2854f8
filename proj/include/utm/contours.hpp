#ifndef UTM_CONTOURS_HPP
#define UTM_CONTOURS_HPP

#include <vector>

#include "utm/common.hpp"
#include "utm/model.hpp"

namespace utm {

enum class Region { DPlus, DMinus, Exterior, Boundary };

/// Classifies k by the sign of Re(-ik^2) = 2 Re(k) Im(k): DPlus is the open
/// second quadrant, DMinus the open fourth quadrant.
Region region_membership(cplx k);

class DeformationTooLarge : public std::runtime_error {
public:
    explicit DeformationTooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// One smooth oriented piece of an integration path, s in [0, 1].
struct Segment {
    enum class Kind { Line, Arc, HyperbolicLift };
    Kind kind = Kind::Line;

    cplx p0, p1;                        // Line endpoints
    cplx center;                        // Arc
    double radius = 0.0, ang0 = 0.0, ang1 = 0.0;
    double kap0 = 0.0, kap1 = 0.0;      // HyperbolicLift: Re k from kap0 to kap1
    double href = 0.0;                  // height = href / |Re k|
    int sgn_h = 1;

    std::vector<double> breaks;         // seed panel boundaries (s values)

    cplx point(double s) const;
    cplx tangent(double s) const;       // dk/ds
    /// Inverse of Re(point(s)) for segments monotone in Re k; used to place
    /// panel breaks at prescribed real abscissae.
    double param_of_real(double kappa) const;
};

/// Oriented piecewise-smooth integration path with truncation metadata.
struct Contour {
    enum class Class { BoundaryDPlus, BoundaryDMinus, DeformedDPlus, DeformedDMinus, RealLine };

    std::vector<Segment> segments;
    Class cls = Class::RealLine;
    double truncation_radius = 0.0;
    double deformation_height = 0.0;

    /// Membership test for the closed region this contour class is allowed to
    /// visit (boundary rays plus the deformation band).
    bool region_ok(cplx k, double eps = 1e-9) const;

    Contour reversed() const;
};

/// Boundary of D^+ or D^- truncated at |k| = R. For d = 0 the exact quadrant
/// boundary; for d > 0 the corner is rounded by a quarter arc of radius d.
/// Orientation: plus runs -R -> origin -> +iR, minus runs +R -> origin -> -iR.
///
/// strip_limit, when positive, is the tightest transform validity strip the
/// contour must respect; d beyond it throws DeformationTooLarge.
Contour boundary_D(bool plus, double R, double d, double strip_limit = 0.0);

/// Controls for the growth-side arm of a deformed contour. For t > 0 the
/// factor e^{-lambda t} grows like e^{2 sigma t |Re k| h} on one side, so that
/// arm's height decays hyperbolically, h(kappa) = growth_budget/(2 sigma_t kappa),
/// keeping the amplification bounded by e^{growth_budget}.
struct D0Options {
    double sigma_t = 0.0;       // sigma * t of the evaluation; 0 = flat contour
    double growth_budget = 1.0; // max log-amplification allowed on the arm
    double r_growth = 0.0;      // extent of the growth-side arm (0: same as R)
};

/// Deformed contour for the finite problem: parallel to the real axis at
/// height d (above for plus, below for minus) with turn-downs to the axis at
/// the truncation ends. The growth-side arm hugs the axis per D0Options.
/// Orientation: plus left-to-right, minus right-to-left.
Contour deformed_D0(bool plus, const FiniteProblem& problem, double R, double d,
                    const D0Options& opts = {});

/// Default deformation height for the finite problem:
/// min(0.5, pi / (8 (a + b sqrt(sigma_L / sigma_R)))).
double default_deformation_height(const FiniteProblem& problem);

}  // namespace utm

#endif
