#ifndef UTM_TRANSFORMS_HPP
#define UTM_TRANSFORMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "utm/common.hpp"

namespace utm {

enum class Side { Left, Right };

enum class ProfileKind {
    GaussianLinear,     // (c0 + c1 x) e^{-x^2}
    ShiftedTanh,        // A (tanh x -+ 1), decaying branch for the given side
    ExpDecay,           // A e^{-rho |x|} toward the far end
    CompactPolynomial,  // sum c_j x^j on [support_lo, support_hi], 0 outside
    Sampled,            // interpolated samples with declared tail decay rate
};

/// Initial-condition profile. The stored shape decays to zero toward the
/// far end of its half line; the physical profile is shape(x) + asymptote.
struct Profile {
    ProfileKind kind = ProfileKind::GaussianLinear;
    Side side = Side::Right;
    cplx asymptote = 0.0;

    double c0 = 0.0, c1 = 0.0;       // GaussianLinear
    double amplitude = 0.0;          // ShiftedTanh / ExpDecay
    double rate = 0.0;               // ExpDecay / Sampled tail decay
    std::vector<double> coeffs;      // CompactPolynomial
    double support_lo = 0.0, support_hi = 0.0;
    std::vector<double> grid;        // Sampled
    std::vector<cplx> values;

    /// Decaying part of the profile (physical value minus asymptote).
    cplx shape(double x) const;
    /// Physical profile value shape(x) + asymptote.
    cplx value(double x) const;
    /// Half-width of the strip of analyticity/validity of the transform in Im k.
    /// Entire kinds report a large sentinel value.
    double strip() const;

    static Profile gaussian_linear(Side s, double c0, double c1, cplx gamma = 0.0);
    static Profile shifted_tanh(Side s, double amplitude, cplx gamma = 0.0);
    static Profile exp_decay(Side s, double amplitude, double rate, cplx gamma = 0.0);
    static Profile compact_polynomial(Side s, std::vector<double> coeffs, double lo, double hi);
    static Profile sampled(Side s, std::vector<double> grid, std::vector<cplx> values,
                           double decay_rate, cplx gamma = 0.0);
    static Profile zero(Side s, cplx gamma = 0.0);
};

/// Half-line Fourier transform of a profile's decaying part, evaluable at
/// complex k inside the profile's validity strip.
struct TransformedProfile {
    Profile source;
    double strip;

    explicit TransformedProfile(Profile p) : source(std::move(p)), strip(source.strip()) {}

    /// v-hat(k): int e^{-ikx} shape(x) dx over the support half line (or the
    /// compact support). Left profiles require Im k >= -strip, right profiles
    /// Im k <= +strip; violations throw OutOfStrip.
    cplx operator()(cplx k) const;
};

/// Signals a transform evaluated outside its strip of validity (a contour
/// was deformed further than the profile's decay rate allows).
class OutOfStrip : public std::runtime_error {
public:
    explicit OutOfStrip(const std::string& what) : std::runtime_error(what) {}
};

class QuadratureFailure : public std::runtime_error {
public:
    explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

enum class TimeSignalKind { Zero, Constant, Exponential, Sinusoid, Sampled };

/// Boundary forcing signal f(t) for the finite problem.
struct TimeSignal {
    TimeSignalKind kind = TimeSignalKind::Zero;
    cplx c = 0.0;      // Constant / Exponential / Sinusoid amplitude
    cplx mu = 0.0;     // Exponential rate
    double omega0 = 0.0;  // Sinusoid frequency, f = c sin(omega0 t)
    std::vector<double> grid;
    std::vector<cplx> values;

    cplx value(double t) const;

    static TimeSignal zero() { return {}; }
    static TimeSignal constant(cplx c);
    static TimeSignal exponential(cplx c, cplx mu);
    static TimeSignal sinusoid(cplx c, double omega0);
    static TimeSignal sampled(std::vector<double> grid, std::vector<cplx> values);
};

/// Stabilized time transform: int_0^t e^{-lam (t-s)} f(s) ds, i.e. the product
/// e^{-lam t} f-hat(lam, t). Never overflows for Re lam >= 0.
cplx time_transform_convolved(const TimeSignal& f, cplx lam, double t);

/// Split of the stabilized transform into the piece carrying e^{-lam t} and
/// the piece free of it: result = plain + e^{-lam t} * carrier. Available for
/// all closed-form kinds; sampled signals report no split.
struct TimeTransformSplit {
    cplx plain;
    cplx carrier;
    bool valid;
};
TimeTransformSplit time_transform_split(const TimeSignal& f, cplx lam, double t);

}  // namespace utm

#endif
