#ifndef UTM_MODEL_HPP
#define UTM_MODEL_HPP

#include <string>
#include <vector>

#include "utm/common.hpp"
#include "utm/transforms.hpp"

namespace utm {

/// Physical parameters of one medium.
struct MediumParams {
    double sigma = 1.0;  // dispersion coefficient, > 0
    double beta = 1.0;   // flux weight, != 0
    cplx gamma = 0.0;    // far-field value (semi-infinite problems only)
};

/// Two half lines joined at x = 0.
struct SemiInfiniteProblem {
    MediumParams left, right;
    Profile ic_left = Profile::zero(Side::Left);
    Profile ic_right = Profile::zero(Side::Right);
};

/// Interval [-a, 0] joined to [0, b], Dirichlet data at the outer ends.
struct FiniteProblem {
    MediumParams left, right;  // gamma unused
    double a = 1.0, b = 1.0;
    double alpha1 = 1.0, alpha3 = 1.0;
    TimeSignal f_left = TimeSignal::zero();
    TimeSignal f_right = TimeSignal::zero();
    Profile ic_left = Profile::zero(Side::Left);
    Profile ic_right = Profile::zero(Side::Right);
};

enum class ValidationCode {
    NonPositiveSigma,
    ZeroBeta,
    ProfileMismatch,
    NonPositiveLength,
    ZeroAlpha,
};

struct ValidationIssue {
    ValidationCode code;
    std::string detail;
};

/// lambda(sigma, k) = -i sigma k^2, the exponent map of the evolution.
inline cplx lambda_map(double sigma, cplx k) { return -iu * sigma * k * k; }

/// All invariant violations of a semi-infinite problem; empty means accepted.
std::vector<ValidationIssue> validate_semi(const SemiInfiniteProblem& p);

/// All invariant violations of a finite problem; empty means accepted.
std::vector<ValidationIssue> validate_finite(const FiniteProblem& p);

/// Throwing wrappers for call sites that require an already-valid problem.
void require_valid(const SemiInfiniteProblem& p);
void require_valid(const FiniteProblem& p);

std::string to_string(ValidationCode code);

}  // namespace utm

#endif
