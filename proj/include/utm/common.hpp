#ifndef UTM_COMMON_HPP
#define UTM_COMMON_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace utm {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double sqrt_pi = 1.77245385090551602730;
inline constexpr cplx iu{0.0, 1.0};

/// Thrown when an argument is outside a function's mathematical domain.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

inline double sq(double x) { return x * x; }
inline cplx sq(cplx z) { return z * z; }

/// expm1 for complex arguments: e^z - 1 without cancellation for small |z|.
inline cplx cexpm1(cplx z) {
    if (std::abs(z) > 0.5) return std::exp(z) - 1.0;
    // Taylor sum; terms decay fast for |z| <= 1/2.
    cplx term = z, sum = z;
    for (int n = 2; n < 24; ++n) {
        term *= z / static_cast<double>(n);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

/// (e^z - 1)/z with the removable singularity at z = 0 filled in.
inline cplx expm1_over(cplx z) {
    if (std::abs(z) < 1e-14) return 1.0 + z / 2.0;
    return cexpm1(z) / z;
}

inline bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace utm

#endif
