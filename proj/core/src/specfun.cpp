#include "rectiforce/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace rectiforce {

double digamma(double u)
{
    if (!(u > 0.0) || !std::isfinite(u)) {
        throw std::invalid_argument("digamma: argument must be positive and finite");
    }
    // psi(u) = psi(u + 1) - 1/u until the asymptotic series is accurate.
    double shift = 0.0;
    while (u < 6.0) {
        shift += 1.0 / u;
        u += 1.0;
    }
    // ln u - 1/(2u) - sum_k B_2k / (2k u^2k), truncated after B_14; the
    // first omitted term is below 2e-13 at u = 6.
    const double w = 1.0 / (u * u);
    const double series =
        w * (1.0 / 12.0
             - w * (1.0 / 120.0
                    - w * (1.0 / 252.0
                           - w * (1.0 / 240.0
                                  - w * (1.0 / 132.0
                                         - w * (691.0 / 32760.0
                                                - w * (1.0 / 12.0)))))));
    return std::log(u) - 0.5 / u - series - shift;
}

}  // namespace rectiforce
