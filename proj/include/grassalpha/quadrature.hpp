#pragma once

#include <functional>

namespace grassalpha {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
};

/// Tanh-sinh quadrature on (a, b); robust to integrable endpoint
/// singularities. Levels are doubled until two consecutive results agree
/// to rel_tol or the level cap is hit.
QuadratureResult tanh_sinh(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = 1e-12);

/// integral_0^inf u^{d-1} (1+u)^{-kappa} du, finite iff kappa > d.
QuadratureResult radial_moment(double kappa, int d);

}  // namespace grassalpha
