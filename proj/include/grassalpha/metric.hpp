#pragma once

#include <functional>
#include <span>
#include <vector>

#include "grassalpha/grassmann.hpp"

namespace grassalpha {

/// Scalar function of chart coordinates (one chart fixed by the caller).
using ChartFn = std::function<double(const CMatrix&)>;
/// Scalar function on the manifold itself.
using PointFn = std::function<double(const GrassmannPoint&)>;

class FiniteDifferenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// F(Z) = det(I_p + tZ Zbar), the exponential of the Kahler potential.
/// Satisfies F >= 1 + sum |Z_ij|^2, with equality at p = 1.
double chart_F(const CMatrix& z);

/// log F(Z); the local potential of the metric in any chart.
double chart_potential(const CMatrix& z);

/// lambda_I(Z) = F(Z)^{-(p+q)}, the chart component of the volume form.
double volume_density(const CMatrix& z);

/// Mixed complex Hessian H_{lm} = d^2 f / dz^l dzbar^m by central differences
/// over real and imaginary parts, one Richardson pass (h then h/2). Throws
/// FiniteDifferenceError when the two step sizes disagree beyond 1e-3
/// relative. The result is Hermitian by construction.
CMatrix hermitian_hessian(const std::function<double(std::span<const Complex>)>& f,
                          std::span<const Complex> z0, double h = 1e-3);
CMatrix hermitian_hessian(const ChartFn& f, const CMatrix& z0, double h = 1e-3);

/// Metric components g_{t(a,j) t(b,l)} = B_ab * C_lj with B = (I_q + Zbar tZ)^{-1}
/// and C = (I_p + tZ Zbar)^{-1}, in the flattening t(a,j) = a*p + j (0-based).
/// The index placement is pinned by the finite-difference oracle tests.
CMatrix metric_closed_form(const CMatrix& z);

/// det of the closed-form metric; equals volume_density analytically.
double det_metric(const CMatrix& z);

/// Ricci components -d^2 log|g| via finite differences of log det_metric.
CMatrix ricci(const CMatrix& z, double h = 1e-3);

/// The same tensor through the potential route (p+q) * Hess(log F).
CMatrix ricci_from_potential(const CMatrix& z, double h = 1e-3);

/// ||Ricci - (p+q) g||_F / ||g||_F with g in closed form.
double einstein_residual(const CMatrix& z, double h = 1e-3);

CMatrix scale_metric(const CMatrix& g, double c);

struct AdmissibilityPoint {
    bool skipped = false;
    IndexSet chart;
    double min_eigenvalue = 0.0;
};

struct AdmissibilityReport {
    bool admissible_at_samples = false;
    double min_eigenvalue = 0.0;
    int evaluated = 0;
    int skipped = 0;
    std::vector<AdmissibilityPoint> points;
};

/// At each point: smallest eigenvalue of g + Hess(phi) in the best chart.
/// Points whose best chart carries less than chart_weight_min of the
/// Cauchy-Binet weight are skipped with a warning record.
AdmissibilityReport is_admissible(const PointFn& phi, std::span<const GrassmannPoint> points,
                                  double tol = 1e-9, double h = 1e-3,
                                  double chart_weight_min = 1e-6);

}  // namespace grassalpha
