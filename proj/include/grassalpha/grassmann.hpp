#pragma once

#include <functional>

#include "grassalpha/cmatrix.hpp"
#include "grassalpha/index_set.hpp"

namespace grassalpha {

class NotInChartError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A p-plane in C^{p+q}, held as a full-rank (p+q) x p representative.
/// Representatives are unique only up to right GL_p action; equality is
/// decided through orthogonal projectors (see same_point).
struct GrassmannPoint {
    int p = 0;
    int q = 0;
    CMatrix rep;

    explicit GrassmannPoint(CMatrix representative);

    /// Skips the rank check; for construction paths that guarantee rank p.
    static GrassmannPoint unchecked(CMatrix representative);

private:
    GrassmannPoint() = default;
};

struct ChartCoordinates {
    IndexSet I;
    CMatrix Z;  // q x p
};

/// The point with m_I(rep) = identity and m_{I^c}(rep) = 0.
GrassmannPoint canonical_point(const IndexSet& I);

/// Relative size |det m_I(rep)| / max_J |det m_J(rep)| in [0, 1]; scale-free
/// chart-membership margin. Charts below 1e-10 are treated as unusable.
double chart_margin(const GrassmannPoint& pt, const IndexSet& I);

/// Index set maximizing |det m_I(rep)|. By Cauchy-Binet its squared minor is
/// at least det(Gram)/C(p+q,p), so a usable chart always exists.
IndexSet best_chart(const GrassmannPoint& pt);

ChartCoordinates to_chart(const GrassmannPoint& pt, const IndexSet& I);
GrassmannPoint from_chart(const ChartCoordinates& c);

/// Chart change Z_I -> Z_J at the same point.
ChartCoordinates transition(const ChartCoordinates& c, const IndexSet& to);

/// Closed-form |det d(Z_to)/d(Z_I)|^2 = |det m_to(P_I)|^{-2(p+q)} of the
/// chart change, for comparison against numerical_jacobian_det_sq.
double transition_jacobian_det_sq(const ChartCoordinates& c, const IndexSet& to);

/// Left action of a unitary on points; throws unless ||U^H U - I|| <= 1e-10.
GrassmannPoint apply_unitary(const CMatrix& u, const GrassmannPoint& pt);

/// Orthogonal complement of the column space, as a point of G_{q,p}.
GrassmannPoint dual(const GrassmannPoint& pt);

/// Hermitian projector rep (rep^H rep)^{-1} rep^H onto the plane.
CMatrix projector(const GrassmannPoint& pt);

bool same_point(const GrassmannPoint& a, const GrassmannPoint& b, double tol = 1e-8);

/// |det(complex Jacobian)|^2 of a holomorphic chart-to-chart map at Z0,
/// assembled as the determinant of the real 2pq x 2pq Jacobian by central
/// differences over real and imaginary parts.
double numerical_jacobian_det_sq(const std::function<CMatrix(const CMatrix&)>& map,
                                 const CMatrix& z0, double h = 1e-5);

}  // namespace grassalpha
