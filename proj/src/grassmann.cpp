#include "grassalpha/grassmann.hpp"

#include <cmath>

namespace grassalpha {

namespace {

constexpr double kChartCutoff = 1e-10;

double largest_minor_abs(const GrassmannPoint& pt) {
    double best = 0.0;
    for (const auto& i : enumerate_index_sets(pt.p, pt.q)) {
        best = std::max(best, std::abs(det(minor_rows(pt.rep, i))));
    }
    return best;
}

}  // namespace

GrassmannPoint::GrassmannPoint(CMatrix representative) {
    if (representative.rows() <= representative.cols()) {
        throw DimensionError("representative must be (p+q) x p with q >= 1");
    }
    if (!all_finite(representative)) throw DimensionError("representative has non-finite entries");
    p = representative.cols();
    q = representative.rows() - representative.cols();
    rep = std::move(representative);
    const auto ev = hermitian_eigenvalues(gram(rep));
    const double smax = std::sqrt(std::max(ev.back(), 0.0));
    const double smin = std::sqrt(std::max(ev.front(), 0.0));
    if (!(smin > 1e-10 * smax)) {
        throw DimensionError("representative is rank deficient");
    }
}

GrassmannPoint GrassmannPoint::unchecked(CMatrix representative) {
    GrassmannPoint pt;
    pt.p = representative.cols();
    pt.q = representative.rows() - representative.cols();
    pt.rep = std::move(representative);
    return pt;
}

GrassmannPoint canonical_point(const IndexSet& I) {
    const int p = I.size();
    const int n = I.n;
    CMatrix rep(n, p);
    for (int j = 0; j < p; ++j) rep(I.members[j] - 1, j) = 1.0;
    return GrassmannPoint::unchecked(std::move(rep));
}

double chart_margin(const GrassmannPoint& pt, const IndexSet& I) {
    const double best = largest_minor_abs(pt);
    if (best == 0.0) return 0.0;
    return std::abs(det(minor_rows(pt.rep, I))) / best;
}

IndexSet best_chart(const GrassmannPoint& pt) {
    double best = -1.0;
    IndexSet arg;
    for (const auto& i : enumerate_index_sets(pt.p, pt.q)) {
        const double v = std::abs(det(minor_rows(pt.rep, i)));
        if (v > best) {
            best = v;
            arg = i;
        }
    }
    return arg;
}

ChartCoordinates to_chart(const GrassmannPoint& pt, const IndexSet& I) {
    if (I.n != pt.p + pt.q || I.size() != pt.p) {
        throw DimensionError("index set does not fit the point dimensions");
    }
    const CMatrix mi = minor_rows(pt.rep, I);
    if (std::abs(det(mi)) <= kChartCutoff * largest_minor_abs(pt)) {
        throw NotInChartError("point is outside chart " + I.to_string());
    }
    const CMatrix normalized = pt.rep * inverse(mi);
    return {I, minor_rows(normalized, I.complement())};
}

GrassmannPoint from_chart(const ChartCoordinates& c) {
    const int p = c.I.size();
    const int q = c.I.n - p;
    if (c.Z.rows() != q || c.Z.cols() != p) {
        throw DimensionError("chart coordinate must be q x p");
    }
    if (!all_finite(c.Z)) throw DimensionError("chart coordinate has non-finite entries");
    CMatrix rep(c.I.n, p);
    for (int j = 0; j < p; ++j) rep(c.I.members[j] - 1, j) = 1.0;
    const IndexSet comp = c.I.complement();
    for (int r = 0; r < q; ++r) {
        for (int j = 0; j < p; ++j) rep(comp.members[r] - 1, j) = c.Z(r, j);
    }
    return GrassmannPoint::unchecked(std::move(rep));
}

ChartCoordinates transition(const ChartCoordinates& c, const IndexSet& to) {
    return to_chart(from_chart(c), to);
}

double transition_jacobian_det_sq(const ChartCoordinates& c, const IndexSet& to) {
    const GrassmannPoint pt = from_chart(c);
    const CMatrix alpha = minor_rows(pt.rep, to);
    const double a = std::abs(det(alpha));
    if (a <= kChartCutoff * largest_minor_abs(pt)) {
        throw NotInChartError("target chart minor is singular");
    }
    return std::pow(a, -2.0 * (pt.p + pt.q));
}

GrassmannPoint apply_unitary(const CMatrix& u, const GrassmannPoint& pt) {
    if (!u.square() || u.rows() != pt.p + pt.q) {
        throw DimensionError("unitary must be (p+q) x (p+q)");
    }
    if (frobenius_norm(adjoint(u) * u - CMatrix::identity(u.rows())) > 1e-10) {
        throw DimensionError("matrix is not unitary within 1e-10");
    }
    return GrassmannPoint::unchecked(u * pt.rep);
}

GrassmannPoint dual(const GrassmannPoint& pt) {
    // columns p..p+q-1 of the full Q factor span the orthogonal complement
    const auto [q, r] = householder_qr(pt.rep);
    const int n = pt.p + pt.q;
    CMatrix comp(n, pt.q);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < pt.q; ++j) comp(i, j) = q(i, pt.p + j);
    }
    return GrassmannPoint::unchecked(std::move(comp));
}

CMatrix projector(const GrassmannPoint& pt) {
    const CMatrix ah = adjoint(pt.rep);
    return pt.rep * inverse(ah * pt.rep) * ah;
}

bool same_point(const GrassmannPoint& a, const GrassmannPoint& b, double tol) {
    if (a.p + a.q != b.p + b.q || a.p != b.p) return false;
    return frobenius_norm(projector(a) - projector(b)) <= tol;
}

double numerical_jacobian_det_sq(const std::function<CMatrix(const CMatrix&)>& map,
                                 const CMatrix& z0, double h) {
    if (h <= 0.0 || !(h > 1e-12)) throw DimensionError("step size underflow");
    const int m = z0.rows() * z0.cols();
    CMatrix jac(2 * m, 2 * m);
    CMatrix zp = z0;
    CMatrix zm = z0;
    for (int t = 0; t < m; ++t) {
        for (int part = 0; part < 2; ++part) {
            const Complex delta = (part == 0) ? Complex{h, 0.0} : Complex{0.0, h};
            zp.data()[t] = z0.data()[t] + delta;
            zm.data()[t] = z0.data()[t] - delta;
            const CMatrix fp = map(zp);
            const CMatrix fm = map(zm);
            zp.data()[t] = z0.data()[t];
            zm.data()[t] = z0.data()[t];
            if (fp.rows() * fp.cols() != m) {
                throw DimensionError("map must preserve the coordinate count");
            }
            for (int s = 0; s < m; ++s) {
                const Complex d = (fp.data()[s] - fm.data()[s]) / (2.0 * h);
                jac(2 * s, 2 * t + part) = d.real();
                jac(2 * s + 1, 2 * t + part) = d.imag();
            }
        }
    }
    return det(jac).real();
}

}  // namespace grassalpha
