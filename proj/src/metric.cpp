#include "grassalpha/metric.hpp"

#include <cmath>
#include <limits>

namespace grassalpha {

double chart_F(const CMatrix& z) {
    const CMatrix a = CMatrix::identity(z.cols()) + gram(z);
    return det(a).real();
}

double chart_potential(const CMatrix& z) { return std::log(chart_F(z)); }

double volume_density(const CMatrix& z) {
    return std::pow(chart_F(z), -static_cast<double>(z.rows() + z.cols()));
}

namespace {

// one full mixed-Hessian pass at a fixed step
CMatrix hessian_pass(const std::function<double(std::span<const Complex>)>& f,
                     std::span<const Complex> z0, double h) {
    const int m = static_cast<int>(z0.size());
    std::vector<Complex> z(z0.begin(), z0.end());
    const double f0 = f(z);

    auto eval2 = [&](int t1, int part1, int t2, int part2, double s1, double s2) {
        const Complex d1 = (part1 == 0) ? Complex{s1 * h, 0.0} : Complex{0.0, s1 * h};
        const Complex d2 = (part2 == 0) ? Complex{s2 * h, 0.0} : Complex{0.0, s2 * h};
        z[t1] += d1;
        z[t2] += d2;
        const double v = f(z);
        z[t1] = z0[t1];
        z[t2] = z0[t2];
        return v;
    };
    // second partial wrt real coordinates (t1,part1) and (t2,part2)
    auto second = [&](int t1, int part1, int t2, int part2) {
        if (t1 == t2 && part1 == part2) {
            return (eval2(t1, part1, t1, part1, 0.5, 0.5) - 2.0 * f0 +
                    eval2(t1, part1, t1, part1, -0.5, -0.5)) /
                   (h * h);
        }
        return (eval2(t1, part1, t2, part2, 1, 1) - eval2(t1, part1, t2, part2, 1, -1) -
                eval2(t1, part1, t2, part2, -1, 1) + eval2(t1, part1, t2, part2, -1, -1)) /
               (4.0 * h * h);
    };

    CMatrix out(m, m);
    for (int l = 0; l < m; ++l) {
        for (int mu = l; mu < m; ++mu) {
            const double pxx = second(l, 0, mu, 0);
            const double pyy = second(l, 1, mu, 1);
            double pxy = 0.0;
            double pyx = 0.0;
            if (l != mu) {
                pxy = second(l, 0, mu, 1);
                pyx = second(l, 1, mu, 0);
            }
            const Complex v{0.25 * (pxx + pyy), 0.25 * (pxy - pyx)};
            out(l, mu) = v;
            out(mu, l) = std::conj(v);
        }
    }
    return out;
}

}  // namespace

CMatrix hermitian_hessian(const std::function<double(std::span<const Complex>)>& f,
                          std::span<const Complex> z0, double h) {
    if (!(h > 1e-10)) throw FiniteDifferenceError("step size underflow");
    const CMatrix coarse = hessian_pass(f, z0, h);
    const CMatrix fine = hessian_pass(f, z0, 0.5 * h);
    const double disagree = frobenius_norm(coarse - fine) / (1.0 + frobenius_norm(fine));
    if (disagree > 1e-3) {
        throw FiniteDifferenceError("finite-difference passes at h and h/2 disagree beyond 1e-3");
    }
    CMatrix refined = fine;
    for (std::size_t k = 0; k < refined.data().size(); ++k) {
        refined.data()[k] = (4.0 * fine.data()[k] - coarse.data()[k]) / 3.0;
    }
    return refined;
}

CMatrix hermitian_hessian(const ChartFn& f, const CMatrix& z0, double h) {
    const int rows = z0.rows();
    const int cols = z0.cols();
    auto wrapped = [&](std::span<const Complex> flat) {
        CMatrix z(rows, cols, std::vector<Complex>(flat.begin(), flat.end()));
        return f(z);
    };
    return hermitian_hessian(wrapped, z0.data(), h);
}

CMatrix metric_closed_form(const CMatrix& z) {
    const int q = z.rows();
    const int p = z.cols();
    const CMatrix c = inverse(CMatrix::identity(p) + gram(z));
    const CMatrix b = conjugate(inverse(CMatrix::identity(q) + gram(transpose(z))));
    CMatrix g(p * q, p * q);
    for (int a = 0; a < q; ++a) {
        for (int j = 0; j < p; ++j) {
            for (int bb = 0; bb < q; ++bb) {
                for (int l = 0; l < p; ++l) {
                    g(a * p + j, bb * p + l) = b(a, bb) * c(l, j);
                }
            }
        }
    }
    return g;
}

double det_metric(const CMatrix& z) { return det(metric_closed_form(z)).real(); }

CMatrix ricci(const CMatrix& z, double h) {
    auto f = [](const CMatrix& zz) { return std::log(det_metric(zz)); };
    return Complex{-1.0} * hermitian_hessian(ChartFn(f), z, h);
}

CMatrix ricci_from_potential(const CMatrix& z, double h) {
    const double factor = z.rows() + z.cols();
    auto f = [](const CMatrix& zz) { return chart_potential(zz); };
    return Complex{factor} * hermitian_hessian(ChartFn(f), z, h);
}

double einstein_residual(const CMatrix& z, double h) {
    const CMatrix g = metric_closed_form(z);
    const CMatrix r = ricci(z, h);
    const double factor = z.rows() + z.cols();
    return frobenius_norm(r - Complex{factor} * g) / frobenius_norm(g);
}

CMatrix scale_metric(const CMatrix& g, double c) { return Complex{c} * g; }

AdmissibilityReport is_admissible(const PointFn& phi, std::span<const GrassmannPoint> points,
                                  double tol, double h, double chart_weight_min) {
    AdmissibilityReport report;
    report.min_eigenvalue = std::numeric_limits<double>::infinity();
    bool all_positive = true;
    for (const auto& pt : points) {
        AdmissibilityPoint rec;
        rec.chart = best_chart(pt);
        const double weight =
            std::norm(det(minor_rows(pt.rep, rec.chart))) / det(gram(pt.rep)).real();
        if (weight < chart_weight_min) {
            rec.skipped = true;
            report.skipped += 1;
            report.points.push_back(std::move(rec));
            continue;
        }
        const CMatrix z0 = to_chart(pt, rec.chart).Z;
        const IndexSet chart = rec.chart;
        auto f = [&](const CMatrix& zz) { return phi(from_chart({chart, zz})); };
        const CMatrix form = metric_closed_form(z0) + hermitian_hessian(ChartFn(f), z0, h);
        const auto ev = hermitian_eigenvalues(form);
        rec.min_eigenvalue = ev.front();
        report.min_eigenvalue = std::min(report.min_eigenvalue, ev.front());
        all_positive = all_positive && (ev.front() > -tol);
        report.evaluated += 1;
        report.points.push_back(std::move(rec));
    }
    report.admissible_at_samples = all_positive && report.evaluated > 0;
    return report;
}

}  // namespace grassalpha
