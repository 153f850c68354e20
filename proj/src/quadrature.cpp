#include "grassalpha/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace grassalpha {

QuadratureResult tanh_sinh(const std::function<double(double)>& f, double a, double b,
                           double rel_tol) {
    if (!(b > a)) throw std::invalid_argument("tanh_sinh needs b > a");
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    constexpr double half_pi = std::numbers::pi / 2.0;
    const double t_max = 3.7;  // abscissas beyond this underflow to the endpoints

    auto node = [&](double t, double& x, double& w) {
        const double s = std::sinh(t);
        x = std::tanh(half_pi * s);
        w = half_pi * std::cosh(t) / std::pow(std::cosh(half_pi * s), 2);
    };
    auto sample = [&](double x) {
        const double u = mid + half * x;
        if (u <= a || u >= b) return 0.0;  // endpoint underflow; integrable singularity
        const double v = f(u);
        return std::isfinite(v) ? v : 0.0;
    };

    QuadratureResult res;
    double prev = 0.0;
    double sum = 0.0;
    double h = 1.0;
    {
        double x;
        double w;
        node(0.0, x, w);
        sum = sample(x) * w;
        res.evaluations += 1;
        for (double t = h; t <= t_max; t += h) {
            node(t, x, w);
            sum += (sample(x) + sample(-x)) * w;
            res.evaluations += 2;
        }
    }
    double value = sum * h * half;
    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        // add the new abscissas at odd multiples of h
        double add = 0.0;
        for (double t = h; t <= t_max; t += 2.0 * h) {
            double x;
            double w;
            node(t, x, w);
            add += (sample(x) + sample(-x)) * w;
            res.evaluations += 2;
        }
        sum += add;
        prev = value;
        value = sum * h * half;
        if (level >= 3) {
            const double diff = std::abs(value - prev);
            res.error_estimate = diff;
            if (diff <= rel_tol * std::abs(value)) break;
        }
    }
    res.value = value;
    return res;
}

QuadratureResult radial_moment(double kappa, int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    // split at u = 1; the far half maps to (0,1) with an integrable
    // endpoint power t^{kappa-d-1} exactly when kappa > d
    auto near = [=](double u) { return std::pow(u, d - 1) * std::pow(1.0 + u, -kappa); };
    auto far = [=](double t) { return std::pow(t, kappa - d - 1.0) * std::pow(1.0 + t, -kappa); };
    const QuadratureResult a = tanh_sinh(near, 0.0, 1.0);
    const QuadratureResult b = tanh_sinh(far, 0.0, 1.0);
    return {a.value + b.value, a.error_estimate + b.error_estimate,
            a.evaluations + b.evaluations};
}

}  // namespace grassalpha
