#include "grassalpha/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace grassalpha {

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("matrix shapes do not match");
    }
}

void require_square(const CMatrix& m) {
    if (!m.square()) {
        throw DimensionError("square matrix required");
    }
}

}  // namespace

int CMatrix::check_dim(int d) {
    if (d < 1) {
        throw DimensionError("matrix dimensions must be >= 1");
    }
    return d;
}

CMatrix::CMatrix(int rows, int cols, std::vector<Complex> entries)
    : rows_(check_dim(rows)), cols_(check_dim(cols)), a_(std::move(entries)) {
    if (a_.size() != static_cast<std::size_t>(rows_) * cols_) {
        throw DimensionError("entry count does not match rows*cols");
    }
}

CMatrix CMatrix::identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b);
    CMatrix c = a;
    for (std::size_t k = 0; k < c.data().size(); ++k) c.data()[k] += b.data()[k];
    return c;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b);
    CMatrix c = a;
    for (std::size_t k = 0; k < c.data().size(); ++k) c.data()[k] -= b.data()[k];
    return c;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matrix product shape mismatch");
    }
    CMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (int j = 0; j < b.cols(); ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

CMatrix operator*(Complex s, const CMatrix& a) {
    CMatrix c = a;
    for (auto& v : c.data()) v *= s;
    return c;
}

CMatrix transpose(const CMatrix& a) {
    CMatrix t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

CMatrix conjugate(const CMatrix& a) {
    CMatrix c = a;
    for (auto& v : c.data()) v = std::conj(v);
    return c;
}

CMatrix adjoint(const CMatrix& a) {
    CMatrix t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
    return t;
}

bool all_finite(const CMatrix& a) {
    for (const auto& v : a.data()) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
}

double frobenius_norm(const CMatrix& a) {
    double s = 0.0;
    for (const auto& v : a.data()) s += std::norm(v);
    return std::sqrt(s);
}

double max_abs(const CMatrix& a) {
    double s = 0.0;
    for (const auto& v : a.data()) s = std::max(s, std::abs(v));
    return s;
}

LUDecomposition lu_decompose(const CMatrix& m) {
    require_square(m);
    const int n = m.rows();
    LUDecomposition d{m, {}, 1.0, false};
    d.perm.resize(n);
    const double scale = max_abs(m);
    if (scale == 0.0) d.singular = true;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(d.lu(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(d.lu(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        d.perm[k] = piv;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(d.lu(k, j), d.lu(piv, j));
            d.parity = -d.parity;
        }
        if (best < 1e-12 * scale) d.singular = true;
        const Complex pivot = d.lu(k, k);
        if (pivot == Complex{}) continue;
        for (int i = k + 1; i < n; ++i) {
            const Complex f = d.lu(i, k) / pivot;
            d.lu(i, k) = f;
            for (int j = k + 1; j < n; ++j) d.lu(i, j) -= f * d.lu(k, j);
        }
    }
    return d;
}

Complex LUDecomposition::det() const {
    Complex p = parity;
    for (int i = 0; i < lu.rows(); ++i) p *= lu(i, i);
    return p;
}

double LUDecomposition::log_abs_det() const {
    double s = 0.0;
    for (int i = 0; i < lu.rows(); ++i) {
        const double a = std::abs(lu(i, i));
        if (a == 0.0) return -std::numeric_limits<double>::infinity();
        s += std::log(a);
    }
    return s;
}

Complex det(const CMatrix& m) { return lu_decompose(m).det(); }

double log_abs_det(const CMatrix& m) { return lu_decompose(m).log_abs_det(); }

CMatrix inverse(const CMatrix& m) {
    const LUDecomposition d = lu_decompose(m);
    if (d.singular) {
        throw SingularMatrixError("matrix is numerically singular");
    }
    const int n = m.rows();
    CMatrix inv = CMatrix::identity(n);
    // forward substitution with row swaps applied to each identity column
    for (int k = 0; k < n; ++k) {
        if (d.perm[k] != k) {
            for (int j = 0; j < n; ++j) std::swap(inv(k, j), inv(d.perm[k], j));
        }
        for (int i = k + 1; i < n; ++i) {
            const Complex f = d.lu(i, k);
            for (int j = 0; j < n; ++j) inv(i, j) -= f * inv(k, j);
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        for (int k = i + 1; k < n; ++k) {
            const Complex f = d.lu(i, k);
            for (int j = 0; j < n; ++j) inv(i, j) -= f * inv(k, j);
        }
        const Complex pivot = d.lu(i, i);
        for (int j = 0; j < n; ++j) inv(i, j) /= pivot;
    }
    return inv;
}

CMatrix gram(const CMatrix& p) {
    CMatrix g(p.cols(), p.cols());
    for (int j = 0; j < p.cols(); ++j) {
        for (int k = 0; k < p.cols(); ++k) {
            Complex s{};
            for (int a = 0; a < p.rows(); ++a) s += p(a, j) * std::conj(p(a, k));
            g(j, k) = s;
        }
    }
    return g;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& h) {
    require_square(h);
    const int n = h.rows();
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));

    const double norm = frobenius_norm(a);
    const double stop = std::max(1e-300, 1e-15 * norm);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += std::norm(a(i, j));
        if (std::sqrt(2.0 * off) <= stop) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300) continue;
                const Complex phase = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // rotation J: J_pp=J_qq=c, J_pq=s*phase, J_qp=-s*conj(phase); A <- J^H A J
                for (int k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(phase) * akq;
                    a(k, q) = s * phase * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * std::conj(phase) * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = a(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

DefinitenessResult is_positive_definite(const CMatrix& h, double tol) {
    const auto ev = hermitian_eigenvalues(h);
    return {ev.front() > -tol, ev.front()};
}

QRDecomposition householder_qr(const CMatrix& a) {
    const int m = a.rows();
    const int n = a.cols();
    CMatrix r = a;
    CMatrix q = CMatrix::identity(m);
    std::vector<Complex> v(m);
    for (int k = 0; k < std::min(m, n); ++k) {
        double norm = 0.0;
        for (int i = k; i < m; ++i) norm += std::norm(r(i, k));
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        const Complex x0 = r(k, k);
        const Complex phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : Complex{1.0};
        const Complex alpha = -phase * norm;
        double vnorm2 = 0.0;
        for (int i = k; i < m; ++i) {
            v[i] = r(i, k);
            if (i == k) v[i] -= alpha;
            vnorm2 += std::norm(v[i]);
        }
        if (vnorm2 == 0.0) continue;
        const double beta = 2.0 / vnorm2;
        // R <- (I - beta v v^H) R
        for (int j = k; j < n; ++j) {
            Complex dot{};
            for (int i = k; i < m; ++i) dot += std::conj(v[i]) * r(i, j);
            dot *= beta;
            for (int i = k; i < m; ++i) r(i, j) -= dot * v[i];
        }
        // Q <- Q (I - beta v v^H)
        for (int i = 0; i < m; ++i) {
            Complex dot{};
            for (int j = k; j < m; ++j) dot += q(i, j) * v[j];
            dot *= beta;
            for (int j = k; j < m; ++j) q(i, j) -= dot * std::conj(v[j]);
        }
    }
    // zero out the strictly lower part that is noise by construction
    for (int i = 1; i < m; ++i)
        for (int j = 0; j < std::min(i, n); ++j) r(i, j) = Complex{};
    return {std::move(q), std::move(r)};
}

}  // namespace grassalpha
