#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace grassalpha {

using Complex = std::complex<double>;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense complex matrix, row-major storage. Sizes in this project stay tiny
/// (atlas and metric work tops out around 12x12), so everything is O(n^3)
/// textbook linear algebra with partial pivoting.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(int rows, int cols)
        : rows_(check_dim(rows)), cols_(check_dim(cols)), a_(static_cast<std::size_t>(rows) * cols) {}
    CMatrix(int rows, int cols, std::vector<Complex> entries);

    static CMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Complex& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::span<Complex> data() { return a_; }
    std::span<const Complex> data() const { return a_; }

private:
    static int check_dim(int d);
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> a_;
};

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex s, const CMatrix& a);

CMatrix transpose(const CMatrix& a);
CMatrix conjugate(const CMatrix& a);
CMatrix adjoint(const CMatrix& a);

bool all_finite(const CMatrix& a);
double frobenius_norm(const CMatrix& a);
double max_abs(const CMatrix& a);

/// Pivoted LU of a square matrix. `singular` is set when some pivot falls
/// below 1e-12 * max|entry|; the determinant is still the diagonal product.
struct LUDecomposition {
    CMatrix lu;
    std::vector<int> perm;
    double parity = 1.0;
    bool singular = false;

    Complex det() const;
    double log_abs_det() const;  // -inf when a pivot is exactly zero
};

LUDecomposition lu_decompose(const CMatrix& m);
Complex det(const CMatrix& m);
double log_abs_det(const CMatrix& m);
CMatrix inverse(const CMatrix& m);  // throws SingularMatrixError

/// Gram form of a tall matrix P: the p x p Hermitian positive semidefinite
/// matrix with (j,k) entry sum_a P(a,j) * conj(P(a,k)).
CMatrix gram(const CMatrix& p);

/// Eigenvalues of a Hermitian matrix (input is symmetrized first), ascending.
/// Cyclic Jacobi with complex rotations; plenty for the sizes used here.
std::vector<double> hermitian_eigenvalues(const CMatrix& h);

struct DefinitenessResult {
    bool positive_definite = false;
    double min_eigenvalue = 0.0;
};

/// True iff the smallest eigenvalue of the symmetrized input exceeds -tol.
DefinitenessResult is_positive_definite(const CMatrix& h, double tol = 1e-9);

/// Householder QR with full square Q (m x m), A = Q * R.
struct QRDecomposition {
    CMatrix q;
    CMatrix r;
};

QRDecomposition householder_qr(const CMatrix& a);

}  // namespace grassalpha
