#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace gcfloer {

using cplx = std::complex<double>;

// Dense row-major complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);
    ComplexMatrix(int rows, int cols, std::vector<cplx> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(int n);
    static ComplexMatrix diagonal(const std::vector<double>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    cplx operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<cplx>& entries() const { return a_; }

    // upper-left k x k block
    ComplexMatrix leading_block(int k) const;
    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    cplx trace() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> a_;
};

// Hermitian matrices share the storage type; the invariant is checked by
// require_hermitian at every entry point that relies on it.
using HermitianMatrix = ComplexMatrix;

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);
double max_abs(const ComplexMatrix& a);
// max over rows of the row 2-norm
double max_row_norm(const ComplexMatrix& a);

void require_hermitian(const ComplexMatrix& m, double tol = 1e-12);
double unitarity_defect(const ComplexMatrix& u);

struct EigenSystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // column j pairs with values[j]
};

EigenSystem hermitian_eigensystem(const HermitianMatrix& m);
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m);

// Sorted by (real, imag).
std::vector<cplx> complex_eigenvalues(const ComplexMatrix& m);

cplx determinant(const ComplexMatrix& m);

// Solves a x = b by partial pivoting; nullopt when a pivot is exactly zero.
std::optional<std::vector<cplx>> solve_linear(const ComplexMatrix& a, std::vector<cplx> b);

// Haar-ish unitary from Gram-Schmidt on a complex Gaussian matrix.
ComplexMatrix random_unitary(int n, std::mt19937_64& rng);

struct GaussRule {
    std::vector<double> nodes;  // on [-1, 1]
    std::vector<double> weights;
};
GaussRule gauss_legendre(int n);

constexpr int kPanelOrder = 16;

// Mean value (1/2pi) * integral over [0, 2pi].
cplx integrate_periodic(const std::function<cplx(double)>& f, double tol);

// Absolute comparison when |expected| < 1, relative otherwise.
bool approx_equal(double expected, double got, double tol);
bool approx_equal(cplx expected, cplx got, double tol);

}  // namespace gcfloer
