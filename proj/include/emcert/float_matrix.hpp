#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "emcert/matrix.hpp"

namespace emcert {

/// Dense complex double-precision matrix, row-major. The numerical
/// cross-check counterpart of DenseMatrix.
struct FloatMatrix {
    int rows = 0, cols = 0;
    std::vector<std::complex<double>> e;

    FloatMatrix() = default;
    FloatMatrix(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c) {}

    std::complex<double>& at(int i, int j) { return e[static_cast<std::size_t>(i) * cols + j]; }
    const std::complex<double>& at(int i, int j) const {
        return e[static_cast<std::size_t>(i) * cols + j];
    }
};

FloatMatrix to_float(const DenseMatrix& a);

/// Singular values in descending order via one-sided Jacobi. Intended for
/// min(rows, cols) up to a few hundred.
std::vector<double> singular_values(const FloatMatrix& a);

/// Eigenvalues of a Hermitian matrix, ascending, via cyclic complex Jacobi.
std::vector<double> hermitian_eigenvalues(const FloatMatrix& a);

/// Numerical rank: the number of singular values exceeding tol. tol < 0
/// selects the automatic threshold max(rows, cols) * eps * sigma_max. Small
/// systems use the Jacobi singular values directly; large ones use blocked
/// Gaussian elimination with partial pivoting and the same threshold (the
/// systems this library produces have their nonzero singular values many
/// orders above the noise floor, where both notions of rank coincide —
/// tested against the exact path).
int rank_float(const FloatMatrix& a, double tol = -1.0);

/// One approximate null vector (first free column of the thresholded RREF),
/// or nullopt when numerically full column rank.
std::optional<std::vector<std::complex<double>>> nullspace_vector_float(const FloatMatrix& a,
                                                                        double tol = -1.0);

/// Cheap upper bound on the largest singular value: sqrt(norm1 * normInf).
double sigma_max_bound(const FloatMatrix& a);

double auto_tolerance(const FloatMatrix& a);

}  // namespace emcert
