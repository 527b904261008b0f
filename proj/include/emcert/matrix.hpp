#pragma once

#include <optional>
#include <vector>

#include "emcert/radscalar.hpp"

namespace emcert {

/// Dense rectangular matrix over RadScalar, row-major. Immutable-by-value
/// usage; all operations return fresh matrices.
class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("DenseMatrix: negative shape");
    }

    static DenseMatrix identity(int d);
    /// Matrix unit with a single 1 at (i, j), zero-based.
    static DenseMatrix unit(int rows, int cols, int i, int j);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    RadScalar& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const RadScalar& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<RadScalar>& entries() const { return e_; }
    std::vector<RadScalar>& entries() { return e_; }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

    friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
    friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
    friend DenseMatrix operator*(const RadScalar& s, const DenseMatrix& a);
    friend DenseMatrix operator*(const Rational& s, const DenseMatrix& a);

    bool is_zero() const;
    bool is_hermitian() const;

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<RadScalar> e_;
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix adjoint(const DenseMatrix& a);
DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix conjugate(const DenseMatrix& a);
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);
RadScalar trace(const DenseMatrix& a);

/// Traces out the second tensor factor of a (d1*d2)x(d1*d2) matrix in the
/// lexicographic product basis: result[i,j] = sum_k Z[(i,k),(j,k)].
DenseMatrix partial_trace_right(const DenseMatrix& z, int d1, int d2);
/// Traces out the first factor: result[i,j] = sum_k Z[(k,i),(k,j)].
DenseMatrix partial_trace_left(const DenseMatrix& z, int d1, int d2);

/// Row-major flattening as a 1 x (rows*cols) matrix.
DenseMatrix vectorize(const DenseMatrix& a);

/// Rank over Q(i, sqrt(m), ...) by Gaussian elimination with exact pivots.
/// Pivot rule: columns scanned left to right, first nonzero entry from the
/// current row down. Field extensions preserve rank, so this equals the rank
/// over C.
int rank_exact(const DenseMatrix& a);

/// One canonical null-space vector of a (x with A*x = 0, x != 0), or nullopt
/// when the kernel is trivial. Canonical choice: reduced row echelon form,
/// first free column with free variable set to 1.
std::optional<std::vector<RadScalar>> nullspace_vector(const DenseMatrix& a);

/// Basis of the null space via the same echelon construction, one vector per
/// free column.
std::vector<std::vector<RadScalar>> nullspace_basis(const DenseMatrix& a);

}  // namespace emcert
