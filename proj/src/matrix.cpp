#include "emcert/matrix.hpp"

#include <sstream>

namespace emcert {

DenseMatrix DenseMatrix::identity(int d) {
    DenseMatrix m(d, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = RadScalar(1);
    return m;
}

DenseMatrix DenseMatrix::unit(int rows, int cols, int i, int j) {
    if (i < 0 || i >= rows || j < 0 || j >= cols)
        throw std::out_of_range("DenseMatrix::unit: index out of range");
    DenseMatrix m(rows, cols);
    m.at(i, j) = RadScalar(1);
    return m;
}

bool DenseMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool DenseMatrix::is_hermitian() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (at(i, j) != at(j, i).conj()) return false;
    return true;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("DenseMatrix: shape mismatch in +");
    DenseMatrix r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
    return r;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("DenseMatrix: shape mismatch in -");
    DenseMatrix r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
    return r;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) { return matmul(a, b); }

DenseMatrix operator*(const RadScalar& s, const DenseMatrix& a) {
    DenseMatrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.e_.size(); ++k)
        if (!a.e_[k].is_zero()) r.e_[k] = s * a.e_[k];
    return r;
}

DenseMatrix operator*(const Rational& s, const DenseMatrix& a) {
    return RadScalar(s) * a;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner dimensions disagree");
    DenseMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const RadScalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const RadScalar& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

DenseMatrix adjoint(const DenseMatrix& a) {
    DenseMatrix r(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r.at(j, i) = a.at(i, j).conj();
    return r;
}

DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix r(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r.at(j, i) = a.at(i, j);
    return r;
}

DenseMatrix conjugate(const DenseMatrix& a) {
    DenseMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r.at(i, j) = a.at(i, j).conj();
    return r;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const RadScalar& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q) {
                    const RadScalar& bpq = b.at(p, q);
                    if (bpq.is_zero()) continue;
                    r.at(i * b.rows() + p, j * b.cols() + q) = aij * bpq;
                }
        }
    return r;
}

RadScalar trace(const DenseMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("trace: matrix not square");
    RadScalar t;
    for (int i = 0; i < a.rows(); ++i) t += a.at(i, i);
    return t;
}

DenseMatrix partial_trace_right(const DenseMatrix& z, int d1, int d2) {
    if (z.rows() != d1 * d2 || z.cols() != d1 * d2)
        throw std::invalid_argument("partial_trace_right: shape is not (d1*d2)^2");
    DenseMatrix r(d1, d1);
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d1; ++j) {
            RadScalar s;
            for (int k = 0; k < d2; ++k) s += z.at(i * d2 + k, j * d2 + k);
            r.at(i, j) = std::move(s);
        }
    return r;
}

DenseMatrix partial_trace_left(const DenseMatrix& z, int d1, int d2) {
    if (z.rows() != d1 * d2 || z.cols() != d1 * d2)
        throw std::invalid_argument("partial_trace_left: shape is not (d1*d2)^2");
    DenseMatrix r(d2, d2);
    for (int i = 0; i < d2; ++i)
        for (int j = 0; j < d2; ++j) {
            RadScalar s;
            for (int k = 0; k < d1; ++k) s += z.at(k * d2 + i, k * d2 + j);
            r.at(i, j) = std::move(s);
        }
    return r;
}

DenseMatrix vectorize(const DenseMatrix& a) {
    DenseMatrix r(1, a.rows() * a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r.at(0, i * a.cols() + j) = a.at(i, j);
    return r;
}

namespace {

// Shared elimination core. Reduces `m` in place to (reduced) row echelon
// form and returns the pivot columns. `full` also clears entries above each
// pivot, yielding RREF.
std::vector<int> echelonize(DenseMatrix& m, bool full) {
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = c; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        RadScalar inv = m.at(r, c).inverse();
        m.at(r, c) = RadScalar(1);
        for (int j = c + 1; j < m.cols(); ++j)
            if (!m.at(r, j).is_zero()) m.at(r, j) = inv * m.at(r, j);
        int lo = full ? 0 : r + 1;
        for (int i = lo; i < m.rows(); ++i) {
            if (i == r) continue;
            const RadScalar f = m.at(i, c);
            if (f.is_zero()) continue;
            m.at(i, c) = RadScalar();
            for (int j = c + 1; j < m.cols(); ++j) {
                const RadScalar& rj = m.at(r, j);
                if (rj.is_zero()) continue;
                m.at(i, j) -= f * rj;
            }
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

}  // namespace

int rank_exact(const DenseMatrix& a) {
    DenseMatrix m = a;
    return static_cast<int>(echelonize(m, false).size());
}

std::vector<std::vector<RadScalar>> nullspace_basis(const DenseMatrix& a) {
    DenseMatrix m = a;
    std::vector<int> pivots = echelonize(m, true);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<RadScalar>> basis;
    for (int f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<RadScalar> x(a.cols());
        x[f] = RadScalar(1);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            x[pivots[k]] = -m.at(static_cast<int>(k), f);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<RadScalar>> nullspace_vector(const DenseMatrix& a) {
    DenseMatrix m = a;
    std::vector<int> pivots = echelonize(m, true);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    for (int f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<RadScalar> x(a.cols());
        x[f] = RadScalar(1);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            x[pivots[k]] = -m.at(static_cast<int>(k), f);
        return x;
    }
    return std::nullopt;
}

std::string DenseMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) {
            os << at(i, j).to_string();
            if (j + 1 < cols_) os << ", ";
        }
        os << (i + 1 < rows_ ? ";\n" : "]");
    }
    return os.str();
}

}  // namespace emcert
