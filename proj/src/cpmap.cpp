#include "emcert/cpmap.hpp"

#include <sstream>

namespace emcert {

void KrausFamily::validate() const {
    if (d_in <= 0 || d_out <= 0)
        throw std::invalid_argument("KrausFamily: dimensions must be positive");
    if (ops.empty()) throw std::invalid_argument("KrausFamily: no Kraus operators");
    if (!(scale > Rational(0))) throw std::invalid_argument("KrausFamily: scale must be positive");
    for (const auto& v : ops)
        if (v.rows() != d_in || v.cols() != d_out)
            throw std::invalid_argument("KrausFamily: operator shape is not d_in x d_out");
}

DenseMatrix apply(const KrausFamily& f, const DenseMatrix& x) {
    if (x.rows() != f.d_in || x.cols() != f.d_in)
        throw std::invalid_argument("apply: argument is not d_in x d_in");
    DenseMatrix acc(f.d_out, f.d_out);
    for (const auto& v : f.ops) acc = acc + matmul(matmul(adjoint(v), x), v);
    return RadScalar(f.scale) * acc;
}

DenseMatrix dual_apply(const KrausFamily& f, const DenseMatrix& y) {
    if (y.rows() != f.d_out || y.cols() != f.d_out)
        throw std::invalid_argument("dual_apply: argument is not d_out x d_out");
    DenseMatrix acc(f.d_in, f.d_in);
    for (const auto& v : f.ops) acc = acc + matmul(matmul(v, y), adjoint(v));
    return RadScalar(f.scale) * acc;
}

DenseMatrix choi_matrix(const KrausFamily& f) {
    const int d1 = f.d_in, d2 = f.d_out;
    DenseMatrix j(d1 * d2, d1 * d2);
    for (int a = 0; a < d1; ++a)
        for (int b = 0; b < d1; ++b) {
            DenseMatrix block = apply(f, DenseMatrix::unit(d1, d1, a, b));
            for (int p = 0; p < d2; ++p)
                for (int q = 0; q < d2; ++q) {
                    RadScalar& v = block.at(p, q);
                    if (!v.is_zero()) j.at(a * d2 + p, b * d2 + q) = std::move(v);
                }
        }
    return j;
}

FloatMatrix choi_matrix_float(const KrausFamily& f) {
    const int d1 = f.d_in, d2 = f.d_out, n = d1 * d2;
    FloatMatrix j(n, n);
    const double s = f.scale.to_double();
    std::vector<std::complex<double>> w(n);
    for (const auto& v : f.ops) {
        for (int i = 0; i < d1; ++i)
            for (int a = 0; a < d2; ++a) w[i * d2 + a] = std::conj(v.at(i, a).to_complex());
        for (int r = 0; r < n; ++r) {
            if (w[r].real() == 0.0 && w[r].imag() == 0.0) continue;
            const std::complex<double> wr = s * w[r];
            for (int c = 0; c < n; ++c) j.at(r, c) += wr * std::conj(w[c]);
        }
    }
    return j;
}

int choi_rank(const KrausFamily& f) { return rank_exact(choi_matrix(f)); }

int choi_rank_float(const KrausFamily& f, double tol) {
    return rank_float(choi_matrix_float(f), tol);
}

MarginalPair marginals(const KrausFamily& f) {
    return {dual_apply(f, DenseMatrix::identity(f.d_out)),
            apply(f, DenseMatrix::identity(f.d_in))};
}

DenseMatrix family_span_matrix(const KrausFamily& f) {
    const int n = static_cast<int>(f.ops.size());
    DenseMatrix m(n, f.d_in * f.d_out);
    for (int j = 0; j < n; ++j) {
        DenseMatrix row = vectorize(f.ops[j]);
        for (int c = 0; c < row.cols(); ++c) m.at(j, c) = std::move(row.at(0, c));
    }
    return m;
}

IndependenceResult is_minimal(const KrausFamily& f) {
    DenseMatrix m = family_span_matrix(f);
    IndependenceResult res;
    res.system_rows = m.rows();
    res.system_cols = m.cols();
    res.rank = rank_exact(m);
    res.independent = (res.rank == m.rows());
    if (!res.independent) {
        auto w = nullspace_vector(transpose(m));
        if (w) res.witness = std::move(*w);
    }
    return res;
}

StateTriple state_from_cpmap(const KrausFamily& f) {
    RadScalar t = trace(apply(f, DenseMatrix::identity(f.d_in)));
    if (!t.is_one()) {
        std::ostringstream os;
        os << "state_from_cpmap: trace(Phi(I)) = " << t.to_string() << ", expected 1";
        throw std::invalid_argument(os.str());
    }
    StateTriple s;
    s.rho = choi_matrix(f);
    s.rho1 = partial_trace_right(s.rho, f.d_in, f.d_out);
    s.rho2 = partial_trace_left(s.rho, f.d_in, f.d_out);
    // Consistency with the map picture: tr_1 recovers Phi(I) and tr_2
    // recovers the conjugate of Phi^*(I).
    MarginalPair m = marginals(f);
    if (s.rho2 != m.right || s.rho1 != transpose(adjoint(m.left)))
        throw std::logic_error("state_from_cpmap: partial traces disagree with marginals");
    return s;
}

std::vector<FloatMatrix> ops_float(const KrausFamily& f) {
    std::vector<FloatMatrix> out;
    out.reserve(f.ops.size());
    for (const auto& v : f.ops) out.push_back(to_float(v));
    return out;
}

}  // namespace emcert
