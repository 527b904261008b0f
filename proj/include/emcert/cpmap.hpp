#pragma once

#include <string>
#include <vector>

#include "emcert/float_matrix.hpp"
#include "emcert/matrix.hpp"

namespace emcert {

/// Completely positive map M(d_in) -> M(d_out) presented as a rational
/// global scale times a sum of conjugations X -> V^* X V. The scale is kept
/// apart from the operator entries so the exact entries stay small; rank and
/// independence verdicts are scale-invariant.
struct KrausFamily {
    int d_in = 0;
    int d_out = 0;
    Rational scale{1};
    std::vector<DenseMatrix> ops;

    /// Throws std::invalid_argument when a shape or the scale is off.
    void validate() const;
};

/// The pair of marginals attached to a CP map: left = Phi^*(I_dout) on the
/// input algebra, right = Phi(I_din) on the output algebra.
struct MarginalPair {
    DenseMatrix left;
    DenseMatrix right;
};

/// scale * sum_j V_j^* X V_j.
DenseMatrix apply(const KrausFamily& f, const DenseMatrix& x);

/// The Hilbert-Schmidt dual: scale * sum_j V_j Y V_j^*.
DenseMatrix dual_apply(const KrausFamily& f, const DenseMatrix& y);

/// Choi matrix sum_{ij} E_ij (x) Phi(E_ij) with the unnormalized maximally
/// entangled vector; size (d_in*d_out)^2.
DenseMatrix choi_matrix(const KrausFamily& f);

/// Float-path Choi matrix, built directly as scale * sum_j w_j w_j^* with
/// w_j the row-major flattening of conj(V_j). Equal to to_float(choi_matrix)
/// up to rounding.
FloatMatrix choi_matrix_float(const KrausFamily& f);

/// rank of the Choi matrix over the exact field = minimal Kraus count.
int choi_rank(const KrausFamily& f);
int choi_rank_float(const KrausFamily& f, double tol = -1.0);

MarginalPair marginals(const KrausFamily& f);

/// Outcome of a linear-independence test over the rows of a system matrix.
/// When dependent, `witness` is a canonical nonzero coefficient vector with
/// sum_r witness[r] * row_r = 0 (echelon back-substitution on the first free
/// column).
struct IndependenceResult {
    bool independent = false;
    int rank = 0;
    int system_rows = 0;
    int system_cols = 0;
    std::vector<RadScalar> witness;                      // exact mode
    std::vector<std::complex<double>> witness_float;     // float mode
};

/// n x (d_in*d_out) matrix whose row j is vectorize(V_j).
DenseMatrix family_span_matrix(const KrausFamily& f);

/// True iff the Kraus operators are linearly independent, i.e. the family
/// size equals the Choi rank.
IndependenceResult is_minimal(const KrausFamily& f);

/// State picture: rho = choi_matrix, rho1 = tr_2(rho), rho2 = tr_1(rho).
/// Requires trace(Phi(I)) = 1; on violation throws std::invalid_argument
/// reporting the actual trace.
struct StateTriple {
    DenseMatrix rho;
    DenseMatrix rho1;
    DenseMatrix rho2;
};
StateTriple state_from_cpmap(const KrausFamily& f);

/// Kraus operators converted once to float form.
std::vector<FloatMatrix> ops_float(const KrausFamily& f);

}  // namespace emcert
