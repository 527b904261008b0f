#pragma once

#include <optional>
#include <string>

#include "emcert/cpmap.hpp"

namespace emcert {

/// floor(sqrt(d1^2 + d2^2 - 1)) in pure integer arithmetic. Rank of an
/// extreme point of the doubly constrained set never exceeds this.
int parthasarathy_bound(int d1, int d2);

enum class Mode { Exact, Float };
const char* to_string(Mode m);

enum class Verdict {
    ExtremeUnitalSet,         // the Gram set {V_i^* V_j} is independent
    ExtremeDoublyConstrained, // the pair criterion holds
    NotExtremeWitnessed,      // minimal family, pair criterion fails
    Indeterminate,            // non-minimal family, criteria inconclusive
};
const char* to_string(Verdict v);
std::optional<Verdict> verdict_from_string(const std::string& s);

/// System matrix with row (i, j) = vectorize(V_i^* V_j); n^2 x d_out^2.
DenseMatrix gram_matrix(const KrausFamily& f);
/// Row (i, j) = vectorize(V_j V_i^*); n^2 x d_in^2.
DenseMatrix dual_gram_matrix(const KrausFamily& f);
/// Row (i, j) = [vectorize(V_i^* V_j) | vectorize(V_j V_i^*)].
DenseMatrix bilinear_matrix(const KrausFamily& f);

FloatMatrix gram_matrix_float(const KrausFamily& f);
FloatMatrix dual_gram_matrix_float(const KrausFamily& f);
FloatMatrix bilinear_matrix_float(const KrausFamily& f);

IndependenceResult gram_independence(const KrausFamily& f, Mode mode = Mode::Exact);
IndependenceResult dual_gram_independence(const KrausFamily& f, Mode mode = Mode::Exact);
IndependenceResult bilinear_independence(const KrausFamily& f, Mode mode = Mode::Exact);

/// Which product system a witness refers to.
enum class System { Family, Gram, DualGram, Bilinear };

/// Re-substitutes an exact witness into the named system and checks the
/// combination is exactly zero (for Bilinear, both sums).
bool witness_resubstitutes_to_zero(const KrausFamily& f, System sys,
                                   const std::vector<RadScalar>& witness);

/// Structured outcome of an extremality verification.
struct Certificate {
    std::string case_id;
    Mode mode = Mode::Exact;
    int d_in = 0, d_out = 0;
    int family_size = 0;
    bool family_independent = false;
    bool gram_independent = false;
    bool dual_gram_independent = false;
    bool bilinear_independent = false;
    int choi_rank = 0;
    int bound = 0;
    DenseMatrix marginal_left, marginal_right;
    Verdict verdict = Verdict::Indeterminate;
    // Populated when the verdict rests on a dependence (not-extreme or
    // indeterminate); coefficient vector over the family or pair system.
    std::vector<RadScalar> witness;
    std::vector<std::complex<double>> witness_float;
    bool has_witness = false;
    // When expected marginals were supplied: did the computed ones match?
    std::optional<bool> marginals_match;
    std::string note;
};

/// Runs the full battery: minimality, Gram / dual / pair independence, Choi
/// rank, rank bound, marginals. Positive verdicts are conclusive; a failed
/// pair criterion is conclusive only for a minimal family, otherwise the
/// verdict is Indeterminate. Witnesses are extracted only when they decide
/// the verdict.
Certificate certify(const KrausFamily& f,
                    const std::optional<MarginalPair>& expected_marginals = std::nullopt,
                    Mode mode = Mode::Exact, const std::string& case_id = "",
                    double float_tol = -1.0);

/// ker(rho1) (x) C^d2 and C^d1 (x) ker(rho2) both annihilated by rho,
/// checked exactly on echelon null-space bases against standard vectors.
bool support_reduction_check(const DenseMatrix& rho, int d1, int d2);

}  // namespace emcert
