#pragma once

#include <map>
#include <string>
#include <vector>

#include "emcert/certify.hpp"
#include "emcert/cpmap.hpp"

namespace emcert::catalog {

/// Properties a catalog entry is expected to exhibit; verification compares
/// a computed Certificate against these.
struct ExpectedProperties {
    int choi_rank = 0;
    int bound = 0;
    Verdict verdict = Verdict::Indeterminate;
    DenseMatrix marginal_left, marginal_right;
    bool hermitian_ops = false;
    std::optional<bool> gram_independent;
    std::optional<bool> dual_gram_independent;
    std::string note;
};

struct CatalogCase {
    std::string id;
    std::map<std::string, long> params;
    KrausFamily family;
    ExpectedProperties expected;
};

/// d Hermitian operators on M(d): sqrt((d-2)/(d-1)) * sum_{j>=2} E_jj and
/// (E_1k + E_k1)/sqrt(d-1). Unital with Gram-independent products. d >= 3.
CatalogCase ohno_hermitian(long d);

/// Four operators on M(3) with Choi rank 4 = floor(sqrt(17)).
CatalogCase ohno_3x3_rank4();

/// Five operators on M(4) with Choi rank 5 = floor(sqrt(31)). The published
/// prefactor 1/5 with four summands is inconsistent with unitality; five
/// operators and scale 1/4 satisfy sum W*W = 4I exactly (see expected.note).
CatalogCase ohno_4x4_rank5();

/// Six operators on M(5), Choi rank 6 <= floor(sqrt(49)) = 7.
CatalogCase five_rank6();

/// Seven operators on M(5), Choi rank 7 = floor(sqrt(49)); attains the bound.
CatalogCase five_rank7();

/// d operators M(2) -> M(d), d >= 4; marginals (Z, I_d/d) with
/// Z = [[1, (d-3)/d], [(d-3)/d, 1]]/2. Choi rank d = floor(sqrt(d^2+3)).
CatalogCase qubit_to_d(long d);

/// Four operators M(3) -> M(4); marginals (I3/3, I4/4), Choi rank 4.
CatalogCase three_to_four();

/// d+1 operators M(d) -> M(d+1), cyclic right-shifts of the column pattern
/// [e_1, ..., e_d, 0]; marginals (I_d/d, I_{d+1}/(d+1)), Choi rank d + 1.
CatalogCase cyclic_d_to_d_plus_1(long d);

/// Four operators on M(4) built from the cyclic shift and a rational
/// orthogonal 3x3 block: the Gram set is independent while the dual set is
/// dependent, so extremality is not preserved under taking duals.
CatalogCase remark_counterexample();

/// Case listing entry; `is_generator` rows describe a parameter range rather
/// than a runnable instance.
struct CaseInfo {
    std::string id;
    std::map<std::string, std::string> params;
    bool is_generator = false;
};

/// Deterministic listing: concrete instances (including tensor presets,
/// constructed via the compose module) followed by parameterized generators.
std::vector<CaseInfo> list_cases();

/// Builds a non-preset case from its id, e.g. "five_rank7" or
/// "ohno_hermitian(4)". Throws std::invalid_argument for unknown ids.
/// Preset ids ("tensor:a*b") are handled by resolve_case in compose.
CatalogCase make_base_case(const std::string& id);

}  // namespace emcert::catalog
