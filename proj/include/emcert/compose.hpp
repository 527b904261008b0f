#pragma once

#include "emcert/catalog.hpp"

namespace emcert::compose {

using catalog::CatalogCase;

/// Kraus family of Phi (x) Psi: operators kron(V_i, W_j) in lexicographic
/// (i, j) order, dimensions multiplied, scales multiplied.
KrausFamily tensor_cpmap(const KrausFamily& f, const KrausFamily& g);

/// Preset case "tensor:<a>x<b>" with expectations derived from the factor
/// expectations: Choi rank multiplies; the verdict follows the tensor
/// theorems when their hypotheses hold, and is not-extreme when the product
/// rank exceeds the rank bound.
CatalogCase tensor_case(const CatalogCase& a, const CatalogCase& b);

/// Tensor product guarded by the hypotheses of the Hermitian-factor tensor
/// theorem: the left factor must be square with Hermitian operators and an
/// independent Gram set, the right factor must satisfy the pair criterion.
/// The conclusion is re-certified on the product family rather than assumed;
/// `mode` overrides the size-based default for that re-certification.
/// Violated hypotheses raise std::invalid_argument naming the hypothesis.
CatalogCase compose_extremal(const KrausFamily& f, const KrausFamily& g,
                             const std::string& id_f = "left", const std::string& id_g = "right",
                             std::optional<Mode> mode = std::nullopt);

/// Integer check that floor(sqrt(2*(5k)^2 - 1)) equals 7k; valid for
/// 3 <= k <= 14 and out_of_range otherwise.
bool bound_attainment_check(long k);

/// Exact certification is the default up to d_in*d_out = 225; float above.
Mode default_mode(int d_in, int d_out);

/// Resolves any accepted case id: catalog ids or "tensor:<a>x<b>" presets
/// (both the multiplication sign and a plain 'x' are accepted).
CatalogCase resolve_case(const std::string& id);

}  // namespace emcert::compose
