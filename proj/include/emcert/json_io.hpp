#pragma once

#include <json.hpp>

#include "emcert/catalog.hpp"
#include "emcert/certify.hpp"

namespace emcert {

using json = nlohmann::ordered_json;

// RadScalar: array of {"rad": m, "re": "p/q", "im": "p/q"} term objects in
// ascending radicand order; [] is zero. Rationals ride as strings so nothing
// is lost; the canonical emitted form is "p" when q = 1, else "p/q".
json to_json(const RadScalar& s);
RadScalar radscalar_from_json(const json& j);

// Matrix: {"rows": r, "cols": c, "entries": [RadScalar, ...]} row-major.
json to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const json& j);

// {"d_in": d1, "d_out": d2, "scale": "p/q", "ops": [Matrix, ...]}
json to_json(const KrausFamily& f);
KrausFamily family_from_json(const json& j);

json to_json(const Certificate& c);

/// Family plus the expected-properties block, as emitted by catalog export.
json case_to_json(const catalog::CatalogCase& c);

/// Float CSV: one line per matrix row; each entry contributes "re,im".
std::string to_csv(const FloatMatrix& m);

}  // namespace emcert
