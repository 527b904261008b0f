#include "emcert/json_io.hpp"

#include <cstdio>
#include <sstream>

namespace emcert {

json to_json(const RadScalar& s) {
    json arr = json::array();
    for (const auto& [rad, c] : s.terms()) {
        json t;
        t["rad"] = rad;
        t["re"] = c.re.to_string();
        t["im"] = c.im.to_string();
        arr.push_back(std::move(t));
    }
    return arr;
}

RadScalar radscalar_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("RadScalar JSON: expected an array");
    RadScalar s;
    for (const auto& t : j) {
        std::uint64_t rad = t.at("rad").get<std::uint64_t>();
        Rational re = Rational::from_string(t.at("re").get<std::string>());
        Rational im = Rational::from_string(t.at("im").get<std::string>());
        s += RadScalar::term(re, im, rad);
    }
    return s;
}

json to_json(const DenseMatrix& m) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int c = 0; c < m.cols(); ++c) entries.push_back(to_json(m.at(i, c)));
    j["entries"] = std::move(entries);
    return j;
}

DenseMatrix matrix_from_json(const json& j) {
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    const json& entries = j.at("entries");
    if (!entries.is_array() || static_cast<long>(entries.size()) != static_cast<long>(rows) * cols)
        throw std::invalid_argument("Matrix JSON: entries length must be rows*cols");
    DenseMatrix m(rows, cols);
    std::size_t k = 0;
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) m.at(i, c) = radscalar_from_json(entries[k++]);
    return m;
}

json to_json(const KrausFamily& f) {
    json j;
    j["d_in"] = f.d_in;
    j["d_out"] = f.d_out;
    j["scale"] = f.scale.to_string();
    json ops = json::array();
    for (const auto& v : f.ops) ops.push_back(to_json(v));
    j["ops"] = std::move(ops);
    return j;
}

KrausFamily family_from_json(const json& j) {
    KrausFamily f;
    f.d_in = j.at("d_in").get<int>();
    f.d_out = j.at("d_out").get<int>();
    f.scale = Rational::from_string(j.at("scale").get<std::string>());
    for (const auto& v : j.at("ops")) f.ops.push_back(matrix_from_json(v));
    f.validate();
    return f;
}

json to_json(const Certificate& c) {
    json j;
    j["case_id"] = c.case_id;
    j["mode"] = to_string(c.mode);
    j["d_in"] = c.d_in;
    j["d_out"] = c.d_out;
    j["family_size"] = c.family_size;
    j["family_independent"] = c.family_independent;
    j["gram_independent"] = c.gram_independent;
    j["dual_gram_independent"] = c.dual_gram_independent;
    j["bilinear_independent"] = c.bilinear_independent;
    j["choi_rank"] = c.choi_rank;
    j["bound"] = c.bound;
    j["verdict"] = to_string(c.verdict);
    j["marginal_left"] = to_json(c.marginal_left);
    j["marginal_right"] = to_json(c.marginal_right);
    if (c.has_witness) {
        if (!c.witness.empty()) {
            json w = json::array();
            for (const auto& s : c.witness) w.push_back(to_json(s));
            j["witness"] = std::move(w);
        } else {
            json w = json::array();
            for (const auto& z : c.witness_float)
                w.push_back(json{{"re", z.real()}, {"im", z.imag()}});
            j["witness"] = std::move(w);
        }
    } else {
        j["witness"] = nullptr;
    }
    if (c.marginals_match) j["marginals_match"] = *c.marginals_match;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

json case_to_json(const catalog::CatalogCase& c) {
    json j;
    j["id"] = c.id;
    if (!c.params.empty()) {
        json p;
        for (const auto& [k, v] : c.params) p[k] = v;
        j["params"] = std::move(p);
    }
    j["family"] = to_json(c.family);
    json e;
    e["choi_rank"] = c.expected.choi_rank;
    e["bound"] = c.expected.bound;
    e["verdict"] = to_string(c.expected.verdict);
    e["marginal_left"] = to_json(c.expected.marginal_left);
    e["marginal_right"] = to_json(c.expected.marginal_right);
    e["hermitian_ops"] = c.expected.hermitian_ops;
    if (c.expected.gram_independent) e["gram_independent"] = *c.expected.gram_independent;
    if (c.expected.dual_gram_independent)
        e["dual_gram_independent"] = *c.expected.dual_gram_independent;
    if (!c.expected.note.empty()) e["note"] = c.expected.note;
    j["expected"] = std::move(e);
    return j;
}

std::string to_csv(const FloatMatrix& m) {
    std::ostringstream os;
    char buf[64];
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) {
            const auto& z = m.at(i, j);
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g", z.real(), z.imag());
            os << buf;
            if (j + 1 < m.cols) os << ",";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace emcert
