#include "emcert/catalog.hpp"

#include <sstream>

namespace emcert::catalog {

namespace {

// 1-based matrix unit, matching the index conventions of the construction
// tables.
DenseMatrix E(int rows, int cols, int i, int j) {
    return DenseMatrix::unit(rows, cols, i - 1, j - 1);
}

RadScalar sq(long n) { return RadScalar::sqrt_int(static_cast<std::uint64_t>(n)); }

DenseMatrix scaled_identity(int d, const Rational& r) {
    DenseMatrix m = DenseMatrix::identity(d);
    return RadScalar(r) * m;
}

bool all_hermitian(const KrausFamily& f) {
    for (const auto& v : f.ops)
        if (!v.is_hermitian()) return false;
    return true;
}

}  // namespace

CatalogCase ohno_hermitian(long d) {
    if (d < 3) throw std::invalid_argument("ohno_hermitian: requires d >= 3");
    const int n = static_cast<int>(d);
    KrausFamily f;
    f.d_in = f.d_out = n;
    f.scale = Rational(1);
    // sqrt((d-2)/(d-1)) = sqrt((d-2)(d-1)) / (d-1)
    RadScalar c1 = RadScalar(Rational(1, d - 1)) * sq((d - 2) * (d - 1));
    DenseMatrix v1(n, n);
    for (int j = 2; j <= n; ++j) v1 = v1 + c1 * E(n, n, j, j);
    f.ops.push_back(v1);
    RadScalar ck = RadScalar(Rational(1, d - 1)) * sq(d - 1);
    for (int k = 2; k <= n; ++k)
        f.ops.push_back(ck * (E(n, n, 1, k) + E(n, n, k, 1)));

    CatalogCase c;
    c.id = "ohno_hermitian(" + std::to_string(d) + ")";
    c.params["d"] = d;
    c.family = f;
    c.expected.choi_rank = n;
    c.expected.bound = parthasarathy_bound(n, n);
    c.expected.verdict = Verdict::ExtremeUnitalSet;
    c.expected.marginal_left = DenseMatrix::identity(n);
    c.expected.marginal_right = DenseMatrix::identity(n);
    c.expected.hermitian_ops = true;
    c.expected.gram_independent = true;
    c.expected.dual_gram_independent = true;
    return c;
}

CatalogCase ohno_3x3_rank4() {
    KrausFamily f;
    f.d_in = f.d_out = 3;
    f.scale = Rational(1, 4);
    f.ops = {
        E(3, 3, 1, 1),
        E(3, 3, 1, 2) + sq(2) * E(3, 3, 2, 3),
        sq(2) * E(3, 3, 2, 1) + sq(3) * E(3, 3, 3, 2),
        E(3, 3, 3, 1) + sq(2) * E(3, 3, 1, 3),
    };
    CatalogCase c;
    c.id = "ohno_3x3_rank4";
    c.family = f;
    c.expected.choi_rank = 4;
    c.expected.bound = 4;
    c.expected.verdict = Verdict::ExtremeDoublyConstrained;
    c.expected.marginal_left = DenseMatrix::identity(3);
    c.expected.marginal_right = DenseMatrix::identity(3);
    c.expected.hermitian_ops = false;
    // 16 products cannot be independent in the 9-dimensional M(3), so the
    // extremality here is that of the doubly constrained set.
    c.expected.gram_independent = false;
    return c;
}

CatalogCase ohno_4x4_rank5() {
    KrausFamily f;
    f.d_in = f.d_out = 4;
    f.scale = Rational(1, 4);
    f.ops = {
        E(4, 4, 1, 3) + E(4, 4, 3, 2),
        sq(2) * E(4, 4, 2, 4) + sq(2) * E(4, 4, 4, 3),
        sq(2) * E(4, 4, 1, 4) + sq(3) * E(4, 4, 3, 1),
        E(4, 4, 2, 1) + sq(2) * E(4, 4, 4, 2),
        E(4, 4, 1, 2) + E(4, 4, 2, 3),
    };
    CatalogCase c;
    c.id = "ohno_4x4_rank5";
    c.family = f;
    c.expected.choi_rank = 5;
    c.expected.bound = 5;
    c.expected.verdict = Verdict::ExtremeDoublyConstrained;
    c.expected.marginal_left = DenseMatrix::identity(4);
    c.expected.marginal_right = DenseMatrix::identity(4);
    c.expected.hermitian_ops = false;
    c.expected.gram_independent = false;  // 25 products in a 16-dim space
    c.expected.note =
        "published scale 1/5 over four summands is inconsistent with unitality; "
        "five operators with scale 1/4 give sum W*W = sum WW* = 4I exactly";
    return c;
}

CatalogCase five_rank6() {
    KrausFamily f;
    f.d_in = f.d_out = 5;
    f.scale = Rational(1, 3);
    f.ops = {
        E(5, 5, 1, 3) + E(5, 5, 3, 2),
        E(5, 5, 2, 4) + E(5, 5, 4, 3),
        sq(2) * E(5, 5, 3, 5) + E(5, 5, 5, 4),
        E(5, 5, 1, 4) + E(5, 5, 4, 2),
        E(5, 5, 1, 5) + E(5, 5, 4, 1) + E(5, 5, 5, 3),
        sq(2) * E(5, 5, 2, 1) + E(5, 5, 5, 2),
    };
    CatalogCase c;
    c.id = "five_rank6";
    c.family = f;
    c.expected.choi_rank = 6;
    c.expected.bound = 7;
    c.expected.verdict = Verdict::ExtremeDoublyConstrained;
    c.expected.marginal_left = DenseMatrix::identity(5);
    c.expected.marginal_right = DenseMatrix::identity(5);
    c.expected.hermitian_ops = false;
    c.expected.gram_independent = false;
    return c;
}

CatalogCase five_rank7() {
    KrausFamily f;
    f.d_in = f.d_out = 5;
    f.scale = Rational(1, 6);
    RadScalar i_sq3 = RadScalar::term(Rational(0), Rational(1), 3);
    f.ops = {
        sq(2) * E(5, 5, 1, 3) + E(5, 5, 3, 2) + E(5, 5, 5, 4),
        E(5, 5, 2, 4) + E(5, 5, 4, 3),
        sq(2) * E(5, 5, 3, 5) + sq(3) * E(5, 5, 5, 4),
        E(5, 5, 1, 4) + E(5, 5, 4, 2),
        E(5, 5, 1, 5) + RadScalar(2) * E(5, 5, 4, 1) + E(5, 5, 5, 3),
        sq(2) * E(5, 5, 2, 1) + E(5, 5, 5, 2),
        sq(2) * E(5, 5, 1, 3) + i_sq3 * E(5, 5, 3, 2) + sq(3) * E(5, 5, 2, 5),
    };
    CatalogCase c;
    c.id = "five_rank7";
    c.family = f;
    c.expected.choi_rank = 7;
    c.expected.bound = 7;
    c.expected.verdict = Verdict::ExtremeDoublyConstrained;
    c.expected.marginal_left = DenseMatrix::identity(5);
    c.expected.marginal_right = DenseMatrix::identity(5);
    c.expected.hermitian_ops = false;
    c.expected.gram_independent = false;
    return c;
}

CatalogCase qubit_to_d(long d) {
    if (d < 4) throw std::invalid_argument("qubit_to_d: requires d >= 4");
    const int n = static_cast<int>(d);
    KrausFamily f;
    f.d_in = 2;
    f.d_out = n;
    f.scale = Rational(1, 2 * d);
    f.ops.push_back(E(2, n, 1, 1) + E(2, n, 2, 3));
    f.ops.push_back(E(2, n, 1, 2) + E(2, n, 2, 1));
    f.ops.push_back(E(2, n, 1, 3) + E(2, n, 2, 2));
    for (int r = 4; r <= n; ++r)
        f.ops.push_back(E(2, n, 1, r) + E(2, n, 2, r));

    CatalogCase c;
    c.id = "qubit_to_d(" + std::to_string(d) + ")";
    c.params["d"] = d;
    c.family = f;
    c.expected.choi_rank = n;
    c.expected.bound = parthasarathy_bound(2, n);  // equals d
    // The Gram set alone is independent (the product table forces a = 0
    // without the dual equations), so the stronger verdict applies.
    c.expected.verdict = Verdict::ExtremeUnitalSet;
    c.expected.gram_independent = true;
    c.expected.dual_gram_independent = false;
    DenseMatrix z(2, 2);
    z.at(0, 0) = RadScalar(Rational(1, 2));
    z.at(1, 1) = RadScalar(Rational(1, 2));
    z.at(0, 1) = RadScalar(Rational(d - 3, 2 * d));
    z.at(1, 0) = RadScalar(Rational(d - 3, 2 * d));
    c.expected.marginal_left = z;
    c.expected.marginal_right = scaled_identity(n, Rational(1, d));
    c.expected.hermitian_ops = false;
    return c;
}

CatalogCase cyclic_d_to_d_plus_1(long d) {
    if (d < 2) throw std::invalid_argument("cyclic_d_to_d_plus_1: requires d >= 2");
    const int n = static_cast<int>(d);
    KrausFamily f;
    f.d_in = n;
    f.d_out = n + 1;
    f.scale = Rational(1, d * d + d);
    // Column pattern [e_1, ..., e_d, 0] shifted cyclically right by j - 1.
    for (int j = 1; j <= n + 1; ++j) {
        DenseMatrix w(n, n + 1);
        for (int c = 0; c < n + 1; ++c) {
            int src = ((c - (j - 1)) % (n + 1) + (n + 1)) % (n + 1);
            if (src < n) w.at(src, c) = RadScalar(1);
        }
        f.ops.push_back(std::move(w));
    }
    CatalogCase c;
    c.id = "cyclic_d_to_d_plus_1(" + std::to_string(d) + ")";
    c.params["d"] = d;
    c.family = f;
    c.expected.choi_rank = n + 1;
    c.expected.bound = parthasarathy_bound(n, n + 1);
    // As with the 2 -> d family, the Gram set alone is independent.
    c.expected.verdict = Verdict::ExtremeUnitalSet;
    c.expected.gram_independent = true;
    c.expected.dual_gram_independent = false;
    c.expected.marginal_left = scaled_identity(n, Rational(1, d));
    c.expected.marginal_right = scaled_identity(n + 1, Rational(1, d + 1));
    c.expected.hermitian_ops = false;
    return c;
}

CatalogCase three_to_four() {
    CatalogCase c = cyclic_d_to_d_plus_1(3);
    c.id = "three_to_four";
    c.params.clear();
    return c;
}

CatalogCase remark_counterexample() {
    // Cyclic shift S with S e_{k+1} = e_k, S e_1 = e_4.
    DenseMatrix s(4, 4);
    for (int k = 1; k <= 3; ++k) s = s + E(4, 4, k, k + 1);
    s = s + E(4, 4, 4, 1);
    // Block diag(-13/3, W) with W rational orthogonal.
    DenseMatrix b(4, 4);
    b.at(0, 0) = RadScalar(Rational(-13, 3));
    // The rational orthogonal block, stored transposed: only that orientation
    // makes the Gram set independent while the dual set degenerates; the
    // other orientation is the adjoint family and has the two sets swapped.
    const long wnum[3][3] = {{8, -11, 16}, {-19, -8, 4}, {-4, 16, 13}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            b.at(i + 1, j + 1) = RadScalar(Rational(wnum[j][i], 21));
    // 3/(4*sqrt(11)) = 3*sqrt(11)/44
    RadScalar coeff = RadScalar(Rational(3, 44)) * RadScalar::sqrt_int(11);

    KrausFamily f;
    f.d_in = f.d_out = 4;
    f.scale = Rational(1);
    DenseMatrix sj = DenseMatrix::identity(4);
    for (int j = 1; j <= 4; ++j) {
        sj = matmul(sj, s);  // S^j
        f.ops.push_back(coeff * matmul(matmul(adjoint(sj), b), sj));
    }

    CatalogCase c;
    c.id = "remark_counterexample";
    c.family = f;
    c.expected.choi_rank = 4;
    c.expected.bound = 5;
    c.expected.verdict = Verdict::ExtremeUnitalSet;
    c.expected.marginal_left = scaled_identity(4, Rational(49, 44));
    c.expected.marginal_right = scaled_identity(4, Rational(49, 44));
    c.expected.hermitian_ops = false;
    c.expected.gram_independent = true;
    c.expected.dual_gram_independent = false;
    c.expected.note =
        "Gram set independent but dual set dependent; the double sums "
        "sum_ij Vi*Vj and sum_ij VjVi* agree with each other but equal a "
        "circulant with diagonal 449/616, not the identity";
    return c;
}

std::vector<CaseInfo> list_cases() {
    std::vector<CaseInfo> out;
    auto add = [&out](const std::string& id) { out.push_back({id, {}, false}); };

    for (long d = 3; d <= 5; ++d) add("ohno_hermitian(" + std::to_string(d) + ")");
    add("ohno_3x3_rank4");
    add("ohno_4x4_rank5");
    add("five_rank6");
    add("five_rank7");
    for (long d : {4, 5, 6, 8}) add("qubit_to_d(" + std::to_string(d) + ")");
    add("three_to_four");
    for (long d = 2; d <= 6; ++d) add("cyclic_d_to_d_plus_1(" + std::to_string(d) + ")");
    add("remark_counterexample");

    // Composite presets (see the compose module for construction).
    add("tensor:ohno_hermitian(3)×ohno_3x3_rank4");
    add("tensor:ohno_hermitian(4)×ohno_3x3_rank4");
    for (long k = 3; k <= 14; ++k)
        add("tensor:ohno_hermitian(" + std::to_string(k) + ")×five_rank7");
    add("tensor:ohno_3x3_rank4×ohno_4x4_rank5");

    out.push_back({"ohno_hermitian", {{"d", ">=3"}}, true});
    out.push_back({"qubit_to_d", {{"d", ">=4"}}, true});
    out.push_back({"cyclic_d_to_d_plus_1", {{"d", ">=2"}}, true});
    return out;
}

namespace {

bool parse_param_call(const std::string& id, const std::string& name, long& value) {
    if (id.size() <= name.size() + 2) return false;
    if (id.compare(0, name.size(), name) != 0) return false;
    if (id[name.size()] != '(' || id.back() != ')') return false;
    std::string inner = id.substr(name.size() + 1, id.size() - name.size() - 2);
    if (inner.empty()) return false;
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(inner, &pos);
    } catch (const std::exception&) {
        return false;
    }
    if (pos != inner.size()) return false;
    value = v;
    return true;
}

}  // namespace

CatalogCase make_base_case(const std::string& id) {
    if (id == "ohno_3x3_rank4") return ohno_3x3_rank4();
    if (id == "ohno_4x4_rank5") return ohno_4x4_rank5();
    if (id == "five_rank6") return five_rank6();
    if (id == "five_rank7") return five_rank7();
    if (id == "three_to_four") return three_to_four();
    if (id == "remark_counterexample") return remark_counterexample();
    long v = 0;
    if (parse_param_call(id, "ohno_hermitian", v)) return ohno_hermitian(v);
    if (parse_param_call(id, "qubit_to_d", v)) return qubit_to_d(v);
    if (parse_param_call(id, "cyclic_d_to_d_plus_1", v)) return cyclic_d_to_d_plus_1(v);
    throw std::invalid_argument("unknown case id: " + id);
}

}  // namespace emcert::catalog
