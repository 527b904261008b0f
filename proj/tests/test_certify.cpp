#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "emcert/catalog.hpp"

using namespace emcert;
using namespace emcert::catalog;

namespace {

KrausFamily two_op_family(const DenseMatrix& a, const DenseMatrix& b) {
    KrausFamily f;
    f.d_in = a.rows();
    f.d_out = a.cols();
    f.scale = Rational(1);
    f.ops = {a, b};
    return f;
}

}  // namespace

TEST_CASE("rank bound: every printed floor value") {
    CHECK(parthasarathy_bound(1, 1) == 1);
    CHECK(parthasarathy_bound(3, 3) == 4);
    CHECK(parthasarathy_bound(4, 4) == 5);
    CHECK(parthasarathy_bound(5, 5) == 7);
    CHECK(parthasarathy_bound(9, 9) == 12);
    CHECK(parthasarathy_bound(12, 12) == 16);
    CHECK(parthasarathy_bound(3, 4) == 4);
    for (int d = 4; d <= 100; ++d) CHECK(parthasarathy_bound(2, d) == d);
    for (int k = 3; k <= 14; ++k) CHECK(parthasarathy_bound(5 * k, 5 * k) == 7 * k);
    CHECK(parthasarathy_bound(75, 75) == 106);  // k = 15 breaks the 7k pattern
    CHECK_THROWS_AS(parthasarathy_bound(0, 3), std::invalid_argument);
}

TEST_CASE("gram independence") {
    CHECK(gram_independence(ohno_hermitian(4).family).independent);
    CHECK(gram_independence(remark_counterexample().family).independent);

    DenseMatrix v(2, 2);
    v.at(0, 0) = RadScalar(1);
    v.at(1, 1) = RadScalar::sqrt_int(2);
    KrausFamily f = two_op_family(v, RadScalar(2) * v);
    IndependenceResult res = gram_independence(f);
    CHECK_FALSE(res.independent);
    CHECK(res.system_rows == 4);
    CHECK(res.system_cols == 4);
    REQUIRE(!res.witness.empty());
    CHECK(witness_resubstitutes_to_zero(f, System::Gram, res.witness));
}

TEST_CASE("dual gram independence and its witness") {
    IndependenceResult res = dual_gram_independence(remark_counterexample().family);
    CHECK_FALSE(res.independent);
    CHECK(res.rank == 15);
    REQUIRE(!res.witness.empty());
    CHECK(witness_resubstitutes_to_zero(remark_counterexample().family, System::DualGram,
                                        res.witness));

    CHECK(dual_gram_independence(ohno_hermitian(3).family).independent);

    KrausFamily single;
    single.d_in = single.d_out = 2;
    single.scale = Rational(1);
    single.ops = {DenseMatrix::unit(2, 2, 0, 1)};
    CHECK(dual_gram_independence(single).independent);
}

TEST_CASE("pair (bi-linear) independence") {
    CHECK(bilinear_independence(five_rank6().family).independent);
    IndependenceResult r34 = bilinear_independence(three_to_four().family);
    CHECK(r34.independent);
    CHECK(r34.rank == 16);

    // Hermitian commuting pair: I and diag(1,-1). The family is independent
    // but every pair row appears twice, so the pair criterion fails.
    DenseMatrix d2(2, 2);
    d2.at(0, 0) = RadScalar(1);
    d2.at(1, 1) = RadScalar(-1);
    KrausFamily f = two_op_family(DenseMatrix::identity(2), d2);
    CHECK(is_minimal(f).independent);
    IndependenceResult res = bilinear_independence(f);
    CHECK_FALSE(res.independent);
    REQUIRE(!res.witness.empty());
    CHECK(witness_resubstitutes_to_zero(f, System::Bilinear, res.witness));
}

TEST_CASE("independence implications across the catalog") {
    for (const char* id : {"ohno_hermitian(3)", "ohno_hermitian(4)", "ohno_3x3_rank4",
                           "ohno_4x4_rank5", "five_rank6", "five_rank7", "qubit_to_d(4)",
                           "three_to_four", "cyclic_d_to_d_plus_1(2)", "remark_counterexample"}) {
        CatalogCase c = make_base_case(id);
        INFO(c.id);
        bool gram = gram_independence(c.family).independent;
        bool bil = bilinear_independence(c.family).independent;
        bool minimal = is_minimal(c.family).independent;
        if (gram) CHECK(bil);
        if (bil) CHECK(minimal);
    }
}

TEST_CASE("certify: frozen verdicts for the M(5) and M(3)/M(4) families") {
    Certificate c7 = certify(five_rank7().family, std::nullopt, Mode::Exact, "five_rank7");
    CHECK(c7.verdict == Verdict::ExtremeDoublyConstrained);
    CHECK(c7.choi_rank == 7);
    CHECK(c7.bound == 7);
    CHECK_FALSE(c7.gram_independent);
    CHECK(c7.bilinear_independent);
    CHECK_FALSE(c7.has_witness);

    Certificate c6 = certify(five_rank6().family);
    CHECK(c6.verdict == Verdict::ExtremeDoublyConstrained);
    CHECK(c6.choi_rank == 6);
    CHECK(c6.bound == 7);

    Certificate c45 = certify(ohno_4x4_rank5().family);
    CHECK(c45.verdict == Verdict::ExtremeDoublyConstrained);
    CHECK(c45.choi_rank == 5);
    CHECK(c45.bound == 5);

    for (long d = 3; d <= 5; ++d) {
        Certificate ch = certify(ohno_hermitian(d).family);
        CHECK(ch.verdict == Verdict::ExtremeUnitalSet);
        CHECK(ch.choi_rank == d);
        CHECK(ch.gram_independent);
        CHECK(ch.bilinear_independent);
    }

    Certificate cr = certify(remark_counterexample().family);
    CHECK(cr.verdict == Verdict::ExtremeUnitalSet);
    CHECK(cr.gram_independent);
    CHECK_FALSE(cr.dual_gram_independent);
}

TEST_CASE("certify: not-extreme and indeterminate verdicts with witnesses") {
    DenseMatrix d2(2, 2);
    d2.at(0, 0) = RadScalar(1);
    d2.at(1, 1) = RadScalar(-1);
    KrausFamily f = two_op_family(DenseMatrix::identity(2), d2);
    Certificate c = certify(f);
    CHECK(c.verdict == Verdict::NotExtremeWitnessed);
    CHECK(c.family_independent);
    CHECK_FALSE(c.bilinear_independent);
    REQUIRE(c.has_witness);
    CHECK(witness_resubstitutes_to_zero(f, System::Bilinear, c.witness));

    DenseMatrix v(2, 2);
    v.at(0, 1) = RadScalar::sqrt_int(3);
    KrausFamily dep = two_op_family(v, RadScalar(2) * v);
    Certificate ci = certify(dep);
    CHECK(ci.verdict == Verdict::Indeterminate);
    CHECK_FALSE(ci.family_independent);
    REQUIRE(ci.has_witness);
    CHECK(witness_resubstitutes_to_zero(dep, System::Family, ci.witness));
}

TEST_CASE("certify: scale invariance of ranks and verdicts") {
    for (const char* id : {"five_rank6", "qubit_to_d(4)", "remark_counterexample"}) {
        CatalogCase c = make_base_case(id);
        Certificate base = certify(c.family);
        KrausFamily rescaled = c.family;
        rescaled.scale = rescaled.scale * Rational(7, 3);
        // rescaling every operator by a rational also leaves verdicts alone
        for (auto& v : rescaled.ops) v = RadScalar(Rational(3, 2)) * v;
        Certificate two = certify(rescaled);
        CHECK(base.verdict == two.verdict);
        CHECK(base.choi_rank == two.choi_rank);
        CHECK(base.gram_independent == two.gram_independent);
        CHECK(base.bilinear_independent == two.bilinear_independent);
    }
}

TEST_CASE("certify: float mode agrees with exact mode on catalog cases") {
    for (const char* id : {"ohno_hermitian(3)", "ohno_3x3_rank4", "five_rank6", "five_rank7",
                           "qubit_to_d(5)", "three_to_four", "remark_counterexample"}) {
        CatalogCase c = make_base_case(id);
        INFO(c.id);
        Certificate ex = certify(c.family, std::nullopt, Mode::Exact, c.id);
        Certificate fl = certify(c.family, std::nullopt, Mode::Float, c.id);
        CHECK(ex.verdict == fl.verdict);
        CHECK(ex.choi_rank == fl.choi_rank);
        CHECK(ex.gram_independent == fl.gram_independent);
        CHECK(ex.dual_gram_independent == fl.dual_gram_independent);
        CHECK(ex.bilinear_independent == fl.bilinear_independent);
        CHECK(fl.mode == Mode::Float);
    }
}

TEST_CASE("certify: expected-marginal comparison") {
    CatalogCase c = make_base_case("three_to_four");
    MarginalPair good{c.expected.marginal_left, c.expected.marginal_right};
    Certificate ok = certify(c.family, good);
    REQUIRE(ok.marginals_match.has_value());
    CHECK(*ok.marginals_match);
    MarginalPair bad{DenseMatrix::identity(3), c.expected.marginal_right};
    Certificate mm = certify(c.family, bad);
    REQUIRE(mm.marginals_match.has_value());
    CHECK_FALSE(*mm.marginals_match);
}

TEST_CASE("support reduction") {
    // invertible marginals: vacuous
    KrausFamily f = five_rank7().family;
    f.scale = f.scale * Rational(1, 5);
    StateTriple s = state_from_cpmap(f);
    CHECK(support_reduction_check(s.rho, 5, 5));

    // rank-one left marginal: rho = E11 (x) I2/2
    DenseMatrix e11(2, 2);
    e11.at(0, 0) = RadScalar(1);
    DenseMatrix rho = kron(e11, Rational(1, 2) * DenseMatrix::identity(2));
    CHECK(support_reduction_check(rho, 2, 2));

    // convex combination of embedded states with a rank-deficient left
    // marginal; the kernel inclusion must survive mixing.
    KrausFamily g = three_to_four().family;  // trace(Phi(I)) = 1
    StateTriple sg = state_from_cpmap(g);
    DenseMatrix big1 = kron(e11, sg.rho);     // d1 = 2*3 = 6, d2 = 4
    DenseMatrix e22(2, 2);
    e22.at(1, 1) = RadScalar(1);
    DenseMatrix big2 = kron(e22, sg.rho);
    DenseMatrix mix = Rational(1, 3) * big1 + Rational(2, 3) * big2;
    // left marginal of each term is rank <= 3 inside M(6)
    CHECK(support_reduction_check(big1, 6, 4));
    CHECK(support_reduction_check(mix, 6, 4));

    CHECK_THROWS_AS(support_reduction_check(DenseMatrix::identity(5), 2, 3),
                    std::invalid_argument);
}

TEST_CASE("support reduction holds for every catalog state") {
    for (const char* id : {"ohno_hermitian(3)", "ohno_hermitian(4)", "ohno_hermitian(5)",
                           "ohno_3x3_rank4", "ohno_4x4_rank5", "five_rank6", "five_rank7",
                           "qubit_to_d(4)", "qubit_to_d(8)", "three_to_four",
                           "cyclic_d_to_d_plus_1(2)", "cyclic_d_to_d_plus_1(6)",
                           "remark_counterexample"}) {
        CatalogCase c = make_base_case(id);
        KrausFamily f = c.family;
        RadScalar tr = trace(apply(f, DenseMatrix::identity(f.d_in)));
        REQUIRE(tr.is_rational());
        Rational t = tr.terms().begin()->second.re;
        f.scale = f.scale * t.inverse();
        StateTriple s = state_from_cpmap(f);
        INFO(id);
        CHECK(support_reduction_check(s.rho, f.d_in, f.d_out));
    }
}
