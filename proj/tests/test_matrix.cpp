#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "emcert/matrix.hpp"

using namespace emcert;

namespace {

DenseMatrix E(int rows, int cols, int i, int j) {  // 1-based unit
    return DenseMatrix::unit(rows, cols, i - 1, j - 1);
}

RadScalar sq(long n) { return RadScalar::sqrt_int(static_cast<std::uint64_t>(n)); }

DenseMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, bool radicals = true) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 2), pick(0, 3);
    const std::uint64_t rads[4] = {1, 1, 2, 3};
    DenseMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            RadScalar s = RadScalar::term(Rational(num(rng), den(rng)),
                                          Rational(num(rng), den(rng)),
                                          radicals ? rads[pick(rng)] : 1);
            m.at(i, j) = s;
        }
    return m;
}

// Random matrix of exact rank r: product of d x r and r x d integer factors.
DenseMatrix random_matrix_of_rank(std::mt19937_64& rng, int rows, int cols, int r) {
    std::uniform_int_distribution<int> num(-2, 2);
    while (true) {
        if (r == 0) return DenseMatrix(rows, cols);
        DenseMatrix a(rows, r), b(r, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < r; ++j) a.at(i, j) = RadScalar(num(rng));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < cols; ++j) b.at(i, j) = RadScalar(num(rng));
        DenseMatrix m = matmul(a, b);
        if (rank_exact(m) == r) return m;  // retry on accidental deficiency
    }
}

}  // namespace

TEST_CASE("matrix unit algebra") {
    CHECK(matmul(E(3, 3, 1, 3), E(3, 3, 3, 2)) == E(3, 3, 1, 2));
    CHECK(matmul(E(3, 3, 1, 2), E(3, 3, 3, 2)).is_zero());
    CHECK_THROWS_AS(matmul(DenseMatrix(2, 3), DenseMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("product of a construction operator with its adjoint") {
    // W = E13 + E32 on M(5): W^* W = E33 + E22, W W^* = E11 + E33.
    DenseMatrix w = E(5, 5, 1, 3) + E(5, 5, 3, 2);
    CHECK(matmul(adjoint(w), w) == E(5, 5, 3, 3) + E(5, 5, 2, 2));
    CHECK(matmul(w, adjoint(w)) == E(5, 5, 1, 1) + E(5, 5, 3, 3));
    // W2 = E24 + E43: W2^* W2 = E33 + E44.
    DenseMatrix w2 = E(5, 5, 2, 4) + E(5, 5, 4, 3);
    CHECK(matmul(adjoint(w2), w2) == E(5, 5, 3, 3) + E(5, 5, 4, 4));
}

TEST_CASE("adjoint") {
    CHECK(adjoint(E(2, 2, 1, 2)) == E(2, 2, 2, 1));
    RadScalar isq3 = RadScalar::i() * sq(3);
    CHECK(adjoint(isq3 * E(5, 5, 3, 2)) == -isq3 * E(5, 5, 2, 3));
    std::mt19937_64 rng(5u);
    DenseMatrix m = random_matrix(rng, 3, 4);
    CHECK(adjoint(adjoint(m)) == m);
    CHECK(rank_exact(m) == rank_exact(adjoint(m)));
}

TEST_CASE("kron") {
    CHECK(kron(DenseMatrix::identity(2), DenseMatrix::identity(3)) == DenseMatrix::identity(6));
    // E11 (x) E22 of M(2) (x) M(2) sits at global position (2, 2) of M(4).
    CHECK(kron(E(2, 2, 1, 1), E(2, 2, 2, 2)) == E(4, 4, 2, 2));
    std::mt19937_64 rng(11u);
    DenseMatrix a = random_matrix_of_rank(rng, 3, 3, 2);
    DenseMatrix b = random_matrix_of_rank(rng, 3, 3, 1);
    CHECK(rank_exact(kron(a, b)) == rank_exact(a) * rank_exact(b));
}

TEST_CASE("trace") {
    CHECK(trace(DenseMatrix::identity(5)) == RadScalar(5));
    CHECK(trace(E(3, 3, 1, 2)).is_zero());
    CHECK_THROWS_AS(trace(DenseMatrix(2, 3)), std::invalid_argument);
    std::mt19937_64 rng(6u);
    for (int t = 0; t < 20; ++t) {
        DenseMatrix a = random_matrix(rng, 3, 3), b = random_matrix(rng, 2, 2);
        CHECK(trace(kron(a, b)) == trace(a) * trace(b));
    }
}

TEST_CASE("partial traces: frozen identities") {
    CHECK(partial_trace_right(DenseMatrix::identity(6), 2, 3) ==
          RadScalar(3) * DenseMatrix::identity(2));
    CHECK(partial_trace_left(DenseMatrix::identity(6), 2, 3) ==
          RadScalar(2) * DenseMatrix::identity(3));
    CHECK_THROWS_AS(partial_trace_right(DenseMatrix::identity(5), 2, 3), std::invalid_argument);
}

TEST_CASE("partial traces on random tensors and the module property") {
    std::mt19937_64 rng(13u);
    for (int t = 0; t < 50; ++t) {
        DenseMatrix a = random_matrix(rng, 3, 3), b = random_matrix(rng, 2, 2);
        DenseMatrix z = kron(a, b);
        CHECK(partial_trace_right(z, 3, 2) == trace(b) * a);
        CHECK(partial_trace_left(z, 3, 2) == trace(a) * b);
    }
    for (int t = 0; t < 50; ++t) {
        DenseMatrix z = random_matrix(rng, 6, 6);
        CHECK(trace(z) == trace(partial_trace_right(z, 2, 3)));
        CHECK(trace(z) == trace(partial_trace_left(z, 2, 3)));
        // tr_2((A (x) I) Z (B (x) I)) = A tr_2(Z) B
        DenseMatrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
        DenseMatrix i3 = DenseMatrix::identity(3);
        DenseMatrix lhs = partial_trace_right(matmul(matmul(kron(a, i3), z), kron(b, i3)), 2, 3);
        CHECK(lhs == matmul(matmul(a, partial_trace_right(z, 2, 3)), b));
    }
}

TEST_CASE("vectorize") {
    DenseMatrix e12 = E(2, 2, 1, 2);
    DenseMatrix v = vectorize(e12);
    CHECK(v.rows() == 1);
    CHECK(v.cols() == 4);
    CHECK(v.at(0, 1).is_one());
    CHECK(vectorize(DenseMatrix(2, 2)).is_zero());
    std::mt19937_64 rng(21u);
    DenseMatrix a = random_matrix(rng, 2, 3), b = random_matrix(rng, 2, 3);
    CHECK((vectorize(a) == vectorize(b)) == (a == b));
}

TEST_CASE("rank_exact basics") {
    CHECK(rank_exact(DenseMatrix(4, 7)) == 0);
    CHECK(rank_exact(DenseMatrix::identity(5)) == 5);
    std::mt19937_64 rng(31u);
    for (int t = 0; t < 25; ++t) {
        std::uniform_int_distribution<int> rr(0, 3);
        int r = rr(rng);
        DenseMatrix m = random_matrix_of_rank(rng, 4, 5, r);
        CHECK(rank_exact(m) == r);
        CHECK(rank_exact(adjoint(m)) == r);
    }
}

TEST_CASE("rank multiplicativity under kron on random pairs") {
    std::mt19937_64 rng(37u);
    for (int t = 0; t < 50; ++t) {
        std::uniform_int_distribution<int> rr(1, 3);
        DenseMatrix a = random_matrix_of_rank(rng, 3, 4, rr(rng));
        DenseMatrix b = random_matrix_of_rank(rng, 4, 3, rr(rng));
        CHECK(rank_exact(kron(a, b)) == rank_exact(a) * rank_exact(b));
    }
}

// The two coefficient matrices the diagonal equations of the rank-6 and
// rank-7 pair systems reduce to; their full column ranks finish those
// independence proofs.
TEST_CASE("frozen 10x6 coefficient matrix has rank 6") {
    const int bt[6][10] = {
        {0, 1, 1, 0, 0, 1, 0, 1, 0, 0},
        {0, 0, 1, 1, 0, 0, 1, 0, 1, 0},
        {0, 0, 0, 1, 2, 0, 0, 2, 0, 1},
        {0, 1, 0, 1, 0, 1, 0, 0, 1, 0},
        {1, 0, 1, 0, 1, 1, 0, 0, 1, 1},
        {2, 1, 0, 0, 0, 0, 2, 0, 0, 1},
    };
    DenseMatrix b(10, 6);
    for (int c = 0; c < 6; ++c)
        for (int r = 0; r < 10; ++r) b.at(r, c) = RadScalar(bt[c][r]);
    CHECK(rank_exact(b) == 6);
    CHECK(!nullspace_vector(b).has_value());
}

TEST_CASE("frozen 10x9 coefficient matrix has rank 9") {
    // Entries are integers except two columns carrying +-i*sqrt(3).
    RadScalar isq3 = RadScalar::i() * sq(3);
    DenseMatrix b(10, 9);
    const int ints[10][7] = {
        {2, 1, 0, 0, 1, 0, 2}, {2, 0, 0, 1, 1, 0, 2}, {1, 0, 0, 1, 0, 1, 3},
        {1, 0, 2, 0, 0, 0, 3}, {1, 1, 3, 1, 0, 0, 0}, {1, 0, 3, 0, 1, 1, 0},
        {0, 1, 0, 1, 4, 0, 0}, {0, 1, 0, 0, 0, 2, 3}, {0, 0, 2, 0, 1, 0, 3},
        {0, 0, 0, 0, 4, 2, 0},
    };
    for (int r = 0; r < 10; ++r)
        for (int c = 0; c < 7; ++c) b.at(r, c) = RadScalar(ints[r][c]);
    b.at(0, 7) = RadScalar(2);
    b.at(0, 8) = RadScalar(2);
    b.at(1, 7) = RadScalar(2);
    b.at(1, 8) = RadScalar(2);
    b.at(2, 7) = isq3;
    b.at(2, 8) = -isq3;
    b.at(3, 7) = isq3;
    b.at(3, 8) = -isq3;
    CHECK(rank_exact(b) == 9);
    CHECK(!nullspace_vector(b).has_value());
}

#include "emcert/float_matrix.hpp"

TEST_CASE("float images of the frozen coefficient matrices keep their ranks") {
    const int bt[6][10] = {
        {0, 1, 1, 0, 0, 1, 0, 1, 0, 0}, {0, 0, 1, 1, 0, 0, 1, 0, 1, 0},
        {0, 0, 0, 1, 2, 0, 0, 2, 0, 1}, {0, 1, 0, 1, 0, 1, 0, 0, 1, 0},
        {1, 0, 1, 0, 1, 1, 0, 0, 1, 1}, {2, 1, 0, 0, 0, 0, 2, 0, 0, 1},
    };
    DenseMatrix b6(10, 6);
    for (int c = 0; c < 6; ++c)
        for (int r = 0; r < 10; ++r) b6.at(r, c) = RadScalar(bt[c][r]);
    CHECK(rank_float(to_float(b6)) == 6);

    RadScalar isq3 = RadScalar::i() * sq(3);
    DenseMatrix b9(10, 9);
    const int ints[10][7] = {
        {2, 1, 0, 0, 1, 0, 2}, {2, 0, 0, 1, 1, 0, 2}, {1, 0, 0, 1, 0, 1, 3},
        {1, 0, 2, 0, 0, 0, 3}, {1, 1, 3, 1, 0, 0, 0}, {1, 0, 3, 0, 1, 1, 0},
        {0, 1, 0, 1, 4, 0, 0}, {0, 1, 0, 0, 0, 2, 3}, {0, 0, 2, 0, 1, 0, 3},
        {0, 0, 0, 0, 4, 2, 0},
    };
    for (int r = 0; r < 10; ++r)
        for (int c = 0; c < 7; ++c) b9.at(r, c) = RadScalar(ints[r][c]);
    b9.at(0, 7) = RadScalar(2);
    b9.at(0, 8) = RadScalar(2);
    b9.at(1, 7) = RadScalar(2);
    b9.at(1, 8) = RadScalar(2);
    b9.at(2, 7) = isq3;
    b9.at(2, 8) = -isq3;
    b9.at(3, 7) = isq3;
    b9.at(3, 8) = -isq3;
    CHECK(rank_float(to_float(b9)) == 9);
}

TEST_CASE("nullspace vectors re-substitute to zero") {
    std::mt19937_64 rng(41u);
    for (int t = 0; t < 25; ++t) {
        DenseMatrix m = random_matrix_of_rank(rng, 4, 6, 3);
        auto x = nullspace_vector(m);
        REQUIRE(x.has_value());
        for (int i = 0; i < m.rows(); ++i) {
            RadScalar s;
            for (int j = 0; j < m.cols(); ++j) s += m.at(i, j) * (*x)[j];
            CHECK(s.is_zero());
        }
    }
    CHECK(!nullspace_vector(DenseMatrix::identity(3)).has_value());
}

TEST_CASE("row dependence witness for a proportional pair") {
    // rows v and 2v: canonical witness is (-2, 1) up to scale.
    std::mt19937_64 rng(43u);
    DenseMatrix v = random_matrix(rng, 1, 6);
    DenseMatrix m(2, 6);
    for (int j = 0; j < 6; ++j) {
        m.at(0, j) = v.at(0, j);
        m.at(1, j) = RadScalar(2) * v.at(0, j);
    }
    auto w = nullspace_vector(transpose(m));
    REQUIRE(w.has_value());
    // (2, -1) direction: w[0] = -2 * w[1]
    CHECK((*w)[0] == RadScalar(-2) * (*w)[1]);
    for (int j = 0; j < 6; ++j) {
        RadScalar s = (*w)[0] * m.at(0, j) + (*w)[1] * m.at(1, j);
        CHECK(s.is_zero());
    }
}
