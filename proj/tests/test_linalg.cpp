#include "centroidkit/linalg.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace ck;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int density) {
    std::uniform_int_distribution<int> val(-4, 4), keep(0, 9);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (keep(rng) < density) {
                m(i, j) = Rational(val(rng), 1 + std::abs(val(rng)));
                m(i, j).canonicalize();
            }
    return m;
}

oracle::Mat rows_of(const Matrix& m) {
    oracle::Mat out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        oracle::Row r(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] = m(i, j);
        out.push_back(r);
    }
    return out;
}

}  // namespace

TEST_CASE("rational text round trip") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-7")) == "-7");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("row reduction matches reference elimination") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + trial % 7, c = 1 + (trial * 3) % 8;
        Matrix m = random_matrix(rng, r, c, trial % 2 ? 4 : 8);
        oracle::Mat ref = rows_of(m);
        auto piv = oracle::rref(ref, c);
        EchelonForm e = row_reduce(m);
        REQUIRE(e.pivots == piv);
        for (std::size_t i = 0; i < piv.size(); ++i)
            for (std::size_t j = 0; j < c; ++j) CHECK(e.reduced(i, j) == ref[i][j]);
        CHECK(rank(m) == piv.size());
    }
}

TEST_CASE("kernel equals reference nullspace") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix m = random_matrix(rng, 4, 7, 5);
        Subspace k = kernel(m);
        oracle::Mat ref = oracle::canonical(oracle::nullspace(rows_of(m), 7), 7);
        REQUIRE(k.dim() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i)
            for (std::size_t j = 0; j < 7; ++j) CHECK(k.basis()[i][j] == ref[i][j]);
        for (const auto& v : k.basis()) CHECK(is_zero(m * v));
    }
}

TEST_CASE("sparse system agrees with dense kernel") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = random_matrix(rng, 6, 9, 3);
        SparseSystem sys(9);
        for (std::size_t i = 0; i < 6; ++i) {
            SparseSystem::Row row;
            for (std::size_t j = 0; j < 9; ++j)
                if (sgn(m(i, j)) != 0) row.emplace_back(j, m(i, j));
            sys.add_equation(row);
        }
        Subspace ks = sys.kernel();
        CHECK(ks == kernel(m));
        CHECK(sys.rank() == rank(m));
    }
}

TEST_CASE("determinant, inverse and solve") {
    Matrix m = Matrix::from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}}, 3);
    CHECK(determinant(m) == 18);
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == Matrix::identity(3));
    auto x = solve(m, Vec{3, 5, 5});
    REQUIRE(x);
    CHECK(m * *x == Vec{3, 5, 5});
    Matrix s = Matrix::from_rows({{1, 2}, {2, 4}}, 2);
    CHECK(determinant(s) == 0);
    CHECK_FALSE(inverse(s));
    CHECK_FALSE(solve(s, Vec{1, 0}));
}

TEST_CASE("subspace operations") {
    Subspace a = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
    Subspace b = Subspace::span(3, {{0, 1, 0}, {0, 0, 1}});
    CHECK(intersect(a, b).dim() == 1);
    CHECK(intersect(a, b).contains(Vec{0, 5, 0}));
    CHECK(sum(a, b).dim() == 3);
    CHECK(Subspace::span(3, {{2, 4, 0}, {1, 2, 0}}) == Subspace::span(3, {{Rational(1, 3), Rational(2, 3), 0}}));
    auto c = a.coordinates(Vec{3, -2, 0});
    REQUIRE(c);
    CHECK(*c == Vec{3, -2});
    CHECK_FALSE(a.coordinates(Vec{0, 0, 1}));
}

TEST_CASE("polynomial arithmetic") {
    Poly p{{Rational(-2), 0, 1}}, q{{Rational(1), 1}};
    auto [quo, rem] = poly_divmod(p, q);
    CHECK(poly_sub(p, poly_mul(quo, q)).str() == rem.str());
    CHECK(rem.degree() == 0);
    CHECK(rem.c[0] == -1);
    CHECK(poly_gcd(poly_mul(q, q), poly_mul(q, p)).degree() == 1);
}
