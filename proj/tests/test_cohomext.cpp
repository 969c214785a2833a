#include "centroidkit/builders.hpp"
#include "centroidkit/cohomext.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace ck;

TEST_CASE("derivation dimensions against reference") {
    for (const SCAlgebra& a : {heisenberg(1), oscillator(), classical('A', 1), abelian(2), tensor(classical('A', 1), truncated_poly(2))})
        CHECK_MESSAGE(derivations(a).dim() == oracle::derivation_dim(oracle::table_of(a)), a.name());
}

TEST_CASE("inner derivations") {
    CHECK(inner_derivations(classical('A', 2)).dim() == 8);
    CHECK(inner_derivations(heisenberg(1)).dim() == 2);
}

TEST_CASE("derivations of a current algebra") {
    for (std::size_t k = 2; k <= 4; ++k) {
        auto r = der_tensor_decomposition_check(classical('A', 1), truncated_poly(k));
        CHECK(r.der_tensor == 3 * k + (k - 1));
        CHECK(r.dimension_ok);
    }
}

TEST_CASE("H2 against reference") {
    for (const SCAlgebra& a : {classical('A', 1), heisenberg(1), heisenberg(2), oscillator(), abelian(3)})
        CHECK_MESSAGE(h2_trivial_coeffs(a).dim() == oracle::h2_dim(oracle::table_of(a)), a.name());
}

TEST_CASE("coboundaries are cocycles") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-5, 5);
    SCAlgebra a = classical('A', 2);
    for (int t = 0; t < 5; ++t) {
        Matrix f(2, a.dim());
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) f(i, j) = d(rng);
        Cocycle s = coboundary(a, f);
        CHECK(validate_cocycle(a, s).valid);
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                CHECK(s.eval(unit_vec(a.dim(), i), unit_vec(a.dim(), j)) == f * a.bracket_basis(i, j));
    }
}

TEST_CASE("oscillator non-cocycle witness") {
    SCAlgebra o = oscillator();
    Cocycle s;
    s.coeff_dim = 1;
    s.set(0, 3, Vec{1});
    auto r = validate_cocycle(o, s);
    CHECK_FALSE(r.valid);
    REQUIRE(r.witness);
    CHECK(o.basis_names()[(*r.witness)[0]] == "d");
    CHECK(o.basis_names()[(*r.witness)[1]] == "a");
    CHECK(o.basis_names()[(*r.witness)[2]] == "b");
    CHECK_THROWS_AS(central_extension(o, s), std::invalid_argument);
}

TEST_CASE("central extension of abelian(2) is heisenberg(1)") {
    Cocycle s;
    s.coeff_dim = 1;
    s.set(0, 1, Vec{1});
    Extension e = central_extension(abelian(2), s);
    CHECK(e.algebra.dim() == 3);
    CHECK(oracle::table_of(e.algebra).c == oracle::heisenberg(1).c);
    Extension back = extension_from_algebra(e.algebra);
    CHECK(back.sigma == s);
}

TEST_CASE("extension centroid decomposes and reassembles") {
    Cocycle s;
    s.coeff_dim = 1;
    s.set(0, 1, Vec{1});
    CHECK_FALSE(decompose_extension_centroid(central_extension(abelian(2), s)).applicable);
    SCAlgebra g = classical('A', 2);
    Matrix f(2, g.dim());
    for (std::size_t j = 0; j < g.dim(); ++j) {
        f(0, j) = static_cast<long>(j % 3);
        f(1, j) = static_cast<long>(j % 2);
    }
    Extension e = central_extension(g, coboundary(g, f));
    auto r = decompose_extension_centroid(e);
    CHECK(r.decompositions.size() == oracle::centroid_dim(oracle::table_of(e.algebra)));
    CHECK(r.round_trip_ok);
    CHECK(r.compatibility_ok);
    CHECK(r.converse_ok);
    for (const auto& d : r.decompositions) CHECK(satisfies_compatibility(e, d));
}

TEST_CASE("H1 with centre coefficients") {
    auto h = h1_with_centre_coefficients(heisenberg(2));
    CHECK(h.dim == 4);
    CHECK(h1_with_centre_coefficients(classical('A', 1)).dim == 0);
}
