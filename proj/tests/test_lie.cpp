#include "centroidkit/builders.hpp"
#include "centroidkit/lie.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace ck;

TEST_CASE("builders satisfy Jacobi") {
    for (const SCAlgebra& a : {heisenberg(1), heisenberg(3), oscillator(), abelian(2), classical('A', 1), classical('A', 2),
                               classical('B', 2), classical('C', 3), classical('D', 4)})
        CHECK_MESSAGE(validate(a).ok(), a.name());
}

TEST_CASE("classical dimensions") {
    CHECK(classical('A', 1).dim() == 3);
    CHECK(classical('A', 2).dim() == 8);
    CHECK(classical('B', 2).dim() == 10);
    CHECK(classical('C', 3).dim() == 21);
    CHECK(classical('B', 3).dim() == 21);
    CHECK(classical('D', 4).dim() == 28);
    CHECK_THROWS_AS(classical('E', 6), std::invalid_argument);
}

TEST_CASE("sl2 table equals the hand-written one") {
    oracle::Table lib = oracle::table_of(classical('A', 1)), ref = oracle::sl2();
    CHECK(lib.c == ref.c);
    CHECK(oracle::table_of(heisenberg(2)).c == oracle::heisenberg(2).c);
}

TEST_CASE("Jacobi failure is reported with a witness") {
    SCAlgebra a("broken", {"x", "y", "z"});
    a.set_bracket(0, 1, Vec{0, 0, 1});
    a.set_bracket(1, 2, Vec{1, 0, 0});
    a.set_bracket(0, 2, Vec{0, 0, 1});
    auto v = validate(a);
    CHECK_FALSE(v.jacobi_ok);
    REQUIRE_FALSE(v.jacobi_failures.empty());
    const auto& f = v.jacobi_failures.front();
    CHECK_FALSE(is_zero(f.residual));
    Vec x = unit_vec(3, f.i), y = unit_vec(3, f.j), z = unit_vec(3, f.k);
    Vec r = add(add(bracket(a, x, bracket(a, y, z)), bracket(a, y, bracket(a, z, x))), bracket(a, z, bracket(a, x, y)));
    CHECK(r == f.residual);
    CHECK_THROWS_AS(require_valid(a), std::invalid_argument);
}

TEST_CASE("centre and derived algebra against reference") {
    for (const SCAlgebra& a : {heisenberg(1), heisenberg(2), oscillator(), abelian(3), classical('A', 2),
                               direct_sum(classical('A', 1), abelian(1))}) {
        auto t = oracle::table_of(a);
        CHECK_MESSAGE(centre(a).dim() == oracle::centre_dim(t), a.name());
        CHECK_MESSAGE(derived_subalgebra(a).dim() == oracle::derived_dim(t), a.name());
    }
}

TEST_CASE("series and perfectness") {
    CHECK(is_perfect(classical('A', 2)));
    CHECK_FALSE(is_perfect(heisenberg(1)));
    CHECK(lower_central_series(heisenberg(2)).back().dim() == 0);
    CHECK(derived_series(oscillator()).back().dim() == 0);
    CHECK(lower_central_series(oscillator()).back().dim() != 0);
}

TEST_CASE("weight decomposition of sl3") {
    SCAlgebra a = classical('A', 2);
    auto wd = weight_decomposition(a, toral_subspace(a));
    CHECK(wd.weights.size() == 7);
    std::size_t total = 0;
    for (const auto& w : wd.weights) total += w.space.dim();
    CHECK(total == 8);
    auto zero = wd.find(Vec{0, 0});
    REQUIRE(zero);
    CHECK(wd.weights[*zero].space.dim() == 2);
}

TEST_CASE("non-toral subspace is rejected") {
    SCAlgebra a = classical('A', 1);
    CHECK_THROWS_AS(weight_decomposition(a, Subspace::span(3, {unit_vec(3, 0)})), std::invalid_argument);
}

TEST_CASE("quotient by the centre") {
    SCAlgebra h = heisenberg(1);
    auto q = quotient(h, centre(h));
    CHECK(q.algebra.dim() == 2);
    CHECK(derived_subalgebra(q.algebra).dim() == 0);
    CHECK_THROWS_AS(quotient(h, Subspace::span(3, {unit_vec(3, 0)})), std::invalid_argument);
}

TEST_CASE("Killing form of sl2 is invariant and nondegenerate") {
    SCAlgebra a = classical('A', 1);
    Matrix k = killing_form(a);
    CHECK(is_invariant_form(a, k));
    CHECK(determinant(k) != 0);
    CHECK(invariant_forms(a).dim() == 1);
}

TEST_CASE("multiplication closure") {
    CHECK(mult_closure(classical('A', 1)).size() == 9);
    CHECK(mult_closure(heisenberg(1)).size() == 3);
}

TEST_CASE("invariant forms of heisenberg(1)") {
    CHECK(invariant_forms(heisenberg(1)).dim() == 3);
}
