#include "centroidkit/builders.hpp"
#include "centroidkit/loopkit.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace ck;


TEST_CASE("loop bracket matches the hand-written affine bracket") {
    LoopAlgebra l = make_loop(classical('A', 1), true, true);
    std::vector<LoopElement> xs;
    for (std::int64_t p = -2; p <= 2; ++p)
        for (std::size_t i = 0; i < 3; ++i) xs.push_back(LoopElement::monomial(3, i, p, p + 2));
    xs.push_back(LoopElement::central(3));
    xs.push_back(LoopElement::degree(3, 3));
    for (const auto& a : xs)
        for (const auto& b : xs) CHECK(oracle::same(oracle::to_affine(loop_bracket(l, a, b)), oracle::affine_bracket(oracle::to_affine(a), oracle::to_affine(b))));
}

TEST_CASE("affine toral corollary") {
    LoopAlgebra l = make_loop(classical('A', 1), true, true);
    auto r = toralcor_check(l, affine_sl2_generators(l), toral_subspace(l.base), 3);
    CHECK(r.hypothesis_i);
    CHECK(r.hypothesis_ii);
    CHECK(r.hypothesis_iii);
    CHECK(r.conclusion);
    CHECK(r.predicted_dim == 2);
    CHECK(r.a_matrix == Matrix::from_rows({{2, -2}, {-2, 2}}, 2));
}

TEST_CASE("membership of t-multiplication on affine sl2") {
    LoopAlgebra l = make_loop(classical('A', 1), true, false);
    LoopCandidate c;
    c.z = {{1, Rational(1)}};
    auto r = centroid_membership(l, c, 3);
    CHECK_FALSE(r.member);
    REQUIRE(r.witness);
    CHECK(r.witness->left != r.witness->right);
    CHECK(to_text(l, r.witness->left) == "h + 8c");
    CHECK(to_text(l, r.witness->right) == "h + 4c");
}

TEST_CASE("identity is a member; centreless loop accepts t-multiplication") {
    LoopAlgebra k = make_loop(classical('A', 1), true, true);
    CHECK(centroid_membership(k, LoopCandidate{}, 3).member);
    LoopAlgebra l = make_loop(classical('A', 1), false, false);
    LoopCandidate c;
    c.z = {{2, Rational(1)}};
    CHECK(centroid_membership(l, c, 3).member);
}

TEST_CASE("window exclusion") {
    LoopAlgebra k = make_loop(classical('A', 1), true, true);
    CHECK(window_component_exclusion(k, 1, 3).excluded);
    CHECK(window_component_exclusion(k, -2, 3).excluded);
    LoopAlgebra l = make_loop(classical('A', 1), false, false);
    auto r = window_component_exclusion(l, 1, 3);
    CHECK_FALSE(r.excluded);
    CHECK(r.solution_dim >= 1);
}

TEST_CASE("twist validation") {
    SCAlgebra g = classical('A', 1);
    Matrix swap = Matrix::from_rows({{0, 0, 1}, {0, -1, 0}, {1, 0, 0}}, 3);
    LoopAlgebra l = make_loop(g, false, false, swap);
    CHECK(l.twist_order == 2);
    CHECK(l.component(0).dim() == 1);
    CHECK(l.component(1).dim() == 2);
    CHECK_THROWS_AS(check_element(l, LoopElement::monomial(3, 1, 0)), std::invalid_argument);
    Matrix bad = Matrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}, 3);
    CHECK_THROWS_AS(make_loop(g, false, false, bad), std::invalid_argument);
}
