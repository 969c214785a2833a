#include "centroidkit/builders.hpp"
#include "centroidkit/rootgraded.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace ck;

TEST_CASE("isotypic decomposition of sl3 over M2") {
    SCAlgebra a = sl_n_over(matrix_assoc(2), 3);
    CHECK(a.dim() == 35);
    RootGradedModel m = isotypic_decomposition(a, grading_generators(a));
    REQUIRE(m.adjoint_block);
    REQUIRE(m.trivial_block);
    CHECK(m.blocks[*m.adjoint_block].module_dim == 8);
    CHECK(m.blocks[*m.adjoint_block].multiplicity() == 4);
    CHECK(m.blocks[*m.trivial_block].multiplicity() == 3);
    Matrix sum(a.dim(), a.dim());
    for (const auto& p : m.projections) {
        CHECK(p * p == p);
        sum = sum + p;
    }
    CHECK(sum == Matrix::identity(a.dim()));
    CHECK(m.block_scalar);
    auto r = verify_cent_rg(m);
    CHECK(r.applicable);
    CHECK(r.passed());
    CHECK(r.centroid_dim == 1);
}

TEST_CASE("coordinate centre of sl3 over truncated polynomials") {
    SCAlgebra a = sl_n_over(truncated_poly(2), 3);
    RootGradedModel m = isotypic_decomposition(a, grading_generators(a));
    auto r = verify_cent_rg(m);
    CHECK(r.passed());
    CHECK(r.coord_dim == 2);
    CHECK(r.centroid_dim == 2);
    CHECK(r.centroid_dim == oracle::centroid_dim(oracle::table_of(a)));
}

TEST_CASE("grading generators of sl2") {
    SCAlgebra a = classical('A', 1);
    auto g = grading_generators(a);
    REQUIRE(g.size() == 1);
    CHECK(g[0].first == unit_vec(3, a.index_of("e")));
    CHECK(g[0].second == unit_vec(3, a.index_of("f")));
}
