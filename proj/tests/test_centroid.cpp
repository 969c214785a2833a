#include "centroidkit/builders.hpp"
#include "centroidkit/centroid.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace ck;

namespace {

oracle::Mat lib_span(const Subspace& s) { return oracle::to_rows(s.basis(), s.ambient_dim()); }

AssocTable sqrt2() { return field_ext(Poly{{Rational(-2), 0, 1}}); }

}  // namespace

TEST_CASE("centroid space equals reference solve") {
    for (const SCAlgebra& a : {heisenberg(1), heisenberg(2), oscillator(), abelian(2), classical('A', 1), classical('A', 2),
                               direct_sum(classical('A', 1), classical('A', 1)), tensor(classical('A', 1), truncated_poly(2))}) {
        auto ref = oracle::centroid(oracle::table_of(a));
        CHECK_MESSAGE(lib_span(centroid_space(a)) == ref, a.name());
    }
}

TEST_CASE("centroid basis has identity and closed products") {
    SCAlgebra a = heisenberg(2);
    CentroidBasis c = centroid(a);
    CHECK(c.maps[c.identity_index] == Matrix::identity(a.dim()));
    for (const auto& x : c.maps) {
        CHECK(is_centroidal(a, x));
        for (const auto& y : c.maps) CHECK(c.coordinates(x * y));
    }
    CHECK(c.commutative);
}

TEST_CASE("centroid of a simple algebra is the scalars") {
    for (const SCAlgebra& a : {classical('A', 3), classical('B', 2), classical('C', 3)}) CHECK(centroid(a).dim() == 1);
}

TEST_CASE("vanishing ideal of the derived algebra of heisenberg") {
    for (std::size_t n = 1; n <= 3; ++n) {
        SCAlgebra h = heisenberg(n);
        auto v = vanishing_ideal(h, derived_subalgebra(h), centroid(h));
        CHECK(v.maps.size() == 2 * n);
        Subspace d = derived_subalgebra(h);
        for (const auto& m : v.maps)
            for (const auto& b : d.basis()) CHECK(is_zero(m * b));
    }
}

TEST_CASE("centroid cap der against reference dimensions") {
    for (const SCAlgebra& a : {heisenberg(1), oscillator(), direct_sum(classical('A', 1), abelian(2))}) {
        auto t = oracle::table_of(a);
        CHECK(centroid_cap_der(a).size() == (a.dim() - oracle::derived_dim(t)) * oracle::centre_dim(t));
    }
}

TEST_CASE("graded centroid of sl2 over a group algebra") {
    SCAlgebra t = tensor(classical('A', 1), group_algebra({3}));
    CentroidBasis c = centroid(t);
    GradedCentroid g = graded_centroid(t, c);
    CHECK(g.total_dim() == 3);
    CHECK(g.support().size() == 3);
    auto rep = division_graded_report(t, g);
    CHECK(rep.division_graded == Verdict::yes);
    CHECK(rep.support_is_subgroup);
    CHECK(rep.twisted_group_ring);
}

TEST_CASE("local analysis") {
    SCAlgebra s = restrict_scalars(classical('A', 1), sqrt2());
    auto la = centroid_local_analysis(s, centroid(s));
    CHECK(la.is_field);
    CHECK(la.radical.empty());
    SCAlgebra d = direct_sum(classical('A', 1), classical('A', 1));
    auto ld = centroid_local_analysis(d, centroid(d));
    CHECK(ld.verdict == "decomposable");
    Matrix sum(d.dim(), d.dim());
    for (const auto& e : ld.idempotents) {
        CHECK(e * e == e);
        sum = sum + e;
    }
    CHECK(sum == Matrix::identity(d.dim()));
}

TEST_CASE("toral centroid agrees with brute force") {
    for (const SCAlgebra& a : {classical('A', 1), classical('A', 2), classical('C', 2), oscillator()}) {
        auto r = toral_centroid(a, toral_subspace(a));
        CHECK_MESSAGE(r.matches_brute_force, a.name());
        CHECK(lib_span(r.basis.span) == oracle::centroid(oracle::table_of(a)));
    }
}

TEST_CASE("evaluation map injectivity") {
    SCAlgebra t = tensor(classical('A', 1), truncated_poly(2));
    CentroidBasis c = centroid(t);
    CHECK(evaluation_map_injective(t, c, unit_vec(t.dim(), 0)));
    CHECK_FALSE(evaluation_map_injective(t, c, unit_vec(t.dim(), 1)));
}
