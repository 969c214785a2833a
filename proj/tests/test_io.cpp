#include "centroidkit/builders.hpp"
#include "centroidkit/io.hpp"

#include <doctest.h>

using namespace ck;

TEST_CASE("algebra JSON round trip") {
    for (const SCAlgebra& a : {heisenberg(2), oscillator(), classical('B', 2)}) {
        Json j = algebra_to_json(a);
        SCAlgebra b = algebra_from_json(j);
        CHECK(a == b);
        CHECK(dump_canonical(algebra_to_json(b)) == dump_canonical(j));
    }
}

TEST_CASE("associative JSON round trip") {
    AssocTable t = group_algebra({2, 2});
    Json j = assoc_to_json(t);
    CHECK(is_assoc_document(j));
    AssocTable u = assoc_from_json(j);
    CHECK(u.basis == t.basis);
    CHECK(u.products == t.products);
}

TEST_CASE("malformed documents are rejected") {
    Json j = algebra_to_json(heisenberg(1));
    Json extra = j;
    extra["surprise"] = 1;
    CHECK_THROWS_AS(algebra_from_json(extra), ParseError);
    Json bad_rat = j;
    bad_rat["brackets"][0]["terms"][0]["c"] = "1/0";
    CHECK_THROWS_AS(algebra_from_json(bad_rat), ParseError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("cocycle and loop element round trip") {
    Cocycle s;
    s.coeff_dim = 2;
    s.set(0, 2, Vec{1, Rational(-1, 2)});
    CHECK(cocycle_from_json(cocycle_to_json(s), 3) == s);
    LoopElement x = LoopElement::monomial(3, 1, -2, 5) + LoopElement::central(3, 3);
    CHECK(loop_element_from_json(loop_element_to_json(x), 3) == x);
}
