#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>

#include "ribbon/laurent.hpp"

using namespace ribbon;

namespace {
LaurentPolynomial from(std::initializer_list<std::pair<int, std::int64_t>> ts,
                       char var = 't', int den = 1) {
    LaurentPolynomial p(var, den);
    for (auto [e, c] : ts) p.add_term(e, c);
    return p;
}
}  // namespace

TEST_CASE("constructing and querying terms") {
    auto p = from({{1, 2}, {-1, 2}, {0, -5}});
    CHECK(p.coeff(1) == 2);
    CHECK(p.coeff(0) == -5);
    CHECK(p.coeff(7) == 0);
    CHECK(p.min_exp() == -1);
    CHECK(p.max_exp() == 1);
    p.add_term(1, -2);  // cancels to zero and is dropped
    CHECK(p.coeff(1) == 0);
    CHECK(p.term_count() == 2);
}

TEST_CASE("arithmetic is exact") {
    auto a = from({{0, 1}, {1, 1}});          // 1 + t
    auto b = from({{0, 1}, {1, -1}});         // 1 - t
    CHECK(a * b == from({{0, 1}, {2, -1}}));  // 1 - t^2
    CHECK(a + b == from({{0, 2}}));
    CHECK(a - a == LaurentPolynomial('t', 1));
    CHECK((-a) == from({{0, -1}, {1, -1}}));
}

TEST_CASE("mirror, shift, palindrome, evaluation") {
    auto tre = from({{1, 1}, {0, -1}, {-1, 1}});  // t - 1 + 1/t
    CHECK(tre.mirrored() == tre);
    CHECK(tre.is_palindromic());
    CHECK(tre.eval_at_one() == 1);
    CHECK(tre.eval_at_minus_one() == -3);
    CHECK(tre.shifted(2) == from({{3, 1}, {2, -1}, {1, 1}}));
    auto skew = from({{2, 1}, {0, 3}});
    CHECK_FALSE(skew.is_palindromic());
}

TEST_CASE("exact division") {
    auto delta = from({{2, -1}, {-2, -1}}, 'A');  // -A^2 - A^-2
    auto prod = delta * delta * from({{3, 5}, {0, -1}}, 'A');
    CHECK(exact_div(prod, delta) == delta * from({{3, 5}, {0, -1}}, 'A'));
    CHECK_THROWS_AS(exact_div(from({{0, 1}, {1, 1}}, 'A'), delta), StructuralError);
    CHECK_THROWS_AS(exact_div(from({{0, 3}}, 'A'), from({{0, 2}}, 'A')), StructuralError);
}

TEST_CASE("canonical text form") {
    CHECK(from({{-4, -1}, {-3, 1}, {-1, 1}}).str() == "-t^-4 + t^-3 + t^-1");
    CHECK(from({{1, -1}, {-1, -1}}, 't', 2).str() == "-t^-1/2 - t^1/2");
    CHECK(from({{0, -7}, {2, 2}}).str() == "-7 + 2*t^2");
    CHECK(from({{1, 1}}).str() == "t");
    CHECK(LaurentPolynomial('t', 1).str() == "0");
}

TEST_CASE("json triples round trip") {
    auto v = from({{1, -1}, {-1, -1}, {4, 3}}, 't', 2);
    auto rows = v.triples();
    CHECK(rows.size() == 3);
    CHECK(rows[0] == std::array<std::int64_t, 3>{-1, 2, -1});
    CHECK(rows[2] == std::array<std::int64_t, 3>{2, 1, 3});
    CHECK(LaurentPolynomial::from_triples('t', rows) == v);
}

TEST_CASE("grid changes") {
    auto knot_jones = from({{-8, 1}, {-6, 1}}, 't', 2);  // even half-steps
    auto on_int = knot_jones.with_unit_den(1);
    CHECK(on_int.coeff(-4) == 1);
    CHECK(on_int.coeff(-3) == 1);
    auto link_jones = from({{1, -1}, {-1, -1}}, 't', 2);
    CHECK_THROWS_AS(link_jones.with_unit_den(1), StructuralError);
    CHECK_THROWS_AS(link_jones.eval_at_minus_one(), ContractError);
}

TEST_CASE("overflow is detected, not wrapped") {
    auto big = from({{0, std::numeric_limits<std::int64_t>::max()}});
    CHECK_THROWS_AS(big + big, OverflowError);
    CHECK_THROWS_AS(big * from({{0, 2}}), OverflowError);
}

TEST_CASE("mixed grids are rejected") {
    auto a = from({{0, 1}, {1, 1}}, 't', 1);
    auto b = from({{0, 1}, {1, 1}}, 't', 2);
    CHECK_THROWS_AS(a + b, ContractError);
    CHECK_THROWS_AS(a * b, ContractError);
}
