#include "doctest.h"

#include <limits>

#include "semires/oracle.hpp"
#include "semires/scalar.hpp"
#include "support.hpp"

using namespace semires;
using namespace semires::test;

namespace {

std::vector<Scalar> small_grid()
{
    return oracle::Grid::range(-4, 4).values();
}

}  // namespace

TEST_CASE("scalar order puts -inf below every finite value below +inf")
{
    CHECK(NEG < S(std::numeric_limits<Scalar::value_type>::min()));
    CHECK(S(std::numeric_limits<Scalar::value_type>::max()) < POS);
    CHECK(S(-3) < S(2));
    CHECK_THROWS_AS(POS.value(), DomainError);
}

TEST_CASE("semiring constants")
{
    CHECK(zero(MP) == NEG);
    CHECK(one(MP) == S(0));
    CHECK(top(MP) == POS);
    CHECK(zero(MM) == NEG);
    CHECK(one(MM) == POS);
    CHECK(top(MM) == POS);
}

TEST_CASE("add")
{
    CHECK(add(MP, S(3), S(5)) == S(5));
    CHECK(add(MP, S(5), S(5)) == S(5));
    for (auto tag : both_tags) {
        for (Scalar x : small_grid()) {
            CHECK(add(tag, NEG, x) == x);
        }
    }
}

TEST_CASE("mul")
{
    CHECK(mul(MP, S(3), S(5)) == S(8));
    CHECK(mul(MP, POS, NEG) == NEG);
    CHECK(mul(MP, NEG, POS) == NEG);
    CHECK(mul(MP, POS, S(-7)) == POS);
    CHECK(mul(MM, S(3), S(5)) == S(3));
    CHECK(mul(MM, POS, S(4)) == S(4));

    SUBCASE("overflow is reported")
    {
        const auto big = std::numeric_limits<Scalar::value_type>::max();
        CHECK_THROWS_AS(mul(MP, S(big), S(1)), OverflowError);
        CHECK_THROWS_AS(mul(MP, S(-big), S(-2)), OverflowError);
        CHECK(mul(MM, S(big), S(1)) == S(1));
    }
}

TEST_CASE("meet and leq")
{
    for (auto tag : both_tags) {
        CHECK(meet(tag, S(3), S(5)) == S(3));
        CHECK(leq(tag, S(3), S(5)));
        CHECK_FALSE(leq(tag, S(5), S(3)));
        for (Scalar x : small_grid()) {
            CHECK(meet(tag, x, POS) == x);
            CHECK(meet(tag, NEG, x) == NEG);
            CHECK(leq(tag, NEG, x));
        }
    }
}

TEST_CASE("left and right residual examples")
{
    CHECK(left_residual(MP, S(1), S(8)) == S(7));
    CHECK(right_residual(MP, S(8), S(1)) == S(7));
    CHECK(left_residual(MP, NEG, S(3)) == POS);
    CHECK(left_residual(MP, POS, S(3)) == NEG);
    CHECK(left_residual(MP, POS, POS) == POS);
    CHECK(left_residual(MP, S(2), NEG) == NEG);

    CHECK(left_residual(MM, S(3), S(1)) == S(1));
    CHECK(left_residual(MM, S(1), S(8)) == POS);
    CHECK(right_residual(MM, S(1), S(3)) == S(1));

    for (auto tag : both_tags) {
        for (Scalar a : small_grid()) {
            CHECK(left_residual(tag, a, POS) == POS);
            CHECK(right_residual(tag, POS, a) == POS);
        }
    }

    const auto big = std::numeric_limits<Scalar::value_type>::max();
    CHECK_THROWS_AS(left_residual(MP, S(-2), S(big)), OverflowError);
}

TEST_CASE("residual equals brute-force greatest solution on the standard grid")
{
    const auto grid = oracle::Grid::standard();
    for (auto tag : both_tags) {
        for (Scalar a : grid.values()) {
            for (Scalar b : grid.values()) {
                const Scalar expected = oracle::brute_greatest_scalar(tag, a, b, grid);
                const Scalar r = left_residual(tag, a, b);
                // The analytic value can fall outside the grid (e.g. 10 - (-10)).
                if (grid.contains(r)) {
                    CHECK_MESSAGE(r == expected, to_string(tag), " a=", to_string(a), " b=", to_string(b));
                } else {
                    CHECK(expected < r);
                }
                CHECK(right_residual(tag, b, a) == r);
            }
        }
    }
}

TEST_CASE("semiring axioms and Galois inequalities on a grid")
{
    const auto g = small_grid();
    for (auto tag : both_tags) {
        for (Scalar a : g) {
            CHECK(mul(tag, a, one(tag)) == a);
            CHECK(mul(tag, a, zero(tag)) == zero(tag));
            for (Scalar b : g) {
                CHECK(add(tag, a, b) == add(tag, b, a));
                CHECK(leq(tag, a, b) == (a <= b));
                const Scalar r = left_residual(tag, a, b);
                CHECK(leq(tag, mul(tag, a, r), b));
                for (Scalar c : g) {
                    CHECK(add(tag, add(tag, a, b), c) == add(tag, a, add(tag, b, c)));
                    CHECK(mul(tag, mul(tag, a, b), c) == mul(tag, a, mul(tag, b, c)));
                    CHECK(mul(tag, a, add(tag, b, c)) == add(tag, mul(tag, a, b), mul(tag, a, c)));
                    CHECK(leq(tag, c, left_residual(tag, a, mul(tag, a, c))));
                    if (leq(tag, a, c)) {
                        // Antitone in the divisor, isotone in the dividend.
                        CHECK(leq(tag, left_residual(tag, c, b), left_residual(tag, a, b)));
                        CHECK(leq(tag, left_residual(tag, b, a), left_residual(tag, b, c)));
                    }
                }
            }
        }
    }
}

TEST_CASE("scalar and tag text encoding")
{
    CHECK(parse_scalar("-inf") == NEG);
    CHECK(parse_scalar("+inf") == POS);
    CHECK(parse_scalar("42") == S(42));
    CHECK(parse_scalar("-7") == S(-7));
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
    CHECK_THROWS_AS(parse_scalar("inf"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1.5"), ParseError);
    CHECK_THROWS_AS(parse_scalar("+-3"), ParseError);
    CHECK_THROWS_AS(parse_scalar("99999999999999999999"), ParseError);
    for (Scalar s : small_grid()) {
        CHECK(parse_scalar(to_string(s)) == s);
    }
    CHECK(parse_tag("maxplus") == MP);
    CHECK(parse_tag("maxmin") == MM);
    CHECK(to_string(MM) == "maxmin");
    CHECK_THROWS_AS(parse_tag("minplus"), ParseError);
    CHECK_THROWS_AS(require_same_tag(MP, MM), TagMismatchError);
}
