#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <k3hilb/cone.hpp>

#include "oracles.hpp"

using namespace k3hilb;
using namespace k3hilb::cone;

TEST_CASE("movable_case examples")
{
    CHECK(movable_case(1, 2).tag == Tag::A);
    CHECK_FALSE(movable_case(1, 2).ray.has_value());

    const ConeCase b = movable_case(6, 8);
    CHECK(b.tag == Tag::B);
    CHECK(b.ray == lattice::DivisorClass{7, -6, 6, 8});
    CHECK(b.pell == pell::PellSolution{1, 1});

    const ConeCase c = movable_case(6, 3);
    CHECK(c.tag == Tag::C);
    CHECK(c.ray == lattice::DivisorClass{7, -12, 6, 3});
    CHECK(c.pell == pell::PellSolution{7, 2});

    CHECK_THROWS_AS(movable_case(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(movable_case(3, 1), std::invalid_argument);
}

TEST_CASE("check_primitive_case_b examples")
{
    CHECK(check_primitive_case_b(6, 8, {1, 1}));
    CHECK(check_primitive_case_b(2, 2, {3, 2}));
    CHECK_THROWS_AS(check_primitive_case_b(6, 8, {2, 2}), pell::NotASolution);
}

TEST_CASE("ray_q_norm examples")
{
    CHECK(ray_q_norm(movable_case(6, 8), 6, 8) == 84);
    CHECK(ray_q_norm(movable_case(6, 3), 6, 3) == 12);
    // Ray 3 Ht - 4 B: 2*2*9 - 2*1*16 = 4 = 2d(n-1).
    CHECK(ray_q_norm(movable_case(2, 2), 2, 2) == 4);
    CHECK_THROWS_AS(ray_q_norm(movable_case(1, 2), 1, 2), NoStoredRay);
    CHECK_THROWS_AS(ray_q_norm(movable_case(6, 8), 6, 9), lattice::ParameterMismatch);
}

TEST_CASE("trichotomy is exhaustive and consistent on 1..50 x 2..50")
{
    for (std::int64_t d = 1; d <= 50; ++d) {
        for (std::int64_t n = 2; n <= 50; ++n) {
            const ConeCase c = movable_case(d, n);
            const bool square = oracle::is_square64(d * (n - 1));
            CHECK((c.tag == Tag::A) == square);
            switch (c.tag) {
            case Tag::A:
                CHECK_FALSE(c.ray.has_value());
                CHECK_FALSE(c.pell.has_value());
                break;
            case Tag::B:
                REQUIRE(c.pell.has_value());
                CHECK(pell::PellProblem{n - 1, d}.satisfied_by(*c.pell));
                CHECK(c.ray->a == c.pell->x * (n - 1));
                CHECK(c.ray->b == -c.pell->y * d);
                CHECK(lattice::is_primitive(*c.ray));
                CHECK(check_primitive_case_b(d, n, *c.pell));
                CHECK(ray_q_norm(c, d, n) == 2 * d * (n - 1));
                break;
            case Tag::C:
                REQUIRE(c.pell.has_value());
                CHECK_FALSE(pell::solve_case_b(n, d).has_value());
                CHECK(pell::PellProblem{1, d * (n - 1)}.satisfied_by(*c.pell));
                CHECK(c.ray->a == c.pell->x);
                CHECK(c.ray->b == -c.pell->y * d);
                CHECK(lattice::is_primitive(*c.ray));
                CHECK(ray_q_norm(c, d, n) == 2 * d);
                break;
            }
        }
    }
}

TEST_CASE("tag string round trip")
{
    for (Tag t : {Tag::A, Tag::B, Tag::C}) {
        CHECK(tag_from_string(to_string(t)) == t);
    }
    CHECK_THROWS_AS(tag_from_string("D"), std::invalid_argument);
}
