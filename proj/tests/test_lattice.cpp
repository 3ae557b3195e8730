#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <k3hilb/lattice.hpp>

using namespace k3hilb;
using namespace k3hilb::lattice;

TEST_CASE("mukai_pairing examples")
{
    CHECK(mukai_pairing({0, -1, 0, 6}, {0, -1, 0, 6}) == 12);
    CHECK(mukai_pairing({-1, 0, -7, 6}, {-1, 0, -7, 6}) == -14);
    CHECK(mukai_pairing({0, -1, 0, 6}, {-1, 0, -7, 6}) == 0);
    CHECK_THROWS_AS(mukai_pairing({0, 1, 0, 6}, {0, 1, 0, 5}), ParameterMismatch);
}

TEST_CASE("embed examples")
{
    CHECK(embed(h_tilde(6, 8)) == MukaiVector{0, -1, 0, 6});
    CHECK(embed(half_exceptional(6, 8)) == MukaiVector{-1, 0, -7, 6});
    // -6 B -> (6, 0, -6(1 - 8)) = (6, 0, 42); self-pairing 2*6*49 - 2*6*42 = 84 = q(7 Ht - 6 B).
    CHECK(embed({7, -6, 6, 8}) == MukaiVector{6, -7, 42, 6});
    CHECK(mukai_pairing(embed({7, -6, 6, 8}), embed({7, -6, 6, 8})) == 84);
}

TEST_CASE("bbf examples")
{
    CHECK(bbf_q(h_tilde(6, 8)) == 12);
    CHECK(bbf_q(half_exceptional(6, 8)) == -14);
    CHECK(bbf_q({7, -6, 6, 8}) == 84);
    CHECK_THROWS_AS(bbf_pair(h_tilde(6, 8), h_tilde(6, 9)), ParameterMismatch);
}

TEST_CASE("Ht and B are orthogonal")
{
    for (std::int64_t d = 1; d <= 30; ++d) {
        for (std::int64_t n = 2; n <= 30; ++n) {
            CHECK(bbf_pair(h_tilde(d, n), half_exceptional(d, n)) == 0);
        }
    }
}

TEST_CASE("isometry and bilinearity on random divisors")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> coord(-1000, 1000);
    std::uniform_int_distribution<std::int64_t> dn(1, 100);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::int64_t d = dn(rng);
        const std::int64_t n = dn(rng) + 1;
        const DivisorClass x{coord(rng), coord(rng), d, n};
        const DivisorClass y{coord(rng), coord(rng), d, n};
        CHECK(bbf_q(x) == mukai_pairing(embed(x), embed(x)));
        CHECK(bbf_pair(x, y) == mukai_pairing(embed(x), embed(y)));
        CHECK(bbf_pair(x, y) == bbf_pair(y, x));
        const DivisorClass sum{x.a + y.a, x.b + y.b, d, n};
        CHECK(bbf_q(sum) == bbf_q(x) + 2 * bbf_pair(x, y) + bbf_q(y));
    }
}

TEST_CASE("primitivity")
{
    CHECK(is_primitive({7, -6, 6, 8}));
    CHECK_FALSE(is_primitive({14, -12, 6, 8}));
    CHECK(is_primitive(h_tilde(3, 3)));
}
