#include "fuchsian/bounds.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace fuchsian;
using namespace fuchsian::bounds;

namespace {

// Square-and-multiply with plain BigInt products.
BigInt pow_chain(BigInt base, unsigned long e)
{
    BigInt acc = 1;
    while (e) {
        if (e & 1)
            acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace

TEST_CASE("Andre-Pink bound examples")
{
    CHECK(andre_pink_bound(3, 1, 1) == 2097152);
    CHECK(andre_pink_bound(3, 1, 1) == pow_chain(8, 7));
    BigInt big = andre_pink_bound(3, 2, 1);
    CHECK(big == pow_chain(64, 63));
    CHECK(decimal_digits(big) == 114);
    CHECK(big.get_str().size() == 114);
    CHECK(andre_pink_bound(4, 1, 2) == pow_chain(20, 7));
}

TEST_CASE("Zariski closure bound matches an independent evaluation")
{
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> deg(1, 9), small(1, 3);
    for (int trial = 0; trial < 20; ++trial) {
        ZariskiInput in{deg(rng), deg(rng), small(rng), small(rng)};
        unsigned long two = 1UL << (in.m * in.ell);
        BigInt expected = pow_chain(in.deg_x, static_cast<unsigned long>(in.ell) * two) * pow_chain(in.deg_s, two - 1);
        CAPTURE(in.deg_x);
        CAPTURE(in.deg_s);
        CAPTURE(in.m);
        CAPTURE(in.ell);
        CHECK(zariski_closure_bound(in) == expected);
        double est = zariski_closure_log10(in);
        auto digits = static_cast<double>(decimal_digits(expected));
        CHECK(est >= digits - 1 - 1e-9);
        CHECK(est < digits);
    }
    CHECK(zariski_closure_bound({2, 2, 1, 2}) == 2048);
    CHECK(zariski_closure_bound({1, 1, 3, 3}) == 1);
}

TEST_CASE("bounds grow monotonically")
{
    for (long r = 3; r < 8; ++r) {
        CHECK(andre_pink_bound(r + 1, 1, 1) > andre_pink_bound(r, 1, 1));
        CHECK(andre_pink_bound(r, 1, 2) > andre_pink_bound(r, 1, 1));
        CHECK(andre_pink_bound(r, 2, 1) > andre_pink_bound(r, 1, 1));
    }
    ZariskiInput base{3, 2, 1, 1};
    for (int step = 0; step < 4; ++step) {
        ZariskiInput more_x = base, more_s = base, more_m = base, more_l = base;
        ++more_x.deg_x;
        ++more_s.deg_s;
        ++more_m.m;
        ++more_l.ell;
        CHECK(zariski_closure_bound(more_x) > zariski_closure_bound(base));
        CHECK(zariski_closure_bound(more_s) > zariski_closure_bound(base));
        CHECK(zariski_closure_bound(more_m) > zariski_closure_bound(base));
        CHECK(zariski_closure_bound(more_l) > zariski_closure_bound(base));
        ++base.deg_x;
    }
}

TEST_CASE("invalid and oversized inputs")
{
    CHECK_THROWS_AS(andre_pink_bound(2, 1, 1), BoundError);
    CHECK_THROWS_AS(andre_pink_bound(3, 0, 1), BoundError);
    CHECK_THROWS_AS(andre_pink_bound(3, 1, 0), BoundError);
    CHECK_THROWS_AS(zariski_closure_bound({0, 1, 1, 1}), BoundError);
    CHECK_THROWS_AS(zariski_closure_bound({1, 1, 0, 1}), BoundError);
    CHECK_THROWS_AS(andre_pink_bound(3, 12, 1), BoundError);
    CHECK(andre_pink_log10(3, 12, 1) > kMaxDigits);
    CHECK_THROWS_AS(zariski_closure_bound({2, 2, 40, 2}), BoundError);
}

TEST_CASE("log10 estimates match digit counts")
{
    for (long n = 1; n <= 3; ++n) {
        BigInt v = andre_pink_bound(5, n, 3);
        CHECK(static_cast<std::size_t>(std::floor(andre_pink_log10(5, n, 3))) + 1 == decimal_digits(v));
    }
    CHECK(decimal_digits(BigInt(1)) == 1);
    CHECK(decimal_digits(BigInt(999)) == 3);
    CHECK(decimal_digits(BigInt(1000)) == 4);
}
