#include "fuchsian/exactalg.hpp"

#include <doctest.h>

#include <random>

using namespace fuchsian;

namespace {

Rational random_rational(std::mt19937& rng, int span = 9)
{
    std::uniform_int_distribution<int> num(-span, span), den(1, span);
    return make_rational(num(rng), den(rng));
}

Poly random_poly(std::mt19937& rng, int degree)
{
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i)
        c.push_back(random_rational(rng));
    if (c.back() == 0)
        c.back() = 1;
    return Poly(c);
}

}  // namespace

TEST_CASE("rationals are canonical and parse strictly")
{
    CHECK(make_rational(6, -4) == Rational(-3, 2));
    CHECK(make_rational(6, -4).get_den() == 2);
    CHECK(to_string(make_rational(10, 5)) == "2");
    CHECK(to_string(Rational(-7, 3)) == "-7/3");
    CHECK(parse_rational("-12/8") == Rational(-3, 2));
    CHECK(parse_rational(" 5 ") == 5);
    CHECK_THROWS_AS(parse_rational("0.5"), AlgebraError);
    CHECK_THROWS_AS(parse_rational("1e3"), AlgebraError);
    CHECK_THROWS_AS(parse_rational("1/0"), AlgebraError);
    CHECK_THROWS_AS(make_rational(1, 0), AlgebraError);
    CHECK(floor(Rational(-1, 2)) == -1);
    CHECK(floor(Rational(7, 2)) == 3);
    CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
    CHECK_FALSE(exact_sqrt(Rational(-1)).has_value());
}

TEST_CASE("polynomial arithmetic")
{
    Poly p{1, 2, 1};  // (y+1)^2
    CHECK(p.degree() == 2);
    CHECK(Poly().degree() == -1);
    CHECK(Poly{0, 0}.is_zero());
    CHECK(p.eval(Rational(2)) == 9);
    CHECK(p.derivative() == Poly{2, 2});
    CHECK(p.shift(Rational(-1)) == Poly::monomial(1, 2));
    CHECK(p.scale_argument(Rational(2)) == Poly{1, 4, 4});
    CHECK(p.reversed(3) == Poly{0, 1, 2, 1});
    CHECK(Poly{1, 1}.compose(Poly{0, 0, 1}) == Poly{1, 0, 1});
    CHECK(pow(Poly::linear(1), 3) == Poly{-1, 3, -3, 1});
    CHECK(gcd(p, Poly{-1, 0, 1}) == Poly{1, 1});
    CHECK(gcd(Poly(), Poly()).is_zero());
    CHECK(Poly{Rational(1, 2), Rational(1, 3)}.primitive_multiplier() == 6);
    CHECK_THROWS_AS(divmod(p, Poly()), AlgebraError);
    CHECK(Poly{-1, 0, 1}.to_string() == "y^2 - 1");
}

TEST_CASE("division with remainder reconstructs the dividend")
{
    std::mt19937 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        Poly a = random_poly(rng, 6), b = random_poly(rng, 3);
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("rational functions stay reduced with monic denominators")
{
    RatFunc f(Poly{-1, 0, 1}, Poly{2, 2});  // (y^2-1)/(2y+2) = (y-1)/2
    CHECK(f.is_polynomial());
    CHECK(f == RatFunc(Poly{Rational(-1, 2), Rational(1, 2)}));
    RatFunc g(Poly{1}, Poly{0, 3});
    CHECK(g.den() == Poly{0, 1});
    CHECK(g.num() == Poly{Rational(1, 3)});
    CHECK(g.order_at_infinity() == 1);
    CHECK(RatFunc().order_at_infinity() == INT_MAX);
    CHECK(g.derivative() == RatFunc(Poly{Rational(-1, 3)}, Poly{0, 0, 1}));
    CHECK_THROWS_AS(RatFunc(Poly{1}, Poly()), AlgebraError);
    CHECK_THROWS_AS(RatFunc().inverse(), AlgebraError);

    std::mt19937 rng(2);
    for (int trial = 0; trial < 40; ++trial) {
        RatFunc a(random_poly(rng, 3), random_poly(rng, 2));
        RatFunc b(random_poly(rng, 2), random_poly(rng, 3));
        CHECK((a * b) / b == a);
        CHECK((a + b) - b == a);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
        Rational c = random_rational(rng);
        if (c != 0)
            CHECK(a.scale_argument(c).scale_argument(1 / c) == a);
        CHECK(a.shift(c).shift(-c) == a);
    }
}

TEST_CASE("rational roots and squarefree parts")
{
    Poly p = pow(Poly::linear(Rational(1, 2)), 2) * Poly::linear(-3) * Poly{1, 0, 1};
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == -3);
    CHECK(roots[1] == Rational(1, 2));
    auto f = squarefree_and_roots(p);
    CHECK_FALSE(f.splits());
    CHECK(f.roots.size() == 2);
    CHECK(f.roots[1].multiplicity == 2);
    auto sq = squarefree_decomposition(pow(Poly{0, 1}, 3) * Poly{1, 1});
    REQUIRE(sq.size() == 2);
    CHECK(sq[1].multiplicity == 3);
    CHECK(root_multiplicity(p, Rational(1, 2)) == 2);
    CHECK(root_multiplicity(p, Rational(7)) == 0);
}

TEST_CASE("partial fractions reconstruct and expose Laurent data")
{
    // 1/(y^2 (y-1))
    RatFunc f(Poly{1}, Poly{0, 0, -1, 1});
    std::vector<Rational> poles{0, 1};
    auto pf = partial_fractions(f, poles);
    CHECK(pf.reconstruct() == f);
    CHECK(pf.coefficient(0, 2) == -1);
    CHECK(pf.coefficient(0, 1) == -1);
    CHECK(pf.coefficient(1, 1) == 1);
    CHECK(pf.coefficient(1, 3) == 0);
    std::vector<Rational> too_few{0};
    CHECK_THROWS_AS(partial_fractions(f, too_few), AlgebraError);

    auto at0 = laurent_at(f, 0, 2);
    CHECK(at0.valuation() == -2);
    CHECK(at0.coeff(-2) == -1);
    CHECK(at0.coeff(1) == -1);
    auto inf = laurent_at_infinity(f, 6);
    CHECK(inf.valuation() == 3);
    CHECK(inf.coeff(4) == 1);
}

TEST_CASE("linear algebra")
{
    RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(rank(m, 3) == 2);
    auto k = kernel_basis(m, 3);
    REQUIRE(k.size() == 1);
    for (const auto& row : m) {
        Rational s = 0;
        for (int j = 0; j < 3; ++j)
            s += row[j] * k[0][j];
        CHECK(s == 0);
    }
    CHECK(solve_linear(m, {1, 2, 0}, 3).has_value());
    CHECK_FALSE(solve_linear(m, {1, 3, 0}, 3).has_value());
}

TEST_CASE("truncated series track precision")
{
    auto t = RationalSeries::variable(8);
    auto one = RationalSeries::constant(1, 8);
    auto geo = (one - t).inverse();
    for (int k = 0; k < 8; ++k)
        CHECK(geo.coeff(k) == 1);
    CHECK_THROWS_AS(geo.coeff(8), TruncationError);
    auto sq = geo * geo;
    CHECK(sq.coeff(5) == 6);
    CHECK(sq.precision() == 8);
    CHECK(geo.derivative().precision() == 7);
    CHECK(geo.substitute_power(2).coeff(4) == 1);
    CHECK(geo.substitute_power(2).coeff(3) == 0);
    CHECK(t.pow(3).coeff(3) == 1);
    // 1/(1-t) composed with t/(1+t) is 1 + t
    auto g = t * (one + t).inverse();
    auto h = geo.compose(g);
    CHECK(h.coeff(0) == 1);
    CHECK(h.coeff(1) == 1);
    for (int k = 2; k < h.precision(); ++k)
        CHECK(h.coeff(k) == 0);
    CHECK_THROWS_AS(RationalSeries::zero(5).inverse(), TruncationError);
}

TEST_CASE("expression parser")
{
    CHECK(parse_ratfunc("0").is_zero());
    CHECK(parse_ratfunc("y^2 - 1") == RatFunc(Poly{-1, 0, 1}));
    CHECK(parse_ratfunc("-1/(4y^2)") == RatFunc(Poly{Rational(-1, 4)}, Poly{0, 0, 1}));
    CHECK(parse_ratfunc("-y^2") == RatFunc(Poly{0, 0, -1}));
    CHECK(parse_ratfunc("2(y-1)(y+1)") == RatFunc(Poly{-2, 0, 2}));
    CHECK(parse_ratfunc("y^-1") == RatFunc(Poly{1}, Poly{0, 1}));
    CHECK(parse_ratfunc("(y^2 - 1968y + 2654208)/(y^2(y-1728)^2)") ==
          RatFunc(Poly{2654208, -1968, 1}, Poly{0, 0, 2985984, -3456, 1}));
    CHECK_THROWS_AS(parse_ratfunc("0.5"), AlgebraError);
    CHECK_THROWS_AS(parse_ratfunc("1/(y-y)"), AlgebraError);
    CHECK_THROWS_AS(parse_ratfunc("x + 1"), AlgebraError);
    CHECK_THROWS_AS(parse_ratfunc("(y"), AlgebraError);
    CHECK_THROWS_AS(parse_ratfunc(""), AlgebraError);
}
