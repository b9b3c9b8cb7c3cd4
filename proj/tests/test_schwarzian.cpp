#include "fuchsian/qmodular.hpp"
#include "fuchsian/schwarzian.hpp"
#include "fuchsian/schwarzian_json.hpp"

#include <doctest.h>

#include <random>

using namespace fuchsian;
using namespace fuchsian::schwarzian;

namespace {

RatFunc rf(const std::string& s) { return parse_ratfunc(s); }

// Unit-leading series t + c_2 t^2 + ... with small random coefficients.
RationalSeries random_unit_series(std::mt19937& rng, int prec)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    std::vector<Rational> c{0, 1};
    for (int k = 2; k < prec; ++k)
        c.push_back(make_rational(num(rng), den(rng)));
    return RationalSeries::from_coefficients(c, prec);
}

// Evaluates a rational function on a series by Horner's rule.
RationalSeries eval_ratfunc(const RatFunc& f, const RationalSeries& y)
{
    return qmodular::eval_poly(f.num(), y) / qmodular::eval_poly(f.den(), y);
}

}  // namespace

TEST_CASE("signatures")
{
    auto s = Signature::parse("7,3,2");
    CHECK(s.to_string() == "2,3,7");
    CHECK(s.is_hyperbolic());
    CHECK(Signature::parse("2,3,inf").orders()[2].is_cusp());
    CHECK(Signature::parse("inf,inf,inf").is_hyperbolic());
    CHECK_THROWS_AS(Signature::parse("2,2,2"), InvalidSignature);
    CHECK_THROWS_AS(Signature::parse("2,3,6"), InvalidSignature);
    CHECK_THROWS_AS(Signature::parse("2,4,4"), InvalidSignature);
    CHECK_THROWS_AS(Signature::parse("1,3,7"), InvalidSignature);
    CHECK_THROWS_AS(Signature::parse("2,3"), InvalidSignature);
    CHECK_THROWS_AS(Signature::parse("2,x,7"), InvalidSignature);
    CHECK(Order::parse("inf").angle() == 0);
    CHECK(Order::finite(5).angle() == Rational(1, 5));
    CHECK(Order::finite(9) < Order::cusp());
}

TEST_CASE("hyperbolic triangle enumeration matches a direct count")
{
    int expected = 0;
    for (int k = 2; k <= 10; ++k)
        for (int l = k; l <= 10; ++l) {
            for (int m = l; m <= 10; ++m)
                if (Rational(1, k) + Rational(1, l) + Rational(1, m) < 1)
                    ++expected;
            if (k + l > 4)
                ++expected;  // (k, l, inf) except (2, 2, inf)
        }
    expected += 9 + 1;  // (k, inf, inf) for k = 2..10, and (inf, inf, inf)
    auto sigs = hyperbolic_triangles(10);
    CHECK(static_cast<int>(sigs.size()) == expected);
    CHECK(sigs.size() >= 47);
    for (const auto& s : sigs)
        CHECK(s.is_hyperbolic());
}

TEST_CASE("triangle and classical equations in closed form")
{
    CHECK(triangle_R(Signature::parse("2,3,inf")) == rf("(36y^2 - 41y + 32)/(36 y^2 (y-1)^2)"));
    CHECK(classical_j_R() == rf("(y^2 - 1968y + 2654208)/(y^2 (y-1728)^2)"));
    CHECK(rescale_hauptmodul(triangle_R(Signature::parse("2,3,inf")), 1728) == classical_j_R());
    CHECK(hypergeometric_R(Rational(1, 3), Rational(1, 2), 0) == triangle_R(Signature::parse("2,3,inf")));

    auto p = TriangleParams::from_signature(Signature::parse("2,3,7"));
    CHECK(p.lambda == Rational(1, 3));
    CHECK(p.mu == Rational(1, 2));
    CHECK(p.nu == Rational(1, 7));
    CHECK(1 - p.gamma == p.lambda);
    CHECK(p.gamma - p.alpha - p.beta == p.mu);
    CHECK(p.alpha - p.beta == p.nu);

    auto j = SchwarzianEquation::classical_j();
    CHECK(j.signature().to_string() == "2,3,inf");
    CHECK(j.singular_point_count() == 3);
    CHECK(SchwarzianEquation::from_triangle(Signature::parse("2,3,inf")).rescaled(1728).R() == j.R());
    CHECK(to_normal_form(j) == Rational(-1, 4) * j.R());
    CHECK(to_riccati(j) == Rational(1, 4) * j.R());
}

TEST_CASE("rescaling composes multiplicatively")
{
    std::mt19937 rng(3);
    auto R = triangle_R(Signature::parse("2,4,5"));
    for (int trial = 0; trial < 10; ++trial) {
        Rational a = make_rational(rng() % 50 + 1, rng() % 7 + 1), b = make_rational(rng() % 9 + 1, rng() % 11 + 1);
        CHECK(rescale_hauptmodul(rescale_hauptmodul(R, a), b) == rescale_hauptmodul(R, a * b));
    }
    CHECK_THROWS(rescale_hauptmodul(R, 0));
}

TEST_CASE("local model: y = t^(1/alpha) solves R = (1 - alpha^2)/y^2")
{
    for (int m : {2, 3, 5, 7}) {
        const int prec = 12;
        auto y = RationalSeries::variable(prec).pow(m);
        Rational alpha(1, m);
        RatFunc R = RatFunc(Poly{1 - alpha * alpha}, Poly::monomial(1, 2));
        auto y1 = y.derivative();
        auto residual = schwarzian_of_series(y) * Rational(2) + y1 * y1 * eval_ratfunc(R, y);
        CHECK(residual.is_zero());
    }
}

TEST_CASE("Schwarzian calculus on random series")
{
    std::mt19937 rng(4);
    const int prec = 10;
    for (int trial = 0; trial < 100; ++trial) {
        auto f = random_unit_series(rng, prec);
        auto g = random_unit_series(rng, prec);
        auto lhs = schwarzian_of_series(f.compose(g));
        auto g1 = g.derivative();
        auto rhs = schwarzian_of_series(f).compose(g) * g1 * g1 + schwarzian_of_series(g);
        CHECK(agree(lhs, rhs));
        CHECK(agree(schwarzian_of_series(f), schwarzian_of_series_y3(f)));
    }
}

TEST_CASE("Schwarzian of Moebius maps vanishes")
{
    std::mt19937 rng(5);
    const int prec = 14;
    auto t = RationalSeries::variable(prec);
    auto one = RationalSeries::constant(1, prec);
    for (int trial = 0; trial < 20; ++trial) {
        Rational a = make_rational(rng() % 9 + 1, 1), b = make_rational(int(rng() % 9) - 4, 1);
        Rational c = make_rational(int(rng() % 9) - 4, 1), d = make_rational(rng() % 5 + 1, 1);
        if (a * d - b * c == 0)
            continue;
        auto m = (t * a + one * b) / (t * c + one * d);
        CHECK(schwarzian_of_series(m).is_zero());
        CHECK(schwarzian_of_series_y3(m).is_zero());
    }
    CHECK_THROWS_AS(schwarzian_of_series(RationalSeries::constant(3, 5)), TruncationError);
}

TEST_CASE("Venkov data validation")
{
    std::vector<ProjectivePoint> pts{Rational(0), Rational(1), ProjectivePoint::infinity()};
    auto eq = SchwarzianEquation::from_data(pts, {Rational(1, 3), Rational(1, 2), 0},
                                            {Rational(23, 36), Rational(-23, 36), 0});
    CHECK(eq.R() == triangle_R(Signature::parse("2,3,inf")));
    CHECK_THROWS_AS(SchwarzianEquation::from_data(pts, {Rational(1, 3), Rational(1, 2), 0},
                                                  {Rational(1), Rational(-23, 36), 0}),
                    InvalidEquation);
    CHECK_THROWS_AS(SchwarzianEquation::from_data(pts, {Rational(1, 3), Rational(1, 2)}, {0, 0}), InvalidEquation);
}

TEST_CASE("cleared form has degree 2r+2")
{
    auto sigs = hyperbolic_triangles(10);
    for (const auto& s : sigs) {
        auto cf = cleared_polynomial_form(SchwarzianEquation::from_triangle(s));
        CHECK_MESSAGE(cf.total_degree == 8, s.to_string());
    }
    auto j = cleared_polynomial_form(SchwarzianEquation::classical_j());
    CHECK(j.total_degree == 8);
    CHECK(j.affine_degree == 6);
    CHECK(cleared_polynomial_form(SchwarzianEquation::from_triangle(Signature::parse("2,3,inf"))).chart_shift ==
          Rational(-1));
}

TEST_CASE("cleared form of the j equation vanishes on the q-expansion of j")
{
    const int order = 25;
    auto js = qmodular::j_series(order + 10);
    std::array<RationalSeries, 4> jet{js, qmodular::D(js), qmodular::D(qmodular::D(js)),
                                      qmodular::D(qmodular::D(qmodular::D(js)))};
    auto cf = cleared_polynomial_form(SchwarzianEquation::classical_j());
    auto value = cf.affine_poly.evaluate(jet);
    CHECK(value.truncate(order).is_zero());
    CHECK(value.precision() >= order);
}

TEST_CASE("equation JSON round trip")
{
    auto eq = SchwarzianEquation::from_triangle(Signature::parse("3,4,inf"));
    auto doc = equation_json(eq);
    CHECK(equation_from_json(doc).R() == eq.R());
    doc["R"]["num"][0] = "12345";
    CHECK_THROWS(equation_from_json(doc));
}
