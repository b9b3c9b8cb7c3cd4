#include "fuchsian/monodromy.hpp"

#include <doctest.h>

#include <cmath>

using namespace fuchsian;
using namespace fuchsian::monodromy;
namespace sw = fuchsian::schwarzian;

namespace {

RatFunc triangle_r(const char* sig) { return sw::to_normal_form(sw::triangle_R(sw::Signature::parse(sig))); }

const std::vector<Complex> kZeroOne{0.0, 1.0};

PathLoop segment_path(Complex a, Complex b)
{
    PathLoop p;
    p.base = a;
    p.segments.push_back(Segment::line(a, b));
    return p;
}

}  // namespace

TEST_CASE("matrix helpers")
{
    Matrix2C m{{2.0, 1.0, 3.0, 2.0}};
    CHECK(std::abs(m.det() - 1.0) < 1e-15);
    CHECK((m * m.inverse() - Matrix2C::identity()).norm() < 1e-14);
    CHECK(m.trace() == Complex(4.0));
    CHECK(m.norm() == 3.0);
}

TEST_CASE("exact transport for constant coefficients")
{
    const double k = 1.7;
    auto r = [k](Complex) { return Complex(k * k); };
    auto m = integrate_ode_along(r, segment_path(0.0, 1.0), 1e-12);
    CHECK(std::abs(m(0, 0) - std::cosh(k)) < 1e-10);
    CHECK(std::abs(m(0, 1) - std::sinh(k) / k) < 1e-10);
    CHECK(std::abs(m(1, 0) - k * std::sinh(k)) < 1e-10);
    CHECK(std::abs(m(1, 1) - std::cosh(k)) < 1e-10);

    // z'' = -z along the imaginary axis: z = cos(y)
    auto minus = [](Complex) { return Complex(-1.0); };
    auto mi = integrate_ode_along(minus, segment_path(0.0, Complex(0, 2)), 1e-12);
    CHECK(std::abs(mi(0, 0) - std::cos(Complex(0, 2))) < 1e-10);
}

TEST_CASE("standard loops: order and validation")
{
    auto loops = standard_loops(kZeroOne, Complex(0, -1));
    REQUIRE(loops.size() == 2);
    CHECK(std::abs(*loops[0].encircled - 0.0) < 1e-15);
    CHECK(std::abs(*loops[1].encircled - 1.0) < 1e-15);
    for (const auto& l : loops) {
        CHECK(l.closed());
        CHECK(l.clearance > 0);
    }
    CHECK_THROWS_AS(standard_loops(kZeroOne, Complex(0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(standard_loops({0.0, 1.0, 2.0}, Complex(-1, 0)), std::invalid_argument);
    CHECK(enclosing_loop(kZeroOne, Complex(0, -1)).closed());
    CHECK(default_base(kZeroOne).imag() < 0);
}

TEST_CASE("zero coefficient has trivial monodromy")
{
    for (const auto& l : standard_loops(kZeroOne, Complex(0.5, -1)))
        CHECK((integrate_ode_along(RatFunc(), l, 1e-12) - Matrix2C::identity()).norm() < 1e-10);
}

TEST_CASE("Euler equation r = -1/(4y^2) is parabolic with trace -2")
{
    auto r = parse_ratfunc("-1/(4y^2)");
    auto loops = standard_loops({0.0}, Complex(0, -1));
    auto m = integrate_ode_along(r, loops[0], 1e-12);
    CHECK(std::abs(m.trace() + 2.0) < 1e-8);
    CHECK(std::abs(m.det() - 1.0) < 1e-8);
    CHECK((m + Matrix2C::identity()).norm() > 1.0);  // not diagonalizable
}

TEST_CASE("reversed loop gives the inverse matrix")
{
    auto r = triangle_r("2,3,7");
    auto loops = standard_loops(kZeroOne, Complex(0.5, -1));
    for (const auto& l : loops) {
        auto m = integrate_ode_along(r, l, 1e-12);
        auto mr = integrate_ode_along(r, l.reversed(), 1e-12);
        CHECK((m * mr - Matrix2C::identity()).norm() < 1e-9);
    }
}

TEST_CASE("traces are invariant under change of base point")
{
    auto r = triangle_r("2,4,5");
    auto at = [&](Complex base) {
        auto g = monodromy_generators(r, 1e-12, base);
        REQUIRE(g.size() == 3);
        return std::array<Complex, 3>{g[0].trace(), g[1].trace(), (g[0] * g[1]).trace()};
    };
    auto a = at(Complex(0.5, -1)), b = at(Complex(0.2, -3)), c = at(Complex(0.9, -0.4));
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(a[i] - b[i]) < 1e-8);
        CHECK(std::abs(a[i] - c[i]) < 1e-8);
    }
}

TEST_CASE("conjugating by the transport between base points relates the matrices")
{
    auto r = triangle_r("2,3,7");
    Complex b1(0.5, -1), b2(0.5, -2);
    auto g1 = monodromy_generators(r, 1e-12, b1);
    auto g2 = monodromy_generators(r, 1e-12, b2);
    auto p = integrate_ode_along(r, segment_path(b2, b1), 1e-12);  // b2 -> b1
    for (std::size_t i = 0; i + 1 < g1.size(); ++i)
        CHECK((p.inverse() * g1[i] * p - g2[i]).norm() < 1e-8);
}

TEST_CASE("error shrinks with the tolerance")
{
    auto r = triangle_r("2,3,7");
    auto loops = standard_loops(kZeroOne, Complex(0.5, -1));
    auto err = [&](double tol) {
        IntegrationStats st;
        auto m = integrate_ode_along(r, loops[1], tol, &st);
        return std::make_pair(std::abs(std::abs(m.trace()) - 0.0) + std::abs(m.det() - 1.0), st.steps);
    };
    auto [e6, s6] = err(1e-6);
    auto [e10, s10] = err(1e-10);
    CHECK(e6 < 1e-4);
    CHECK(e10 < 1e-8);
    CHECK(e10 < e6);
    CHECK(s10 > s6);
}

TEST_CASE("reports for triangle signatures")
{
    for (const char* s : {"2,3,inf", "2,3,7", "2,4,5", "7,7,7", "inf,inf,inf"}) {
        CAPTURE(s);
        auto sig = sw::Signature::parse(s);
        auto rep = monodromy_report(sig, triangle_r(s));
        CHECK(rep.passed());
        CHECK(rep.max_det_residual < 1e-8);
        CHECK(rep.max_trace_error < 1e-6);
        CHECK(rep.relation_residual < 1e-6);
        CHECK(rep.noncommuting);
        CHECK(rep.signature_aligned);
        CHECK(rep.hyperbolic_found);
        CHECK(rep.infinity_agreement < 1e-6);
        auto j = report_json(rep);
        CHECK(j.contains("loops"));
        CHECK_FALSE(j.dump().find("wall") != std::string::npos);
    }
    auto j = sw::SchwarzianEquation::classical_j();
    CHECK(monodromy_report(j.signature(), sw::to_normal_form(j)).passed());
}

TEST_CASE("orbit growth separates finite and infinite groups")
{
    auto tetra = monodromy_generators(sw::to_normal_form(sw::hypergeometric_R(Rational(1, 3), Rational(1, 2),
                                                                                Rational(1, 3))),
                                      1e-12);
    auto o = orbit_growth(tetra, 12);
    CHECK(o.saturated);
    CHECK(o.size == 24);

    auto o237 = orbit_growth(monodromy_generators(triangle_r("2,3,7"), 1e-12), 12);
    CHECK_FALSE(o237.saturated);
}
