#include "fuchsian/qmodular.hpp"
#include "fuchsian/schwarzian.hpp"

#include <doctest.h>

#include <fstream>
#include <random>

using namespace fuchsian;
using namespace fuchsian::qmodular;

namespace {

std::string golden(const std::string& name)
{
    std::ifstream in(std::string(FUCHSIAN_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    return line;
}

QSeries random_series(std::mt19937& rng, int val, int prec)
{
    std::uniform_int_distribution<int> c(-9, 9);
    std::vector<Rational> coeffs;
    for (int k = val; k < prec; ++k)
        coeffs.push_back(c(rng));
    return QSeries(val, coeffs, prec);
}

}  // namespace

TEST_CASE("Eisenstein series, discriminant and j")
{
    auto e4 = eisenstein_e4(6);
    CHECK(e4.coeff(0) == 1);
    CHECK(e4.coeff(1) == 240);
    CHECK(e4.coeff(2) == 2160);
    CHECK(e4.coeff(3) == 6720);
    CHECK(e4.coeff(5) == 30240);

    auto delta = discriminant(8);
    const long tau[] = {1, -24, 252, -1472, 4830, -6048, -16744};
    for (int n = 1; n <= 7; ++n)
        CHECK(delta.coeff(n) == tau[n - 1]);

    auto j = j_series(6);
    CHECK(j.valuation() == -1);
    CHECK(j.coeff(-1) == 1);
    CHECK(j.coeff(0) == 744);
    CHECK(j.coeff(1) == 196884);
    CHECK(j.coeff(2) == 21493760);
    CHECK(j.coeff(3) == 864299970);
    CHECK(j.coeff(4) == BigInt("20245856256"));
    CHECK(j.coeff(5) == BigInt("333202640600"));
    CHECK_THROWS_AS(j.coeff(6), TruncationError);
    CHECK_THROWS(j_series(1));
}

TEST_CASE("D = q d/dq obeys the Leibniz and chain rules")
{
    std::mt19937 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_series(rng, -1, 15), g = random_series(rng, 0, 15);
        CHECK(agree(D(f * g), D(f) * g + f * D(g)));
        for (int k : {2, 3}) {
            CHECK(agree(D(substitute_power(f, k)), substitute_power(D(f), k) * Rational(k)));
        }
    }
    CHECK(D(QSeries::constant(5, 10)).is_zero());
}

TEST_CASE("j satisfies its Schwarzian equation")
{
    auto check = verify_schwarzian_q(schwarzian::classical_j_R(), j_series(60), 40);
    CHECK(check.zero);
    CHECK(check.summary() == "residual zero through q^40");
    auto tri = verify_schwarzian_q(schwarzian::triangle_R(schwarzian::Signature::parse("2,3,inf")),
                                   j_series(60) * Rational(1, 1728), 40);
    CHECK(tri.zero);
    CHECK_THROWS_AS(verify_schwarzian_q(schwarzian::classical_j_R(), j_series(10), 40), TruncationError);
}

TEST_CASE("perturbing any coefficient of R_j breaks the identity early")
{
    const RatFunc Rj = schwarzian::classical_j_R();
    const auto j = j_series(30);
    auto num = Rj.num().coeffs(), den = Rj.den().coeffs();
    for (int side = 0; side < 2; ++side) {
        auto& v = side == 0 ? num : den;
        for (std::size_t i = 0; i < v.size(); ++i) {
            auto n2 = num, d2 = den;
            (side == 0 ? n2 : d2)[i] += 1;
            auto check = verify_schwarzian_q(RatFunc(Poly(n2), Poly(d2)), j, 20);
            CAPTURE(side);
            CAPTURE(i);
            REQUIRE_FALSE(check.zero);
            CHECK(*check.first_nonzero <= 5);
            CHECK(check.summary().rfind("residual nonzero at q^", 0) == 0);
        }
    }
}

TEST_CASE("rescaling invariance: R_(c h)(y) = R_h(y/c)/c^2")
{
    std::mt19937 rng(22);
    const auto h = j_series(30) * Rational(1, 1728);
    const auto R = schwarzian::triangle_R(schwarzian::Signature::parse("2,3,inf"));
    for (int trial = 0; trial < 10; ++trial) {
        Rational c = make_rational(int(rng() % 2000) - 1000, rng() % 50 + 1);
        if (c == 0)
            c = 7;
        CAPTURE(to_string(c));
        CHECK(verify_schwarzian_q(schwarzian::rescale_hauptmodul(R, c), h * c, 20).zero);
        CHECK_FALSE(verify_schwarzian_q(R, h * c, 20).zero);
    }
}

TEST_CASE("modular polynomials")
{
    CHECK(psi(2) == 3);
    CHECK(psi(3) == 4);
    CHECK(psi(6) == 12);

    auto phi2 = compute_special_poly(2, 30);
    CHECK(phi2.to_text() == golden("phi2.txt"));
    CHECK(phi2.coeff(1, 1) == 40773375);
    CHECK(phi2.symmetric());
    CHECK(phi2.content() == 1);
    CHECK(kronecker_congruence(phi2, 2));
    CHECK(verify_special_poly(phi2, 2, 30).zero);

    auto phi3 = compute_special_poly(3, 30);
    CHECK(phi3.to_text() == golden("phi3.txt"));
    CHECK(phi3.symmetric());
    CHECK(kronecker_congruence(phi3, 3));
    CHECK(verify_special_poly(phi3, 3, 30).zero);

    auto bad = phi2;
    bad.set(1, 1, phi2.coeff(1, 1) + 1);
    CHECK(bad.symmetric());
    CHECK_FALSE(verify_special_poly(bad, 2, 30).zero);
    CHECK_FALSE(kronecker_congruence(bad, 2));
    auto skew = phi2;
    skew.set(2, 1, phi2.coeff(2, 1) + 2);
    CHECK_FALSE(skew.symmetric());
    CHECK(kronecker_congruence(skew, 2));
    CHECK_FALSE(verify_special_poly(skew, 2, 30).zero);

    CHECK_THROWS_AS(compute_special_poly(2, 3), Underdetermined);
    auto doc = special_poly_json(phi2);
    CHECK(doc.dump().find("40773375") != std::string::npos);
}

TEST_CASE("relation ranks")
{
    auto j = j_series(60);
    auto shifted = relation_rank(j, j_of_shifted_argument(60), 4, 50);
    CHECK(shifted.monomials == 15);
    CHECK(shifted.independent());
    // j(q) and j(q^2) are tied by Phi_2, of total degree 4
    auto related = relation_rank(j, substitute_power(j, 2).truncate(60), 4, 50);
    CHECK_FALSE(related.independent());
    CHECK(related.rank == 14);
}
