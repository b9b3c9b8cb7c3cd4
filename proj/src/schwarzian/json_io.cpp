#include "fuchsian/json_io.hpp"
#include "fuchsian/schwarzian.hpp"
#include "fuchsian/schwarzian_json.hpp"

namespace fuchsian {

Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(BigInt(std::to_string(j.get<long long>())));
    throw AlgebraError("expected a rational string, got " + j.dump());
}

Json poly_json(const Poly& p)
{
    Json a = Json::array();
    for (const auto& c : p.coeffs())
        a.push_back(rational_json(c));
    return a;
}

Poly poly_from_json(const Json& j)
{
    std::vector<Rational> c;
    for (const auto& x : j)
        c.push_back(rational_from_json(x));
    return Poly(std::move(c));
}

Json ratfunc_json(const RatFunc& f) { return {{"num", poly_json(f.num())}, {"den", poly_json(f.den())}}; }

RatFunc ratfunc_from_json(const Json& j) { return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den"))); }

Json series_json(const RationalSeries& s)
{
    Json c = Json::array();
    for (int k = s.valuation(); k < s.precision(); ++k)
        c.push_back(rational_json(s.coeff(k)));
    return {{"valuation", s.valuation()}, {"precision", s.precision()}, {"coefficients", c}};
}

namespace schwarzian {

Json equation_json(const SchwarzianEquation& eq)
{
    Json points = Json::array(), angles = Json::array(), acc = Json::array();
    for (std::size_t i = 0; i < eq.points().size(); ++i) {
        points.push_back(eq.points()[i].to_string());
        angles.push_back(rational_json(eq.angles()[i]));
        acc.push_back(rational_json(eq.accessory()[i]));
    }
    return {{"points", points}, {"angles", angles}, {"accessory", acc}, {"R", ratfunc_json(eq.R())}};
}

SchwarzianEquation equation_from_json(const Json& j)
{
    std::vector<ProjectivePoint> points;
    std::vector<Rational> angles, acc;
    for (const auto& p : j.at("points"))
        points.push_back(ProjectivePoint::parse(p.get<std::string>()));
    for (const auto& a : j.at("angles"))
        angles.push_back(rational_from_json(a));
    for (const auto& a : j.at("accessory"))
        acc.push_back(rational_from_json(a));
    auto eq = SchwarzianEquation::from_data(std::move(points), std::move(angles), std::move(acc));
    if (j.contains("R") && !(ratfunc_from_json(j.at("R")) == eq.R()))
        throw InvalidEquation("R in the document disagrees with the one built from points, angles and accessory");
    return eq;
}

}  // namespace schwarzian
}  // namespace fuchsian
