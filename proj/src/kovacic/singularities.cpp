#include "local.hpp"

#include <climits>

namespace fuchsian::kovacic {

std::string to_string(PointTag t)
{
    switch (t) {
    case PointTag::Regular:
        return "regular";
    case PointTag::RegularSingular:
        return "regular singular";
    case PointTag::Irregular:
        return "irregular";
    }
    return "?";
}

namespace {

void fill_exponents(SingularPoint& p, const Rational& b)
{
    p.leading = b;
    p.difference_squared = 1 + 4 * b;
    if (auto d = exact_sqrt(p.difference_squared)) {
        p.exponent_difference = *d;
        p.exponents = std::array<Rational, 2>{(1 - *d) / 2, (1 + *d) / 2};
    }
}

}  // namespace

std::vector<SingularPoint> classify_singularities(const RatFunc& r)
{
    detail::LocalData ld = detail::local_data(r);
    std::vector<SingularPoint> out;
    for (const auto& pole : ld.poles) {
        SingularPoint p{pole.c, pole.order, PointTag::Irregular, 0, 1, std::nullopt, std::nullopt};
        if (pole.order <= 2) {
            p.tag = PointTag::RegularSingular;
            fill_exponents(p, detail::double_pole_coefficient(pole));
        }
        out.push_back(std::move(p));
    }

    SingularPoint inf{schwarzian::ProjectivePoint::infinity(), ld.inf_order, PointTag::Irregular, 0, 1,
                      std::nullopt, std::nullopt};
    if (ld.inf_order >= 4)
        inf.tag = PointTag::Regular;
    else if (ld.inf_order >= 2)
        inf.tag = PointTag::RegularSingular;
    if (ld.inf_order >= 2)
        fill_exponents(inf, detail::infinity_coefficient2(ld));
    out.push_back(std::move(inf));
    return out;
}

bool is_fuchsian(const RatFunc& r)
{
    for (const auto& p : classify_singularities(r))
        if (p.tag == PointTag::Irregular)
            return false;
    return true;
}

Json singular_points_json(const std::vector<SingularPoint>& pts)
{
    Json out = Json::array();
    for (const auto& p : pts) {
        Json j;
        j["location"] = p.location.to_string();
        j["order"] = p.order == INT_MAX ? Json("inf") : Json(p.order);
        j["tag"] = to_string(p.tag);
        j["difference_squared"] = rational_json(p.difference_squared);
        j["exponent_difference"] = p.exponent_difference ? rational_json(*p.exponent_difference) : Json(nullptr);
        if (p.exponents)
            j["exponents"] = {rational_json((*p.exponents)[0]), rational_json((*p.exponents)[1])};
        else
            j["exponents"] = nullptr;
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace fuchsian::kovacic
