#include "fuchsian/schwarzian.hpp"

#include <algorithm>

namespace fuchsian::schwarzian {

ProjectivePoint ProjectivePoint::parse(const std::string& text)
{
    if (text == "inf")
        return infinity();
    return ProjectivePoint(parse_rational(text));
}

const Rational& ProjectivePoint::value() const
{
    if (!a_)
        throw InvalidEquation("the point at infinity has no affine coordinate");
    return *a_;
}

std::string ProjectivePoint::to_string() const { return a_ ? fuchsian::to_string(*a_) : "inf"; }

namespace {

RatFunc venkov_R(const std::vector<ProjectivePoint>& points, const std::vector<Rational>& angles,
                 const std::vector<Rational>& accessory)
{
    RatFunc R;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].is_infinity())
            continue;
        const Poly lin = Poly::linear(points[i].value());
        R += RatFunc(Poly::constant(1 - angles[i] * angles[i]), lin * lin);
        if (accessory[i] != 0)
            R += RatFunc(Poly::constant(accessory[i]), lin);
    }
    return R;
}

Order order_from_angle(const Rational& a)
{
    if (a == 0)
        return Order::cusp();
    if (a.get_num() != 1)
        throw InvalidEquation("angle " + to_string(a) + " is not of the form 1/m");
    return Order::finite(static_cast<int>(a.get_den().get_si()));
}

}  // namespace

SchwarzianEquation SchwarzianEquation::from_data(std::vector<ProjectivePoint> points, std::vector<Rational> angles,
                                                 std::vector<Rational> accessory)
{
    if (points.size() != angles.size() || points.size() != accessory.size())
        throw InvalidEquation("points, angles and accessory parameters must have equal length");
    if (points.size() < 3)
        throw InvalidEquation("a Schwarzian equation needs at least 3 singular points");
    std::optional<std::size_t> inf_index;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (angles[i] < 0 || angles[i] >= 1)
            throw InvalidEquation("angle " + to_string(angles[i]) + " outside [0, 1)");
        for (std::size_t j = 0; j < i; ++j)
            if (points[i] == points[j])
                throw InvalidEquation("repeated singular point " + points[i].to_string());
        if (points[i].is_infinity()) {
            inf_index = i;
            if (accessory[i] != 0)
                throw InvalidEquation("the point at infinity carries no accessory parameter");
        }
    }
    Rational sum = 0;
    for (const auto& a : accessory)
        sum += a;
    if (sum != 0)
        throw InvalidEquation("accessory parameters must sum to zero, got " + to_string(sum));

    RatFunc R = venkov_R(points, angles, accessory);
    auto at_inf = laurent_at_infinity(R, 4);
    if (inf_index) {
        const Rational& a = angles[*inf_index];
        if (at_inf.coeff(2) != 1 - a * a)
            throw InvalidEquation("y^2 R(y) does not tend to 1 - alpha_inf^2 at infinity");
    } else if (at_inf.coeff(2) != 0 || at_inf.coeff(3) != 0) {
        throw InvalidEquation("infinity is regular but R is not O(y^-4) there");
    }
    if (R.degree() > 2 * static_cast<int>(points.size()))
        throw InvalidEquation("deg R exceeds 2r");

    SchwarzianEquation eq;
    eq.points_ = std::move(points);
    eq.angles_ = std::move(angles);
    eq.accessory_ = std::move(accessory);
    eq.R_ = std::move(R);
    return eq;
}

SchwarzianEquation SchwarzianEquation::from_triangle(const Signature& sig)
{
    if (!sig.is_triangle())
        throw InvalidSignature("from_triangle needs three orders");
    auto p = TriangleParams::from_signature(sig);
    Rational c = p.mu * p.mu + p.lambda * p.lambda - p.nu * p.nu - 1;
    const auto& o = sig.orders();
    auto eq = from_data({ProjectivePoint(Rational(1)), ProjectivePoint(Rational(0)), ProjectivePoint::infinity()},
                        {o[0].angle(), o[1].angle(), o[2].angle()}, {c, -c, Rational(0)});
    return eq;
}

SchwarzianEquation SchwarzianEquation::classical_j()
{
    auto sig = Signature::triangle(Order::finite(2), Order::finite(3), Order::cusp());
    return from_triangle(sig).rescaled(1728);
}

Signature SchwarzianEquation::signature() const
{
    std::vector<Order> orders;
    for (const auto& a : angles_)
        orders.push_back(order_from_angle(a));
    if (orders.size() == 3) {
        std::sort(orders.begin(), orders.end());
        return Signature::triangle(orders[0], orders[1], orders[2]);
    }
    return Signature(std::move(orders));
}

SchwarzianEquation SchwarzianEquation::rescaled(const Rational& c) const
{
    if (c == 0)
        throw InvalidEquation("rescaling by zero");
    SchwarzianEquation eq = *this;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!points_[i].is_infinity())
            eq.points_[i] = ProjectivePoint(Rational(c * points_[i].value()));
        eq.accessory_[i] = accessory_[i] / c;
    }
    eq.R_ = rescale_hauptmodul(R_, c);
    return eq;
}

}  // namespace fuchsian::schwarzian
