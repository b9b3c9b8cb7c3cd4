#include "fuchsian/schwarzian.hpp"

#include <algorithm>
#include <sstream>

namespace fuchsian::schwarzian {

Order Order::finite(int m)
{
    if (m < 2)
        throw InvalidSignature("orders must be >= 2 or inf, got " + std::to_string(m));
    return Order(m);
}

Order Order::parse(const std::string& text)
{
    if (text == "inf" || text == "oo" || text == "infinity")
        return cusp();
    try {
        std::size_t used = 0;
        int m = std::stoi(text, &used);
        if (used != text.size())
            throw InvalidSignature("bad order: '" + text + "'");
        return finite(m);
    } catch (const std::logic_error&) {
        throw InvalidSignature("bad order: '" + text + "'");
    }
}

int Order::value() const
{
    if (!m_)
        throw InvalidSignature("cusp has no finite order");
    return *m_;
}

Rational Order::angle() const { return m_ ? Rational(1, static_cast<unsigned long>(*m_)) : Rational(0); }

std::string Order::to_string() const { return m_ ? std::to_string(*m_) : "inf"; }

bool operator<(const Order& a, const Order& b)
{
    if (a.is_cusp())
        return false;
    if (b.is_cusp())
        return true;
    return a.value() < b.value();
}

Signature::Signature(std::vector<Order> orders) : orders_(std::move(orders))
{
    if (orders_.size() < 3)
        throw InvalidSignature("a genus-zero signature needs at least 3 orders");
    if (!is_hyperbolic())
        throw InvalidSignature("signature " + to_string() + " is not hyperbolic");
}

Signature Signature::triangle(Order k, Order l, Order m)
{
    std::vector<Order> v{k, l, m};
    std::sort(v.begin(), v.end());
    return Signature(std::move(v));
}

Signature Signature::parse(const std::string& text)
{
    std::vector<Order> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        v.push_back(Order::parse(item));
    if (v.size() == 3)
        return triangle(v[0], v[1], v[2]);
    return Signature(std::move(v));
}

bool Signature::is_hyperbolic() const
{
    Rational s = 0;
    for (const auto& o : orders_)
        s += 1 - o.angle();
    return s > 2;
}

std::string Signature::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < orders_.size(); ++i)
        s += (i ? "," : "") + orders_[i].to_string();
    return s;
}

std::vector<Signature> hyperbolic_triangles(int max_order)
{
    std::vector<Signature> out;
    for (int k = 2; k <= max_order; ++k)
        for (int l = k; l <= max_order; ++l) {
            for (int m = l; m <= max_order; ++m)
                if (Rational(1, k) + Rational(1, l) + Rational(1, m) < 1)
                    out.push_back(Signature::triangle(Order::finite(k), Order::finite(l), Order::finite(m)));
            if (Rational(1, k) + Rational(1, l) < 1)
                out.push_back(Signature::triangle(Order::finite(k), Order::finite(l), Order::cusp()));
        }
    for (int k = 2; k <= max_order; ++k)
        out.push_back(Signature::triangle(Order::finite(k), Order::cusp(), Order::cusp()));
    out.push_back(Signature::triangle(Order::cusp(), Order::cusp(), Order::cusp()));
    return out;
}

TriangleParams TriangleParams::from_exponents(Rational lambda, Rational mu, Rational nu)
{
    TriangleParams p;
    p.lambda = std::move(lambda);
    p.mu = std::move(mu);
    p.nu = std::move(nu);
    p.alpha = (1 - p.lambda - p.mu + p.nu) / 2;
    p.beta = (1 - p.lambda - p.mu - p.nu) / 2;
    p.gamma = 1 - p.lambda;
    return p;
}

TriangleParams TriangleParams::from_signature(const Signature& sig)
{
    if (!sig.is_triangle())
        throw InvalidSignature("triangle parameters need a triangle signature");
    const auto& o = sig.orders();
    return from_exponents(o[1].angle(), o[0].angle(), o[2].angle());
}

RatFunc hypergeometric_R(const Rational& lambda, const Rational& mu, const Rational& nu)
{
    const Poly y = Poly::linear(0), y1 = Poly::linear(1);
    RatFunc at0(Poly::constant(1 - lambda * lambda), y * y);
    RatFunc at1(Poly::constant(1 - mu * mu), y1 * y1);
    RatFunc cross(Poly::constant(mu * mu + lambda * lambda - nu * nu - 1), y * y1);
    return at0 + at1 + cross;
}

RatFunc triangle_R(const Signature& sig)
{
    if (!sig.is_triangle())
        throw InvalidSignature("triangle_R needs three orders");
    auto p = TriangleParams::from_signature(sig);
    return hypergeometric_R(p.lambda, p.mu, p.nu);
}

RatFunc classical_j_R()
{
    Poly num({Rational(2654208), Rational(-1968), Rational(1)});
    Poly den = pow(Poly::linear(0), 2) * pow(Poly::linear(1728), 2);
    return RatFunc(num, den);
}

RatFunc rescale_hauptmodul(const RatFunc& R, const Rational& c)
{
    if (c == 0)
        throw InvalidEquation("rescaling by zero");
    return Rational(1 / (c * c)) * R.scale_argument(1 / c);
}

RatFunc to_normal_form(const RatFunc& R) { return Rational(-1, 4) * R; }

RatFunc to_normal_form(const SchwarzianEquation& eq) { return to_normal_form(eq.R()); }

RatFunc to_riccati(const SchwarzianEquation& eq) { return Rational(1, 4) * eq.R(); }

}  // namespace fuchsian::schwarzian
