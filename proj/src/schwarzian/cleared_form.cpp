#include "fuchsian/schwarzian.hpp"

#include <sstream>

namespace fuchsian::schwarzian {

void DiffPoly::add(const Exponents& e, const BigInt& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int DiffPoly::total_degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e[0] + e[1] + e[2] + e[3]);
    return d;
}

RationalSeries DiffPoly::evaluate(const std::array<RationalSeries, 4>& jet) const
{
    int prec = INT_MAX / 4;
    for (const auto& s : jet)
        prec = std::min(prec, s.precision());
    RationalSeries acc = RationalSeries::zero(prec);
    for (const auto& [e, c] : terms_) {
        RationalSeries term = RationalSeries::constant(Rational(c), INT_MAX / 4);
        for (int k = 0; k < 4; ++k)
            if (e[static_cast<std::size_t>(k)] > 0)
                term = term * jet[static_cast<std::size_t>(k)].pow(e[static_cast<std::size_t>(k)]);
        acc = acc + term;
    }
    return acc;
}

std::string DiffPoly::to_string() const
{
    static const char* names[4] = {"y", "y1", "y2", "y3"};
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt a = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        bool any = false;
        if (a != 1) {
            os << a.get_str();
            any = true;
        }
        for (int k = 0; k < 4; ++k) {
            int p = e[static_cast<std::size_t>(k)];
            if (p == 0)
                continue;
            os << (any ? "*" : "") << names[k];
            if (p > 1)
                os << "^" << p;
            any = true;
        }
        if (!any)
            os << "1";
    }
    return first ? "0" : os.str();
}

DiffPoly clear_schwarzian(const RatFunc& R)
{
    // (2 y3 y1 - 3 y2^2) den(y) + y1^4 num(y), then scaled to integers
    std::map<DiffPoly::Exponents, Rational> acc;
    const auto& den = R.den().coeffs();
    const auto& num = R.num().coeffs();
    for (std::size_t i = 0; i < den.size(); ++i) {
        int p = static_cast<int>(i);
        acc[{p, 1, 0, 1}] += 2 * den[i];
        acc[{p, 0, 2, 0}] += -3 * den[i];
    }
    for (std::size_t i = 0; i < num.size(); ++i)
        acc[{static_cast<int>(i), 4, 0, 0}] += num[i];

    BigInt l = 1, g = 0;
    for (const auto& [e, c] : acc)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& [e, c] : acc) {
        BigInt v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    DiffPoly out;
    for (const auto& [e, c] : acc) {
        if (c == 0)
            continue;
        BigInt v = c.get_num() * (l / c.get_den()) / g;
        out.add(e, v);
    }
    return out;
}

ClearedForm cleared_polynomial_form(const SchwarzianEquation& eq)
{
    ClearedForm out;
    out.affine_poly = clear_schwarzian(eq.R());
    out.affine_degree = out.affine_poly.total_degree();

    bool has_infinity = false;
    for (const auto& p : eq.points())
        has_infinity = has_infinity || p.is_infinity();
    if (!has_infinity) {
        out.chart_R = eq.R();
        out.poly = out.affine_poly;
        out.total_degree = out.affine_degree;
        return out;
    }
    // move infinity to w = 0 through w = 1/(y - c) with c a regular point
    Rational c = -1;
    auto is_singular = [&](const Rational& a) {
        for (const auto& p : eq.points())
            if (!p.is_infinity() && p.value() == a)
                return true;
        return false;
    };
    while (is_singular(c))
        c -= 1;
    out.chart_shift = c;
    out.chart_R = eq.R().invert_argument(c) * RatFunc(Poly::constant(1), Poly::monomial(1, 4));
    out.poly = clear_schwarzian(out.chart_R);
    out.total_degree = out.poly.total_degree();
    return out;
}

}  // namespace fuchsian::schwarzian
