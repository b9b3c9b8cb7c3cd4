#include "fuchsian/exactalg/ratfunc.hpp"

#include <algorithm>

namespace fuchsian {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}

RatFunc::RatFunc(Poly num, Poly den)
{
    if (den.is_zero())
        throw AlgebraError("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
        num = divmod(num, g).first;
        den = divmod(den, g).first;
    }
    Rational lead = den.leading();
    num_ = num * (1 / lead);
    den_ = den * (1 / lead);
}

int RatFunc::degree() const { return std::max(num_.degree(), den_.degree()); }

int RatFunc::order_at_infinity() const
{
    if (is_zero())
        return INT_MAX;
    return den_.degree() - num_.degree();
}

RatFunc RatFunc::derivative() const
{
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::inverse() const
{
    if (is_zero())
        throw AlgebraError("inverse of the zero rational function");
    return RatFunc(den_, num_);
}

Rational RatFunc::eval(const Rational& y) const
{
    Rational d = den_.eval(y);
    if (d == 0)
        throw AlgebraError("rational function evaluated at a pole: " + fuchsian::to_string(y));
    return num_.eval(y) / d;
}

std::complex<double> RatFunc::eval(std::complex<double> y) const
{
    return num_.eval(y) / den_.eval(y);
}

RatFunc RatFunc::scale_argument(const Rational& c) const
{
    return RatFunc(num_.scale_argument(c), den_.scale_argument(c));
}

RatFunc RatFunc::shift(const Rational& a) const { return RatFunc(num_.shift(a), den_.shift(a)); }

RatFunc RatFunc::invert_argument(const Rational& a) const
{
    // f(a + 1/y) = y^(dd-dn) * rev(num(a+.)) / rev(den(a+.))
    Poly n = num_.shift(a), d = den_.shift(a);
    int dn = n.degree(), dd = d.degree();
    if (n.is_zero())
        return {};
    Poly rn = n.reversed(dn), rd = d.reversed(dd);
    if (dd >= dn)
        rn *= Poly::monomial(1, dd - dn);
    else
        rd *= Poly::monomial(1, dn - dd);
    return RatFunc(rn, rd);
}

std::string RatFunc::to_string(const std::string& var) const
{
    if (is_polynomial())
        return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RatFunc operator+(const RatFunc& a, const RatFunc& b)
{
    if (a.den_ == b.den_)
        return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b)
{
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b)
{
    if (b.is_zero())
        throw AlgebraError("division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc operator-(const RatFunc& a)
{
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator*(const Rational& s, const RatFunc& a)
{
    if (s == 0)
        return {};
    RatFunc r = a;
    r.num_ *= s;
    return r;
}

}  // namespace fuchsian
