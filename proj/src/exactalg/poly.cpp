#include "fuchsian/exactalg/poly.hpp"

#include <algorithm>
#include <sstream>

namespace fuchsian {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree)
{
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

Poly Poly::linear(const Rational& a) { return Poly({-a, Rational(1)}); }

void Poly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Rational Poly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return 0;
    return c_[static_cast<std::size_t>(i)];
}

Rational Poly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Poly Poly::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
}

Poly Poly::monic() const
{
    if (is_zero())
        return {};
    Rational inv = 1 / leading();
    return *this * inv;
}

Rational Poly::eval(const Rational& y) const
{
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * y + *it;
    return acc;
}

std::complex<double> Poly::eval(std::complex<double> y) const
{
    std::complex<double> acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * y + it->get_d();
    return acc;
}

Poly Poly::compose(const Poly& q) const
{
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * q + Poly::constant(*it);
    return acc;
}

Poly Poly::shift(const Rational& a) const { return compose(Poly({a, Rational(1)})); }

Poly Poly::scale_argument(const Rational& c) const
{
    std::vector<Rational> v(c_);
    Rational p = 1;
    for (auto& x : v) {
        x *= p;
        p *= c;
    }
    return Poly(std::move(v));
}

Poly Poly::reversed(int deg) const
{
    if (deg < degree())
        throw AlgebraError("reversed: degree bound below polynomial degree");
    std::vector<Rational> v(static_cast<std::size_t>(deg) + 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        v[static_cast<std::size_t>(deg) - i] = c_[i];
    return Poly(std::move(v));
}

Rational Poly::primitive_multiplier() const
{
    if (is_zero())
        return 1;
    BigInt l = 1, g = 0;
    for (const auto& c : c_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& c : c_) {
        BigInt v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Rational m = make_rational(l, g);
    return leading() < 0 ? Rational(-m) : m;
}

std::string Poly::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        Rational a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool unit = a == 1 && i > 0;
        if (!unit)
            os << fuchsian::to_string(a) << (i > 0 ? "*" : "");
        if (i > 0)
            os << var;
        if (i > 1)
            os << "^" << i;
    }
    return os.str();
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_)
        c *= s;
    return *this;
}

Poly operator-(Poly a)
{
    for (auto& c : a.c_)
        c = -c;
    return a;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw AlgebraError("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Poly{}, a};
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rational inv = 1 / b.leading();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        Rational f = rem[static_cast<std::size_t>(i)] * inv;
        quo[static_cast<std::size_t>(i - db)] = f;
        if (f == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b)
{
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        // keep intermediate coefficients from growing without bound
        x = std::move(y);
        y = r.is_zero() ? r : r * r.primitive_multiplier();
    }
    return x.monic();
}

Poly pow(const Poly& p, int n)
{
    Poly acc = Poly::constant(1), base = p;
    while (n > 0) {
        if (n & 1)
            acc *= base;
        n >>= 1;
        if (n)
            base *= base;
    }
    return acc;
}

}  // namespace fuchsian
