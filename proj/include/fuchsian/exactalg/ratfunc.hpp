#ifndef FUCHSIAN_EXACTALG_RATFUNC_HPP
#define FUCHSIAN_EXACTALG_RATFUNC_HPP

#include "fuchsian/exactalg/poly.hpp"

#include <climits>
#include <complex>
#include <string>

namespace fuchsian {

/// Rational function num/den in canonical form: gcd(num, den) = 1 and den
/// monic, so structural equality is mathematical equality.
class RatFunc {
public:
    RatFunc() : den_(Poly::constant(1)) {}
    RatFunc(Poly num);  // NOLINT: polynomials are rational functions
    RatFunc(Poly num, Poly den);

    static RatFunc constant(const Rational& c) { return RatFunc(Poly::constant(c)); }
    /// The coordinate function y.
    static RatFunc identity() { return RatFunc(Poly({Rational(0), Rational(1)})); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// max(deg num, deg den)
    int degree() const;
    /// deg den - deg num; INT_MAX for the zero function.
    int order_at_infinity() const;

    RatFunc derivative() const;
    RatFunc inverse() const;
    Rational eval(const Rational& y) const;
    std::complex<double> eval(std::complex<double> y) const;
    /// f(c*y)
    RatFunc scale_argument(const Rational& c) const;
    /// f(y + a)
    RatFunc shift(const Rational& a) const;
    /// f(a + 1/y)
    RatFunc invert_argument(const Rational& a) const;

    std::string to_string(const std::string& var = "y") const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a);
    friend RatFunc operator*(const Rational& s, const RatFunc& a);
    friend bool operator==(const RatFunc& a, const RatFunc& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

private:
    Poly num_, den_;
};

}  // namespace fuchsian

#endif
