#ifndef FUCHSIAN_EXACTALG_POLY_HPP
#define FUCHSIAN_EXACTALG_POLY_HPP

#include "fuchsian/exactalg/rational.hpp"

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace fuchsian {

/// Dense univariate polynomial over Q; coeffs()[i] multiplies y^i.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial has an empty vector and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, int degree);
    /// y - a
    static Poly linear(const Rational& a);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    Rational leading() const;

    Poly derivative() const;
    Poly monic() const;
    Rational eval(const Rational& y) const;
    std::complex<double> eval(std::complex<double> y) const;

    /// p(q(y))
    Poly compose(const Poly& q) const;
    /// p(y + a)
    Poly shift(const Rational& a) const;
    /// p(c*y)
    Poly scale_argument(const Rational& c) const;
    /// y^deg * p(1/y) for the given deg >= degree()
    Poly reversed(int deg) const;

    /// Multiplier making every coefficient an integer with content 1 (sign
    /// chosen so the leading coefficient is positive).
    Rational primitive_multiplier() const;

    std::string to_string(const std::string& var = "y") const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator-(Poly a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder; throws AlgebraError for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly pow(const Poly& p, int n);

}  // namespace fuchsian

#endif
