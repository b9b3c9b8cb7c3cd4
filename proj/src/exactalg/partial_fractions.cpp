#include "fuchsian/exactalg/partial_fractions.hpp"

#include <algorithm>

namespace fuchsian {

int root_multiplicity(const Poly& p, const Rational& a)
{
    if (p.is_zero())
        throw AlgebraError("root multiplicity in the zero polynomial");
    int m = 0;
    Poly q = p;
    const Poly lin = Poly::linear(a);
    for (;;) {
        auto [quo, rem] = divmod(q, lin);
        if (!rem.is_zero())
            return m;
        q = std::move(quo);
        ++m;
    }
}

RationalSeries laurent_at(const RatFunc& f, const Rational& a, int precision)
{
    Poly n = f.num().shift(a), d = f.den().shift(a);
    int vd = 0;
    while (d.coeff(vd) == 0)
        ++vd;
    // den series has valuation vd; ask for enough terms that num/den is
    // known below t^precision
    int need = precision + 2 * vd + 1;
    auto ns = RationalSeries::from_coefficients(n.coeffs(), std::max(need, 1));
    auto ds = RationalSeries::from_coefficients(d.coeffs(), std::max(need, 1));
    return (ns / ds).truncate(precision);
}

RationalSeries laurent_at_infinity(const RatFunc& f, int precision)
{
    // f(1/t) = t^(dd - dn) rev(num)(t) / rev(den)(t)
    if (f.is_zero())
        return RationalSeries::zero(precision);
    int dn = f.num().degree(), dd = f.den().degree();
    Poly rn = f.num().reversed(dn), rd = f.den().reversed(dd);
    int shift = dd - dn;
    int need = std::max(precision - shift, 0) + 2;
    auto ns = RationalSeries::from_coefficients(rn.coeffs(), need);
    auto ds = RationalSeries::from_coefficients(rd.coeffs(), need);
    auto q = ns / ds;
    std::vector<Rational> c;
    for (int k = q.valuation(); k < q.precision(); ++k)
        c.push_back(q.coeff(k));
    return RationalSeries(q.valuation() + shift, std::move(c), q.precision() + shift).truncate(precision);
}

PartialFractionForm partial_fractions(const RatFunc& f, std::span<const Rational> poles)
{
    PartialFractionForm out;
    auto [quo, rem] = divmod(f.num(), f.den());
    out.polynomial_part = quo;

    std::vector<Rational> sorted(poles.begin(), poles.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    Poly cofactor = f.den();
    std::vector<std::pair<Rational, int>> mult;
    for (const auto& a : sorted) {
        int m = root_multiplicity(cofactor, a);
        if (m == 0)
            continue;
        cofactor = divmod(cofactor, pow(Poly::linear(a), m)).first;
        mult.emplace_back(a, m);
    }
    if (cofactor.degree() > 0)
        throw AlgebraError("pole list does not exhaust the denominator; leftover factor " +
                           cofactor.to_string());

    for (const auto& [a, m] : mult) {
        auto s = laurent_at(f, a, 0);
        for (int k = -m; k < 0; ++k) {
            Rational c = s.coeff(k);
            if (c != 0)
                out.terms.push_back({a, -k, c});
        }
    }
    return out;
}

RatFunc PartialFractionForm::reconstruct() const
{
    RatFunc acc(polynomial_part);
    for (const auto& t : terms)
        acc += RatFunc(Poly::constant(t.coefficient), pow(Poly::linear(t.pole), t.order));
    return acc;
}

Rational PartialFractionForm::coefficient(const Rational& pole, int order) const
{
    for (const auto& t : terms)
        if (t.pole == pole && t.order == order)
            return t.coefficient;
    return 0;
}

}  // namespace fuchsian
