#include "local.hpp"

#include <algorithm>
#include <climits>

namespace fuchsian::kovacic::detail {

LocalData local_data(const RatFunc& r)
{
    LocalData ld;
    ld.inf_order = r.order_at_infinity();
    if (r.den().degree() > 0) {
        Factorization f = squarefree_and_roots(r.den());
        if (!f.splits())
            throw UnsupportedInput("r has a pole outside Q (denominator factor " +
                                   f.factors.front().factor.to_string() + "); exact pipeline needs rational poles");
        for (const auto& root : f.roots)
            ld.poles.push_back({root.value, root.multiplicity, laurent_at(r, root.value, 1)});
    }
    ld.inf_laurent = r.is_zero() ? RationalSeries::zero(3) : laurent_at_infinity(r, 3);
    return ld;
}

Rational double_pole_coefficient(const Pole& p)
{
    return p.order >= 2 ? p.laurent.coeff(-2) : Rational(0);
}

Rational infinity_coefficient2(const LocalData& ld)
{
    return ld.inf_laurent.coeff(2);
}

std::vector<Rational> sqrt_head(const RationalSeries& s, int start, int count)
{
    std::vector<Rational> out;
    if (count <= 0)
        return out;
    auto root = exact_sqrt(s.coeff(start));
    if (!root)
        throw UnsupportedInput("leading Laurent coefficient " + to_string(s.coeff(start)) +
                               " is not a rational square");
    out.push_back(*root);
    for (int k = 1; k < count; ++k) {
        Rational acc = s.coeff(start + k);
        for (int i = 1; i < k; ++i)
            acc -= out[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(k - i)];
        out.push_back(acc / (2 * out[0]));
    }
    return out;
}

namespace {

Poly lcm(const Poly& a, const Poly& b)
{
    return divmod(a * b, gcd(a, b)).first.monic();
}

std::optional<Poly> solve_from_images(std::vector<Poly> images, int d)
{
    // images[j] = op(y^j); find c_0..c_{d-1} with sum c_j images[j] = -images[d]
    int rows = 0;
    for (const auto& p : images)
        rows = std::max(rows, p.degree() + 1);
    if (rows == 0)
        return Poly::monomial(1, d);
    RationalMatrix m(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(d)));
    std::vector<Rational> rhs(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < d; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = images[static_cast<std::size_t>(j)].coeff(i);
        rhs[static_cast<std::size_t>(i)] = -images[static_cast<std::size_t>(d)].coeff(i);
    }
    auto sol = solve_linear(m, rhs, d);
    if (!sol)
        return std::nullopt;
    std::vector<Rational> c(*sol);
    c.push_back(1);
    return Poly(std::move(c));
}

}  // namespace

std::optional<Poly> solve_monic(const std::function<RatFunc(const Poly&)>& op, int d)
{
    std::vector<RatFunc> vals;
    Poly den = Poly::constant(1);
    for (int j = 0; j <= d; ++j) {
        vals.push_back(op(Poly::monomial(1, j)));
        den = lcm(den, vals.back().den());
    }
    std::vector<Poly> images;
    for (const auto& v : vals)
        images.push_back(v.num() * divmod(den, v.den()).first);
    return solve_from_images(std::move(images), d);
}

std::optional<Poly> solve_monic_poly(const std::function<Poly(const Poly&)>& op, int d)
{
    std::vector<Poly> images;
    for (int j = 0; j <= d; ++j)
        images.push_back(op(Poly::monomial(1, j)));
    return solve_from_images(std::move(images), d);
}

Poly pole_product(const LocalData& ld)
{
    Poly s = Poly::constant(1);
    for (const auto& p : ld.poles)
        s *= Poly::linear(p.c);
    return s;
}

std::string point_name(const Rational& c)
{
    return "y=" + to_string(c);
}

std::vector<Rational> integer_exponent_set(const Rational& base, const Rational& step, const Rational& disc,
                                           const std::vector<int>& ks)
{
    std::vector<Rational> out;
    auto root = exact_sqrt(disc);
    for (int k : ks) {
        Rational e = base;
        if (k != 0) {
            if (!root || *root == 0)
                continue;
            e += Rational(k) * step * *root;
        }
        if (is_integer(e) && std::find(out.begin(), out.end(), e) == out.end())
            out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace fuchsian::kovacic::detail
