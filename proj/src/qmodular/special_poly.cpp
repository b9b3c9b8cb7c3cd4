#include "fuchsian/qmodular.hpp"

#include <algorithm>
#include <sstream>

namespace fuchsian::qmodular {

SpecialPoly::SpecialPoly(int level, std::map<std::pair<int, int>, BigInt> coeffs) : level_(level)
{
    for (auto& [k, v] : coeffs)
        if (v != 0)
            c_.emplace(k, v);
}

BigInt SpecialPoly::coeff(int a, int b) const
{
    auto it = c_.find({a, b});
    return it == c_.end() ? BigInt(0) : it->second;
}

void SpecialPoly::set(int a, int b, const BigInt& v)
{
    if (v == 0)
        c_.erase({a, b});
    else
        c_[{a, b}] = v;
}

int SpecialPoly::degree_x() const
{
    int d = 0;
    for (const auto& [k, v] : c_)
        d = std::max({d, k.first, k.second});
    return d;
}

bool SpecialPoly::symmetric() const
{
    for (const auto& [k, v] : c_)
        if (coeff(k.second, k.first) != v)
            return false;
    return true;
}

BigInt SpecialPoly::content() const
{
    BigInt g = 0;
    for (const auto& [k, v] : c_)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

QSeries SpecialPoly::evaluate(const QSeries& x, const QSeries& y) const
{
    const int d = degree_x();
    std::vector<QSeries> xp{QSeries::constant(1, INT_MAX / 4)}, yp{QSeries::constant(1, INT_MAX / 4)};
    for (int i = 1; i <= d; ++i) {
        xp.push_back(xp.back() * x);
        yp.push_back(yp.back() * y);
    }
    QSeries acc = QSeries::zero(INT_MAX / 4);
    for (const auto& [k, v] : c_)
        acc = acc + (xp[static_cast<std::size_t>(k.first)] * yp[static_cast<std::size_t>(k.second)]) * Rational(v);
    return acc;
}

std::string SpecialPoly::to_text() const
{
    std::vector<std::pair<std::pair<int, int>, BigInt>> terms(c_.begin(), c_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& u, const auto& v) { return u.first > v.first; });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms) {
        const auto [a, b] = k;
        BigInt mag = abs(v);
        if (first)
            os << (v < 0 ? "-" : "");
        else
            os << (v < 0 ? " - " : " + ");
        first = false;
        std::string mono;
        auto var = [&](const char* name, int e) {
            if (e == 0)
                return;
            if (!mono.empty())
                mono += "*";
            mono += name;
            if (e > 1)
                mono += "^" + std::to_string(e);
        };
        var("X", a);
        var("Y", b);
        if (mono.empty())
            os << mag.get_str();
        else if (mag == 1)
            os << mono;
        else
            os << mag.get_str() << "*" << mono;
    }
    if (first)
        os << "0";
    return os.str();
}

int psi(int N)
{
    if (N < 1)
        throw std::invalid_argument("psi needs N >= 1");
    Rational v = N;
    int n = N;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            v *= Rational(p + 1, p);
            while (n % p == 0)
                n /= p;
        }
    }
    if (n > 1)
        v *= make_rational(n + 1, n);
    return static_cast<int>(v.get_num().get_si());
}

SpecialPoly compute_special_poly(int N, int truncation)
{
    if (N < 2)
        throw std::invalid_argument("special polynomial level must be >= 2");
    const int d = psi(N);
    const int low = -d * (N + 1);
    const int unknowns = (d + 1) * (d + 1);
    const int equations = truncation - low + 1;
    if (equations <= unknowns)
        throw Underdetermined("truncation q^" + std::to_string(truncation) + " gives " + std::to_string(equations) +
                              " equations for " + std::to_string(unknowns) + " unknowns");

    const QSeries x = j_series(truncation + d * (N + 1) + 4);
    const QSeries y = x.substitute_power(N);
    std::vector<QSeries> xp{QSeries::constant(1, INT_MAX / 4)}, yp{QSeries::constant(1, INT_MAX / 4)};
    for (int i = 1; i <= d; ++i) {
        xp.push_back(xp.back() * x);
        yp.push_back(yp.back() * y);
    }
    std::vector<std::pair<int, int>> monos;
    RationalMatrix m(static_cast<std::size_t>(equations), std::vector<Rational>(static_cast<std::size_t>(unknowns)));
    for (int a = 0; a <= d; ++a) {
        for (int b = 0; b <= d; ++b) {
            QSeries s = xp[static_cast<std::size_t>(a)] * yp[static_cast<std::size_t>(b)];
            if (s.precision() <= truncation)
                throw TruncationError("monomial series too short");
            const std::size_t col = monos.size();
            for (int k = low; k <= truncation; ++k)
                m[static_cast<std::size_t>(k - low)][col] = s.coeff(k);
            monos.emplace_back(a, b);
        }
    }
    auto kernel = kernel_basis(std::move(m), unknowns);
    if (kernel.size() != 1)
        throw Underdetermined("solution space has dimension " + std::to_string(kernel.size()) + ", expected 1");

    const auto& v = kernel.front();
    BigInt den = 1;
    for (const auto& c : v)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::map<std::pair<int, int>, BigInt> coeffs;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational scaled = v[i] * den;
        coeffs[monos[i]] = scaled.get_num();
    }
    SpecialPoly phi(N, std::move(coeffs));
    BigInt g = phi.content();
    BigInt sign = phi.coeff(d, 0) < 0 ? -1 : 1;
    std::map<std::pair<int, int>, BigInt> norm;
    for (const auto& [k, c] : phi.coeffs())
        norm[k] = sign * c / g;
    return SpecialPoly(N, std::move(norm));
}

bool kronecker_congruence(const SpecialPoly& phi, int p)
{
    // (X^p - Y)(X - Y^p) = X^{p+1} - X^p Y^p - X Y + Y^{p+1}
    SpecialPoly target(p, {{{p + 1, 0}, 1}, {{p, p}, -1}, {{1, 1}, -1}, {{0, p + 1}, 1}});
    std::map<std::pair<int, int>, BigInt> keys = phi.coeffs();
    keys.insert(target.coeffs().begin(), target.coeffs().end());
    for (const auto& [k, unused] : keys) {
        BigInt diff = phi.coeff(k.first, k.second) - target.coeff(k.first, k.second);
        if (mpz_divisible_ui_p(diff.get_mpz_t(), static_cast<unsigned long>(p)) == 0)
            return false;
    }
    return true;
}

Json special_poly_json(const SpecialPoly& p)
{
    std::vector<std::pair<std::pair<int, int>, BigInt>> terms(p.coeffs().begin(), p.coeffs().end());
    std::sort(terms.begin(), terms.end(), [](const auto& u, const auto& v) { return u.first > v.first; });
    Json t = Json::array();
    for (const auto& [k, v] : terms)
        t.push_back({{"x", k.first}, {"y", k.second}, {"c", v.get_str()}});
    return {{"level", p.level()}, {"terms", t}, {"text", p.to_text()}};
}

}  // namespace fuchsian::qmodular
