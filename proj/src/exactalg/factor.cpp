#include "fuchsian/exactalg/factor.hpp"

#include <algorithm>

namespace fuchsian {

namespace {

// Positive divisors of |n| by trial division; large cofactors are accepted
// only when GMP considers them prime.
std::vector<BigInt> divisors(BigInt n)
{
    n = abs(n);
    std::vector<std::pair<BigInt, int>> primes;
    for (unsigned long p = 2; p <= 2000000 && BigInt(p) * p <= n; ++p) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            int e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                n /= p;
                ++e;
            }
            primes.emplace_back(BigInt(p), e);
        }
    }
    if (n > 1) {
        if (n > BigInt(2000000) * 2000000 && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
            throw AlgebraError("rational root search: integer too large to factor");
        primes.emplace_back(n, 1);
    }
    std::vector<BigInt> out{1};
    for (const auto& [p, e] : primes) {
        std::size_t base = out.size();
        BigInt pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    return out;
}

}  // namespace

bool Factorization::splits() const
{
    return std::all_of(factors.begin(), factors.end(),
                       [](const SquarefreeFactor& f) { return f.factor.degree() == 1; });
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& p)
{
    if (p.is_zero())
        throw AlgebraError("squarefree decomposition of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    Poly f = p.monic();
    if (f.degree() == 0)
        return out;
    Poly fp = f.derivative();
    Poly a = gcd(f, fp);
    Poly b = divmod(f, a).first;
    Poly c = divmod(fp, a).first;
    Poly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        Poly g = gcd(b, d);
        if (g.degree() > 0)
            out.push_back({g, i});
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derivative();
    }
    return out;
}

std::vector<Rational> rational_roots(const Poly& p)
{
    if (p.is_zero())
        throw AlgebraError("roots of the zero polynomial");
    std::vector<Rational> roots;
    Poly q = p * p.primitive_multiplier();
    // strip the root at zero first so the constant term is nonzero
    int zeros = 0;
    while (zeros <= q.degree() && q.coeff(zeros) == 0)
        ++zeros;
    if (zeros > 0) {
        roots.push_back(0);
        q = Poly(std::vector<Rational>(q.coeffs().begin() + zeros, q.coeffs().end()));
    }
    if (q.degree() >= 1) {
        BigInt a0 = q.coeff(0).get_num(), an = q.leading().get_num();
        auto num_divs = divisors(a0);
        auto den_divs = divisors(an);
        for (const auto& u : num_divs)
            for (const auto& v : den_divs)
                for (int sign : {1, -1}) {
                    Rational cand = make_rational(u * sign, v);
                    if (q.eval(cand) == 0)
                        roots.push_back(cand);
                }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

Factorization squarefree_and_roots(const Poly& p)
{
    if (p.is_zero())
        throw AlgebraError("squarefree decomposition of the zero polynomial");
    Factorization out;
    out.leading = p.leading();
    for (auto& sf : squarefree_decomposition(p)) {
        Poly rest = sf.factor;
        for (const auto& root : rational_roots(sf.factor)) {
            out.roots.push_back({root, sf.multiplicity});
            out.factors.push_back({Poly::linear(root), sf.multiplicity});
            rest = divmod(rest, Poly::linear(root)).first;
        }
        if (rest.degree() > 0)
            out.factors.push_back({rest, sf.multiplicity});
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
    return out;
}

}  // namespace fuchsian
