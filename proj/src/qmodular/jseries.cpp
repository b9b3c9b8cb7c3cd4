#include "fuchsian/qmodular.hpp"

namespace fuchsian::qmodular {

QSeries eisenstein_e4(int prec)
{
    std::vector<Rational> c(static_cast<std::size_t>(std::max(prec, 1)));
    c[0] = 1;
    for (int d = 1; d < prec; ++d) {
        Rational d3 = Rational(d) * d * d;
        for (int n = d; n < prec; n += d)
            c[static_cast<std::size_t>(n)] += 240 * d3;
    }
    return QSeries(0, std::move(c), prec);
}

QSeries discriminant(int prec)
{
    // Euler: prod (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2}, k in Z
    const int len = std::max(prec - 1, 1);
    std::vector<Rational> e(static_cast<std::size_t>(len));
    for (int k = 0;; ++k) {
        bool any = false;
        for (int kk : {k, -k}) {
            long g = static_cast<long>(kk) * (3 * kk - 1) / 2;
            if (g < len) {
                e[static_cast<std::size_t>(g)] = (k % 2 == 0) ? 1 : -1;
                any = true;
            }
        }
        if (!any)
            break;
    }
    QSeries eta = QSeries(0, std::move(e), len);
    return QSeries::variable(INT_MAX / 4) * eta.pow(24);
}

QSeries j_series(int N)
{
    if (N < 2)
        throw std::invalid_argument("j_series needs N >= 2");
    QSeries e4 = eisenstein_e4(N + 2);
    return (e4 * e4 * e4 * discriminant(N + 2).inverse()).truncate(N);
}

QSeries D(const QSeries& f)
{
    return f.log_derivative_operator();
}

QSeries eval_poly(const Poly& p, const QSeries& f)
{
    QSeries acc = QSeries::zero(INT_MAX / 4);
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * f + QSeries::constant(p.coeff(i), INT_MAX / 4);
    return acc;
}

QSeries j_of_shifted_argument(int N)
{
    QSeries g(1, {Rational(1), Rational(1)}, N + 4);
    return j_series(N + 2).compose(g).truncate(N);
}

}  // namespace fuchsian::qmodular
