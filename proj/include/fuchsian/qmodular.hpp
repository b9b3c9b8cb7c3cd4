#ifndef FUCHSIAN_QMODULAR_HPP
#define FUCHSIAN_QMODULAR_HPP

// Exact q-expansions: the classical j-function, its Schwarzian equation in the
// D = q d/dq calculus, and modular polynomials Phi_N.

#include "fuchsian/exactalg.hpp"
#include "fuchsian/json_io.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace fuchsian::qmodular {

using QSeries = RationalSeries;

/// 1 + 240 sum sigma_3(n) q^n, known below q^prec.
QSeries eisenstein_e4(int prec);
/// q prod (1 - q^n)^24, known below q^prec.
QSeries discriminant(int prec);
/// E4^3 / Delta, known below q^N (N >= 2).
QSeries j_series(int N);

/// q d/dq
QSeries D(const QSeries& f);

/// y(q^k)
inline QSeries substitute_power(const QSeries& f, int k) { return f.substitute_power(k); }

/// Evaluates p(f) for a polynomial p.
QSeries eval_poly(const Poly& p, const QSeries& f);

struct ResidualCheck {
    int order = 0;          // requested: coefficients of q^k, k <= order
    bool zero = false;      // every checked coefficient vanishes
    std::optional<int> first_nonzero;
    Rational first_value = 0;
    QSeries residual;

    std::string summary() const;
};

/// Residual of 2 D^3y Dy - 3 (D^2 y)^2 + (Dy)^4 R(y) (twice the Schwarzian
/// form, so the identity stays integral). Throws TruncationError when y is
/// not known far enough.
ResidualCheck verify_schwarzian_q(const RatFunc& R, const QSeries& y, int order);

class SpecialPoly {
public:
    SpecialPoly() = default;
    SpecialPoly(int level, std::map<std::pair<int, int>, BigInt> coeffs);

    int level() const { return level_; }
    const std::map<std::pair<int, int>, BigInt>& coeffs() const { return c_; }
    BigInt coeff(int a, int b) const;
    void set(int a, int b, const BigInt& v);
    int degree_x() const;
    bool symmetric() const;
    BigInt content() const;

    QSeries evaluate(const QSeries& x, const QSeries& y) const;

    /// Terms in lexicographic order (X before Y, descending), e.g.
    /// "X^3 - X^2*Y^2 + 1488*X^2*Y + ..."
    std::string to_text() const;

private:
    int level_ = 0;
    std::map<std::pair<int, int>, BigInt> c_;  // (a, b) -> coefficient of X^a Y^b
};

/// N prod_{p | N} (1 + 1/p)
int psi(int N);

class Underdetermined : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Solves Phi(j(q), j(q^N)) = 0 through q^truncation with deg_X, deg_Y <= psi(N).
/// Normalized to integer content 1 and positive X^psi(N) coefficient.
SpecialPoly compute_special_poly(int N, int truncation);

ResidualCheck verify_special_poly(const SpecialPoly& phi, int N, int order);

/// Phi_p == (X^p - Y)(X - Y^p) mod p, coefficientwise.
bool kronecker_congruence(const SpecialPoly& phi, int p);

struct RelationRank {
    int monomials = 0;
    int rank = 0;
    int equations = 0;
    bool independent() const { return rank == monomials; }
};

/// Rank of the coefficient matrix of {x^a y^b : a + b <= degree} through q^order;
/// full rank means no polynomial relation of that total degree.
RelationRank relation_rank(const QSeries& x, const QSeries& y, int degree, int order);

/// j(q + q^2), known below q^N.
QSeries j_of_shifted_argument(int N);

Json special_poly_json(const SpecialPoly& p);

}  // namespace fuchsian::qmodular

#endif
