#ifndef FUCHSIAN_KOVACIC_HPP
#define FUCHSIAN_KOVACIC_HPP

// Liouvillian solutions of z'' = r(y) z for r in Q(y) with rational poles,
// following Kovacic's algorithm, plus the hypergeometric shortcuts used for
// triangle equations.

#include "fuchsian/exactalg.hpp"
#include "fuchsian/json_io.hpp"
#include "fuchsian/schwarzian.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuchsian::kovacic {

using fuchsian::to_string;

/// The input leaves the exact pipeline: an irrational pole, or local data
/// (a Laurent square root, a family of exponents) that is not rational.
class UnsupportedInput : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class PointTag { Regular, RegularSingular, Irregular };

std::string to_string(PointTag t);

struct SingularPoint {
    schwarzian::ProjectivePoint location;
    /// Finite points: pole order of r. Infinity: deg den - deg num
    /// (INT_MAX when r = 0).
    int order = 0;
    PointTag tag = PointTag::Regular;
    /// Coefficient of (y-c)^-2, resp. y^-2 at infinity; 0 when absent.
    Rational leading = 0;
    /// Square of the exponent difference, 1 + 4*leading (1 for simple poles).
    Rational difference_squared = 1;
    /// Exponent difference and exponents (rho(rho-1) = leading at finite
    /// points; at infinity the local solutions behave like y^rho with
    /// rho(rho-1) = leading) when they are rational.
    std::optional<Rational> exponent_difference;
    std::optional<std::array<Rational, 2>> exponents;
};

/// Every pole of r plus the point at infinity, poles ascending.
/// Throws UnsupportedInput for irrational poles.
std::vector<SingularPoint> classify_singularities(const RatFunc& r);
bool is_fuchsian(const RatFunc& r);

struct Case1Certificate {
    RatFunc family_omega;  // omega from the local data
    Poly P;                // monic polynomial solution of the auxiliary equation
    RatFunc omega;         // family_omega + P'/P, so z = exp(int omega)
};

/// omega^2 + coefficients[1] omega + coefficients[0] = 0
struct Case2Certificate {
    RatFunc theta;
    Poly P;
    RatFunc phi;  // theta + P'/P
    std::array<RatFunc, 3> quadratic;
};

struct Case3Certificate {
    int n = 0;  // 4, 6 or 12
    /// Monic minimal polynomial coefficients a_0..a_n of omega.
    std::vector<RatFunc> polynomial;
};

struct SchwarzMatch {
    int row = 0;  // 1 (dihedral) to 15
    std::string description;
};

enum class Case { One = 1, Two = 2, Three = 3, Four = 4, Undetermined3 = 5 };

std::string to_string(Case c);

struct KovacicVerdict {
    Case kind = Case::Four;
    std::optional<Case1Certificate> case1;
    std::optional<Case2Certificate> case2;
    std::optional<Case3Certificate> case3;
    std::optional<SchwarzMatch> schwarz;
    /// One line per candidate construction examined, in enumeration order.
    std::vector<std::string> log;
};

struct Options {
    /// Decide 3-point Fuchsian equations by the Schwarz list.
    bool schwarz_shortcut = true;
    /// Run the auxiliary-polynomial search of case 3 (n = 4, 6, 12) when the
    /// shortcut does not apply. Off means Undetermined3 for such inputs.
    bool case3_search = true;
};

using Log = std::vector<std::string>;

std::optional<Case1Certificate> case1(const RatFunc& r, Log* log = nullptr);
std::optional<Case2Certificate> case2(const RatFunc& r, Log* log = nullptr);

struct Case3Outcome {
    bool undetermined = false;
    std::optional<Case3Certificate> certificate;
    std::optional<SchwarzMatch> schwarz;
    bool present() const { return certificate.has_value() || schwarz.has_value(); }
};
Case3Outcome case3(const RatFunc& r, const Options& opts = {}, Log* log = nullptr);

/// Cases are tried in the order 1, 2, 3; Case Four only when every
/// applicable case failed exhaustively.
KovacicVerdict decide_liouvillian(const RatFunc& r, const Options& opts = {});

bool verify_case1(const Case1Certificate& c, const RatFunc& r);
/// Checks that the roots of sum a_i w^i are closed under w' = r - w^2:
/// the derivative of the polynomial along the Riccati flow vanishes modulo
/// the polynomial itself.
bool verify_algebraic_riccati(const std::vector<RatFunc>& poly, const RatFunc& r);
bool verify(const KovacicVerdict& v, const RatFunc& r);

/// Schwarz's list (Kimura's form) for exponent differences of a 3-point
/// equation. Row 1 is the dihedral family.
std::optional<SchwarzMatch> schwarz_list_match(const Rational& lambda, const Rational& mu, const Rational& nu);
/// One of +-lambda +-mu +-nu is an odd integer.
bool hypergeometric_reducible(const Rational& lambda, const Rational& mu, const Rational& nu);

enum class Ternary { Yes, No, Unknown };

struct RicResult {
    Ternary holds = Ternary::Unknown;
    KovacicVerdict verdict;
    std::string label;
};

/// The attached Riccati equation has no solution algebraic over C(y),
/// i.e. the linear equation falls in Case Four.
RicResult condition_ric(const schwarzian::SchwarzianEquation& eq, const Options& opts = {});

bool triangle_reducibility(const schwarzian::TriangleParams& p);
/// Number of integers among lambda - 1/2, mu - 1/2, nu - 1/2.
int half_integer_count(const schwarzian::TriangleParams& p);
/// Two of lambda - 1/2, mu - 1/2, nu - 1/2 are integers: a quadratic (dihedral)
/// Riccati solution exists. Needs irreducible input. Finite non-dihedral
/// triples (Schwarz list rows 2-15, never hyperbolic) have algebraic solutions
/// of degree 4, 6 or 12 that this test does not see.
bool triangle_algebraic_riccati(const schwarzian::TriangleParams& p);
bool triangle_strong_minimality(const schwarzian::Signature& sig);

Json verdict_json(const KovacicVerdict& v);
Json singular_points_json(const std::vector<SingularPoint>& pts);

}  // namespace fuchsian::kovacic

#endif
