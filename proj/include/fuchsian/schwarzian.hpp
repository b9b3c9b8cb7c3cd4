#ifndef FUCHSIAN_SCHWARZIAN_HPP
#define FUCHSIAN_SCHWARZIAN_HPP

// Schwarzian equations of genus-zero uniformizers.
//
// Convention: an equation is stored through its rational function R, and a
// solution y(t) satisfies
//
//     2 S(y) + (y')^2 R(y) = 0,      S(y) = y'''/y' - (3/2) (y''/y')^2.
//
// In this scale the classical j-function has
// R_j = (y^2 - 1968 y + 2654208) / (y^2 (y - 1728)^2), the triangle Hauptmodul
// j_(k,l,m) has R = (1-l^-2)/y^2 + (1-k^-2)/(y-1)^2 + (k^-2+l^-2-m^-2-1)/(y(y-1)),
// and the attached linear equation is z'' = r z with r = -R/4. At a finite
// singular point with angle alpha the Venkov shape reads
// R = (1 - alpha^2)/(y - a)^2 + A/(y - a) + (regular).

#include "fuchsian/exactalg.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuchsian::schwarzian {

class InvalidSignature : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidEquation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Order of an elliptic point (finite m >= 2) or a cusp.
class Order {
public:
    static Order finite(int m);
    static Order cusp() { return Order(); }
    static Order parse(const std::string& text);  // "7" or "inf"

    bool is_cusp() const { return !m_; }
    int value() const;
    /// 1/m, or 0 for a cusp.
    Rational angle() const;
    std::string to_string() const;

    friend bool operator==(const Order&, const Order&) = default;
    /// Cusps sort last.
    friend bool operator<(const Order& a, const Order& b);

private:
    Order() = default;
    explicit Order(int m) : m_(m) {}
    std::optional<int> m_;
};

/// Signature (0; m_1, ..., m_r) of a genus-zero Fuchsian group.
class Signature {
public:
    explicit Signature(std::vector<Order> orders);
    /// Sorted triple k <= l <= m; throws unless hyperbolic.
    static Signature triangle(Order k, Order l, Order m);
    /// "2,3,inf"
    static Signature parse(const std::string& text);

    const std::vector<Order>& orders() const { return orders_; }
    int size() const { return static_cast<int>(orders_.size()); }
    bool is_triangle() const { return orders_.size() == 3; }
    /// sum of angles < size - 2 (for triangles: 1/k + 1/l + 1/m < 1)
    bool is_hyperbolic() const;
    std::string to_string() const;

private:
    std::vector<Order> orders_;
};

/// All hyperbolic k <= l <= m with finite orders at most max_order, cusps
/// included (one, two or three of them).
std::vector<Signature> hyperbolic_triangles(int max_order);

/// A point of P^1 with rational affine coordinate.
class ProjectivePoint {
public:
    static ProjectivePoint infinity() { return ProjectivePoint(); }
    ProjectivePoint(Rational a) : a_(std::move(a)) {}  // NOLINT
    static ProjectivePoint parse(const std::string& text);

    bool is_infinity() const { return !a_; }
    const Rational& value() const;
    std::string to_string() const;
    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

private:
    ProjectivePoint() = default;
    std::optional<Rational> a_;
};

/// The parameters of the hypergeometric model of a triangle equation:
/// lambda = 1/l, mu = 1/k, nu = 1/m with lambda = 1 - gamma,
/// mu = gamma - alpha - beta, nu = alpha - beta.
struct TriangleParams {
    Rational lambda, mu, nu;
    Rational alpha, beta, gamma;

    static TriangleParams from_signature(const Signature& sig);
    /// Arbitrary exponent differences (no hyperbolicity requirement).
    static TriangleParams from_exponents(Rational lambda, Rational mu, Rational nu);
};

class SchwarzianEquation {
public:
    static SchwarzianEquation from_triangle(const Signature& sig);
    static SchwarzianEquation classical_j();
    /// Builds R from the Venkov data and checks the conditions that keep the
    /// equation Fuchsian at infinity: sum A_i = 0, and either
    /// R = O(y^-4) (infinity regular) or y^2 R -> 1 - alpha_inf^2.
    static SchwarzianEquation from_data(std::vector<ProjectivePoint> points, std::vector<Rational> angles,
                                        std::vector<Rational> accessory);

    const std::vector<ProjectivePoint>& points() const { return points_; }
    const std::vector<Rational>& angles() const { return angles_; }
    const std::vector<Rational>& accessory() const { return accessory_; }
    const RatFunc& R() const { return R_; }

    /// Number of singular points, infinity included.
    int singular_point_count() const { return static_cast<int>(points_.size()); }
    Signature signature() const;
    /// Equation of c*h when this equation belongs to h.
    SchwarzianEquation rescaled(const Rational& c) const;

private:
    std::vector<ProjectivePoint> points_;
    std::vector<Rational> angles_;
    std::vector<Rational> accessory_;
    RatFunc R_;
};

/// R for the triangle Hauptmodul sending v_k, v_l, v_m to 1, 0, inf.
RatFunc triangle_R(const Signature& sig);

/// Same closed form for arbitrary exponent differences lambda at 0, mu at 1,
/// nu at infinity.
RatFunc hypergeometric_R(const Rational& lambda, const Rational& mu, const Rational& nu);

RatFunc classical_j_R();

/// If J = c h then R_J(y) = R_h(y/c) / c^2.
RatFunc rescale_hauptmodul(const RatFunc& R, const Rational& c);

/// r with z'' = r z; r = -R/4.
RatFunc to_normal_form(const RatFunc& R);
RatFunc to_normal_form(const SchwarzianEquation& eq);

/// The Riccati equation u' + u^2 + q(y) = 0 attached to the equation;
/// returns q = R/4 = -r.
RatFunc to_riccati(const SchwarzianEquation& eq);

/// S(f) = (f''/f')' - (1/2)(f''/f')^2.
template <class T>
Series<T> schwarzian_of_series(const Series<T>& f);

/// S(f) = f'''/f' - (3/2)(f''/f')^2.
template <class T>
Series<T> schwarzian_of_series_y3(const Series<T>& f);

/// Polynomial in (y, y', y'', y''') with integer coefficients.
class DiffPoly {
public:
    using Exponents = std::array<int, 4>;

    void add(const Exponents& e, const BigInt& c);
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    int total_degree() const;
    /// Substitutes a jet (y, Dy, D^2 y, D^3 y).
    RationalSeries evaluate(const std::array<RationalSeries, 4>& jet) const;
    std::string to_string() const;

private:
    std::map<Exponents, BigInt> terms_;
};

struct ClearedForm {
    /// (2 y''' y' - 3 y''^2) den(R) + y'^4 num(R), scaled to content 1,
    /// in the chart where every singular point is finite.
    DiffPoly poly;
    int total_degree = 0;
    /// w = 1/(y - c) when infinity was singular; nullopt if no change.
    std::optional<Rational> chart_shift;
    RatFunc chart_R;
    /// The same clearing applied to R in the original coordinate.
    DiffPoly affine_poly;
    int affine_degree = 0;
};

ClearedForm cleared_polynomial_form(const SchwarzianEquation& eq);
DiffPoly clear_schwarzian(const RatFunc& R);

}  // namespace fuchsian::schwarzian

#include "fuchsian/schwarzian_series.ipp"

#endif
