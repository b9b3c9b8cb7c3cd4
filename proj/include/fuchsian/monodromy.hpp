#ifndef FUCHSIAN_MONODROMY_HPP
#define FUCHSIAN_MONODROMY_HPP

// Numerical monodromy of z'' = r(y) z.
//
// Conventions. A loop's matrix is the transport of the fundamental matrix
// [[z1, z2], [z1', z2']] started at the identity, so concatenating a then b
// gives M_b * M_a. standard_loops() returns counterclockwise lassos sorted by
// decreasing argument of (s - base); with that order M_1 M_2 ... M_n is the
// transport around a counterclockwise circle enclosing every finite point,
// and M_1 ... M_n M_inf = I where M_inf is the positive (clockwise) loop
// around infinity.

#include "fuchsian/exactalg.hpp"
#include "fuchsian/json_io.hpp"
#include "fuchsian/schwarzian.hpp"

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuchsian::monodromy {

using Complex = std::complex<double>;

class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Matrix2C {
    std::array<Complex, 4> a{};  // row-major

    static Matrix2C identity() { return {{1.0, 0.0, 0.0, 1.0}}; }
    Complex operator()(int i, int j) const { return a[static_cast<std::size_t>(2 * i + j)]; }
    Complex det() const { return a[0] * a[3] - a[1] * a[2]; }
    Complex trace() const { return a[0] + a[3]; }
    Matrix2C inverse() const;
    /// Largest entry modulus.
    double norm() const;

    friend Matrix2C operator*(const Matrix2C& x, const Matrix2C& y);
    friend Matrix2C operator-(const Matrix2C& x, const Matrix2C& y);
    friend Matrix2C operator+(const Matrix2C& x, const Matrix2C& y);
    friend Matrix2C operator*(Complex s, const Matrix2C& x);
};

struct Segment {
    enum class Kind { Line, Arc };
    Kind kind = Kind::Line;
    Complex from, to;      // lines
    Complex center;        // arcs
    double radius = 0;
    double start_angle = 0, sweep = 0;  // arcs; sweep > 0 is counterclockwise

    static Segment line(Complex a, Complex b);
    static Segment arc(Complex center, double radius, double start_angle, double sweep);

    Complex at(double s) const;       // s in [0, 1]
    Complex velocity(double s) const;  // d/ds
    Segment reversed() const;
};

struct PathLoop {
    Complex base;
    std::vector<Segment> segments;
    /// Finite point encircled, or nullopt for a loop around infinity.
    std::optional<Complex> encircled;
    /// Minimum distance from the path to the singular points it was built for.
    double clearance = 0;

    bool closed(double tol = 1e-12) const;
    PathLoop reversed() const;
};

/// Rational function with double-precision coefficients, for fast sampling.
class NumericRatFunc {
public:
    explicit NumericRatFunc(const RatFunc& f);
    Complex operator()(Complex y) const;

private:
    std::vector<double> num_, den_;
};

using Coefficient = std::function<Complex(Complex)>;

struct IntegrationStats {
    long steps = 0;
    long rejected = 0;
};

/// Dormand-Prince 5(4) transport along the path. `singulars` bounds the step
/// so that no step reaches past half the distance to the nearest one.
Matrix2C integrate_ode_along(const Coefficient& r, const PathLoop& path, double tol,
                             const std::vector<Complex>& singulars = {}, IntegrationStats* stats = nullptr);
Matrix2C integrate_ode_along(const RatFunc& r, const PathLoop& path, double tol, IntegrationStats* stats = nullptr);

/// One lasso per point: ray from base, full counterclockwise circle, ray back.
/// Throws std::invalid_argument when the base coincides with a point or two
/// points are aligned with the base.
std::vector<PathLoop> standard_loops(const std::vector<Complex>& singulars, Complex base);

/// A counterclockwise circle through the base enclosing every point
/// (a lasso reaching out to such a circle when the base sits inside).
PathLoop enclosing_loop(const std::vector<Complex>& singulars, Complex base);

/// A base point below the points, at a distance comparable to their spread.
Complex default_base(const std::vector<Complex>& singulars);

struct LoopResult {
    std::string point;   // "0", "1728", "inf"
    std::string order;   // "7", "inf"
    Matrix2C matrix;
    double trace_abs = 0;
    double target = 0;   // 2 cos(pi/m), or 2 for a cusp
    double trace_error = 0;
    double det_residual = 0;
    double clearance = 0;
    long steps = 0;
};

struct OrbitEvidence {
    std::size_t size = 0;
    bool saturated = false;  // no new vectors at the final word length
    int word_length = 0;
};

struct MonodromyReport {
    Complex base;
    double tolerance = 0;
    /// Finite points in loop order, then infinity from an independent circle.
    std::vector<LoopResult> loops;
    Matrix2C infinity_by_product;
    double infinity_agreement = 0;  // |M_inf(circle) - M_inf(product)|
    double relation_residual = 0;   // min over signs of |M_1...M_n M_inf -+ I|
    int relation_sign = 1;
    double max_det_residual = 0;
    double max_trace_error = 0;
    double commutator_norm = 0;      // max |M_a M_b - M_b M_a|
    bool noncommuting = false;
    bool hyperbolic_found = false;
    std::string hyperbolic_word;
    double hyperbolic_trace = 0;
    bool signature_aligned = false;

    /// det within 1e-8, traces within 1e-6, relation within 1e-6,
    /// a non-commuting pair present.
    bool passed() const;
};

struct ReportOptions {
    double tol = 1e-12;
    std::optional<Complex> base;
};

/// r must be the normal form of an equation whose singular points carry the
/// signature's orders (exponent difference 1/m, or 0 at a cusp).
MonodromyReport monodromy_report(const schwarzian::Signature& sig, const RatFunc& r, const ReportOptions& opts = {});

/// Orbit of a fixed vector under words of length <= max_length in the
/// generators and their inverses, deduplicated to 1e-6; stops growing
/// once `cap` vectors are seen.
OrbitEvidence orbit_growth(const std::vector<Matrix2C>& generators, int max_length, std::size_t cap = 2000);

/// Matrices for every finite singular point of r, plus infinity when it is
/// singular, in standard-loop order.
std::vector<Matrix2C> monodromy_generators(const RatFunc& r, double tol, std::optional<Complex> base = {});

Json matrix_json(const Matrix2C& m);
Json report_json(const MonodromyReport& rep);

}  // namespace fuchsian::monodromy

#endif
