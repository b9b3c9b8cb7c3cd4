#include "fuchsian/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fuchsian::monodromy {

Matrix2C Matrix2C::inverse() const
{
    Complex d = det();
    return {{a[3] / d, -a[1] / d, -a[2] / d, a[0] / d}};
}

double Matrix2C::norm() const
{
    double m = 0;
    for (const auto& x : a)
        m = std::max(m, std::abs(x));
    return m;
}

Matrix2C operator*(const Matrix2C& x, const Matrix2C& y)
{
    return {{x.a[0] * y.a[0] + x.a[1] * y.a[2], x.a[0] * y.a[1] + x.a[1] * y.a[3],
             x.a[2] * y.a[0] + x.a[3] * y.a[2], x.a[2] * y.a[1] + x.a[3] * y.a[3]}};
}

Matrix2C operator-(const Matrix2C& x, const Matrix2C& y)
{
    Matrix2C m;
    for (std::size_t i = 0; i < 4; ++i)
        m.a[i] = x.a[i] - y.a[i];
    return m;
}

Matrix2C operator+(const Matrix2C& x, const Matrix2C& y)
{
    Matrix2C m;
    for (std::size_t i = 0; i < 4; ++i)
        m.a[i] = x.a[i] + y.a[i];
    return m;
}

Matrix2C operator*(Complex s, const Matrix2C& x)
{
    Matrix2C m;
    for (std::size_t i = 0; i < 4; ++i)
        m.a[i] = s * x.a[i];
    return m;
}

NumericRatFunc::NumericRatFunc(const RatFunc& f)
{
    for (const auto& c : f.num().coeffs())
        num_.push_back(c.get_d());
    for (const auto& c : f.den().coeffs())
        den_.push_back(c.get_d());
}

Complex NumericRatFunc::operator()(Complex y) const
{
    auto horner = [&](const std::vector<double>& c) {
        Complex acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = acc * y + *it;
        return acc;
    };
    if (num_.empty())
        return 0.0;
    return horner(num_) / horner(den_);
}

namespace {

// Dormand-Prince 5(4)
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

Matrix2C rhs(const Coefficient& r, const Segment& seg, double s, const Matrix2C& Y)
{
    Complex v = seg.velocity(s);
    Complex q = r(seg.at(s));
    // d/ds [[z1, z2], [z1', z2']] = y'(s) [[0, 1], [r, 0]] Y
    return {{v * Y.a[2], v * Y.a[3], v * q * Y.a[0], v * q * Y.a[1]}};
}

Matrix2C combo(const Matrix2C& Y, double h, std::initializer_list<std::pair<double, const Matrix2C*>> terms)
{
    Matrix2C out = Y;
    for (const auto& [w, k] : terms)
        if (w != 0)
            for (std::size_t i = 0; i < 4; ++i)
                out.a[i] += h * w * k->a[i];
    return out;
}

double step_ceiling(const Segment& seg, double s, const std::vector<Complex>& singulars)
{
    if (singulars.empty())
        return 0.05;
    Complex y = seg.at(s);
    double dist = std::numeric_limits<double>::infinity();
    for (const auto& p : singulars)
        dist = std::min(dist, std::abs(y - p));
    double speed = std::abs(seg.velocity(s));
    if (speed == 0)
        return 1.0;
    return std::min(0.05, 0.5 * dist / speed);
}

Matrix2C integrate_segment(const Coefficient& r, const Segment& seg, double tol, Matrix2C Y,
                           const std::vector<Complex>& singulars, IntegrationStats& stats)
{
    double s = 0, h = std::min(1e-3, step_ceiling(seg, 0, singulars));
    Matrix2C k1 = rhs(r, seg, s, Y);
    const long max_steps = 5'000'000;
    while (s < 1.0) {
        h = std::min({h, 1.0 - s, step_ceiling(seg, s, singulars)});
        if (h < 1e-14)
            throw IntegrationError("step size underflow at y = (" + std::to_string(seg.at(s).real()) + ", " +
                                   std::to_string(seg.at(s).imag()) + ")");
        Matrix2C k2 = rhs(r, seg, s + c2 * h, combo(Y, h, {{a21, &k1}}));
        Matrix2C k3 = rhs(r, seg, s + c3 * h, combo(Y, h, {{a31, &k1}, {a32, &k2}}));
        Matrix2C k4 = rhs(r, seg, s + c4 * h, combo(Y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        Matrix2C k5 = rhs(r, seg, s + c5 * h, combo(Y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        Matrix2C k6 =
            rhs(r, seg, s + h, combo(Y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        Matrix2C Yn = combo(Y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
        Matrix2C k7 = rhs(r, seg, s + h, Yn);
        double err = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            Complex e = h * (e1 * k1.a[i] + e3 * k3.a[i] + e4 * k4.a[i] + e5 * k5.a[i] + e6 * k6.a[i] +
                             e7 * k7.a[i]);
            double scale = tol * (1.0 + std::max(std::abs(Y.a[i]), std::abs(Yn.a[i])));
            err = std::max(err, std::abs(e) / scale);
        }
        if (!std::isfinite(err))
            throw IntegrationError("non-finite values during integration");
        if (err <= 1.0) {
            s += h;
            Y = Yn;
            k1 = k7;
            ++stats.steps;
        } else {
            ++stats.rejected;
        }
        if (stats.steps + stats.rejected > max_steps)
            throw IntegrationError("step budget exhausted");
        double factor = err == 0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h *= factor;
    }
    return Y;
}

}  // namespace

Matrix2C integrate_ode_along(const Coefficient& r, const PathLoop& path, double tol,
                             const std::vector<Complex>& singulars, IntegrationStats* stats)
{
    if (!(tol > 0))
        throw std::invalid_argument("integration tolerance must be positive");
    IntegrationStats local;
    Matrix2C Y = Matrix2C::identity();
    for (const auto& seg : path.segments)
        Y = integrate_segment(r, seg, tol, Y, singulars, local);
    for (const auto& x : Y.a)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
            throw IntegrationError("non-finite monodromy matrix");
    if (stats)
        *stats = local;
    return Y;
}

Matrix2C integrate_ode_along(const RatFunc& r, const PathLoop& path, double tol, IntegrationStats* stats)
{
    std::vector<Complex> poles;
    for (const auto& root : squarefree_and_roots(r.den()).roots)
        poles.emplace_back(root.value.get_d(), 0.0);
    NumericRatFunc f(r);
    return integrate_ode_along([&f](Complex y) { return f(y); }, path, tol, poles, stats);
}

}  // namespace fuchsian::monodromy
