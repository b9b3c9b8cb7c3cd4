#include "fuchsian/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace fuchsian::monodromy {

Segment Segment::line(Complex a, Complex b)
{
    Segment s;
    s.kind = Kind::Line;
    s.from = a;
    s.to = b;
    return s;
}

Segment Segment::arc(Complex center, double radius, double start_angle, double sweep)
{
    Segment s;
    s.kind = Kind::Arc;
    s.center = center;
    s.radius = radius;
    s.start_angle = start_angle;
    s.sweep = sweep;
    s.from = center + std::polar(radius, start_angle);
    s.to = center + std::polar(radius, start_angle + sweep);
    return s;
}

Complex Segment::at(double s) const
{
    if (kind == Kind::Line)
        return from + s * (to - from);
    return center + std::polar(radius, start_angle + s * sweep);
}

Complex Segment::velocity(double s) const
{
    if (kind == Kind::Line)
        return to - from;
    return Complex(0, sweep) * std::polar(radius, start_angle + s * sweep);
}

Segment Segment::reversed() const
{
    if (kind == Kind::Line)
        return line(to, from);
    return arc(center, radius, start_angle + sweep, -sweep);
}

bool PathLoop::closed(double tol) const
{
    if (segments.empty())
        return true;
    if (std::abs(segments.front().from - base) > tol || std::abs(segments.back().to - base) > tol)
        return false;
    for (std::size_t i = 1; i < segments.size(); ++i)
        if (std::abs(segments[i].from - segments[i - 1].to) > tol)
            return false;
    return true;
}

PathLoop PathLoop::reversed() const
{
    PathLoop out = *this;
    out.segments.clear();
    for (auto it = segments.rbegin(); it != segments.rend(); ++it)
        out.segments.push_back(it->reversed());
    return out;
}

namespace {

double distance_to_segment(Complex p, Complex a, Complex b)
{
    Complex d = b - a;
    double len2 = std::norm(d);
    if (len2 == 0)
        return std::abs(p - a);
    double t = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + t * d));
}

PathLoop lasso(Complex base, Complex center, double radius, double sweep)
{
    Complex dir = (center - base) / std::abs(center - base);
    Complex foot = center - radius * dir;
    double angle = std::arg(foot - center);
    PathLoop loop;
    loop.base = base;
    loop.segments = {Segment::line(base, foot), Segment::arc(center, radius, angle, sweep), Segment::line(foot, base)};
    loop.clearance = radius;
    return loop;
}

}  // namespace

std::vector<PathLoop> standard_loops(const std::vector<Complex>& singulars, Complex base)
{
    const std::size_t n = singulars.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(singulars[i] - base) < 1e-9)
            throw std::invalid_argument("base point coincides with a singular point");
        for (std::size_t j = 0; j < i; ++j)
            if (std::abs(singulars[i] - singulars[j]) < 1e-12)
                throw std::invalid_argument("singular points must be distinct");
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::arg(singulars[a] - base) > std::arg(singulars[b] - base);
    });

    std::vector<PathLoop> loops;
    for (std::size_t i : order) {
        const Complex s = singulars[i];
        double radius = 0.5 * std::abs(s - base);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                radius = std::min(radius, 0.5 * std::abs(s - singulars[j]));
        PathLoop loop = lasso(base, s, radius, 2 * std::numbers::pi);
        const Complex foot = loop.segments.front().to;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i)
                continue;
            double d = distance_to_segment(singulars[j], base, foot);
            if (d < 1e-6 * (1 + std::abs(s - base)))
                throw std::invalid_argument("singular points aligned with the base point; move the base");
            loop.clearance = std::min(loop.clearance, d);
        }
        loop.encircled = s;
        loops.push_back(std::move(loop));
    }
    return loops;
}

PathLoop enclosing_loop(const std::vector<Complex>& singulars, Complex base)
{
    Complex center = 0;
    for (const auto& s : singulars)
        center += s;
    if (!singulars.empty())
        center /= static_cast<double>(singulars.size());
    double reach = 0;
    for (const auto& s : singulars)
        reach = std::max(reach, std::abs(s - center));
    const double rb = std::abs(base - center);

    PathLoop loop;
    loop.base = base;
    if (rb > 1.05 * reach && rb > 0) {
        loop.segments = {Segment::arc(center, rb, std::arg(base - center), 2 * std::numbers::pi)};
    } else {
        // reach out radially to a circle of twice the spread
        Complex dir = rb > 0 ? (base - center) / rb : Complex(0, -1);
        double R = 2 * std::max(reach, rb) + 1;
        Complex out = center + R * dir;
        loop.segments = {Segment::line(base, out), Segment::arc(center, R, std::arg(dir), 2 * std::numbers::pi),
                         Segment::line(out, base)};
    }
    double clearance = std::numeric_limits<double>::infinity();
    for (const auto& s : singulars)
        for (const auto& seg : loop.segments)
            clearance = std::min(clearance, seg.kind == Segment::Kind::Line
                                                ? distance_to_segment(s, seg.from, seg.to)
                                                : std::abs(std::abs(s - seg.center) - seg.radius));
    if (clearance < 1e-9)
        throw std::invalid_argument("enclosing loop passes through a singular point");
    loop.clearance = clearance;
    return loop;
}

Complex default_base(const std::vector<Complex>& singulars)
{
    if (singulars.empty())
        return Complex(0, -1);
    double lo = singulars.front().real(), hi = lo, low_im = singulars.front().imag();
    for (const auto& s : singulars) {
        lo = std::min(lo, s.real());
        hi = std::max(hi, s.real());
        low_im = std::min(low_im, s.imag());
    }
    double spread = std::max(1.0, hi - lo);
    return Complex(0.5 * (lo + hi), low_im - spread);
}

}  // namespace fuchsian::monodromy
