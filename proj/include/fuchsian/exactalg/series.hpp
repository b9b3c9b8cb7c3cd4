#ifndef FUCHSIAN_EXACTALG_SERIES_HPP
#define FUCHSIAN_EXACTALG_SERIES_HPP

#include "fuchsian/exactalg/rational.hpp"

#include <algorithm>
#include <climits>
#include <complex>
#include <stdexcept>
#include <vector>

namespace fuchsian {

/// Raised when a series computation would need coefficients beyond the
/// known truncation order, or inverts a series with no known leading term.
class TruncationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace detail {
inline bool is_exact_zero(const Rational& c) { return c == 0; }
inline bool is_exact_zero(const std::complex<double>& c) { return c == std::complex<double>(0.0); }
}  // namespace detail

/// Truncated Laurent series sum_{k >= val} c_k t^k + O(t^prec).
///
/// Coefficients are known exactly for val <= k < prec. Every operation
/// returns the largest precision justified by its operands, so a
/// coefficient is never reported unless it is determined. A series whose
/// known coefficients all vanish has val == prec.
template <class T>
class Series {
public:
    Series() = default;

    Series(int valuation, std::vector<T> coeffs, int precision)
        : val_(valuation), prec_(precision), c_(std::move(coeffs))
    {
        if (val_ + static_cast<int>(c_.size()) > prec_)
            c_.resize(static_cast<std::size_t>(std::max(0, prec_ - val_)));
        normalize();
    }

    static Series zero(int precision) { return Series(precision, {}, precision); }
    static Series constant(const T& c, int precision) { return Series(0, {c}, precision); }
    /// The series variable t.
    static Series variable(int precision) { return Series(1, {T(1)}, precision); }
    /// Exact polynomial truncated at the given precision.
    static Series from_coefficients(const std::vector<T>& coeffs, int precision)
    {
        return Series(0, coeffs, precision);
    }

    int valuation() const { return val_; }
    int precision() const { return prec_; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }

    /// Coefficient of t^k; throws if k is beyond the truncation order.
    T coeff(int k) const
    {
        if (k >= prec_)
            throw TruncationError("coefficient requested beyond truncation order");
        if (k < val_ || k - val_ >= static_cast<int>(c_.size()))
            return T(0);
        return c_[static_cast<std::size_t>(k - val_)];
    }

    T leading() const
    {
        if (c_.empty())
            throw TruncationError("series has no known nonzero coefficient");
        return c_.front();
    }

    Series truncate(int precision) const
    {
        return Series(val_, c_, std::min(prec_, precision));
    }

    Series derivative() const
    {
        std::vector<T> d;
        int v = val_ - 1;
        for (std::size_t i = 0; i < c_.size(); ++i)
            d.push_back(c_[i] * T(static_cast<long>(val_) + static_cast<long>(i)));
        return Series(v, std::move(d), prec_ - 1);
    }

    /// t * d/dt; precision is unchanged.
    Series log_derivative_operator() const
    {
        std::vector<T> d;
        for (std::size_t i = 0; i < c_.size(); ++i)
            d.push_back(c_[i] * T(static_cast<long>(val_) + static_cast<long>(i)));
        return Series(val_, std::move(d), prec_);
    }

    /// t -> t^k for k >= 1
    Series substitute_power(int k) const
    {
        if (k < 1)
            throw std::invalid_argument("substitute_power needs k >= 1");
        std::vector<T> out;
        if (!c_.empty())
            out.assign((c_.size() - 1) * static_cast<std::size_t>(k) + 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            out[i * static_cast<std::size_t>(k)] = c_[i];
        return Series(val_ * k, std::move(out), prec_ * k);
    }

    Series inverse() const
    {
        if (c_.empty())
            throw TruncationError("cannot invert a series with no known leading term");
        int len = prec_ - val_;
        std::vector<T> b(static_cast<std::size_t>(len));
        T inv0 = T(1) / c_[0];
        b[0] = inv0;
        for (int n = 1; n < len; ++n) {
            T acc(0);
            int top = std::min(n, static_cast<int>(c_.size()) - 1);
            for (int k = 1; k <= top; ++k)
                acc += c_[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(n - k)];
            b[static_cast<std::size_t>(n)] = -acc * inv0;
        }
        return Series(-val_, std::move(b), -val_ + len);
    }

    Series pow(int n) const
    {
        if (n < 0)
            return inverse().pow(-n);
        Series acc = constant(T(1), INT_MAX / 4), base = *this;
        while (n > 0) {
            if (n & 1)
                acc = acc * base;
            n >>= 1;
            if (n)
                base = base * base;
        }
        return acc;
    }

    /// f(g(t)) for g with positive valuation.
    Series compose(const Series& g) const
    {
        if (g.is_zero() || g.valuation() < 1)
            throw TruncationError("composition needs an inner series of positive valuation");
        int cap = prec_ >= 0 ? prec_ * g.valuation() : INT_MAX / 4;
        Series acc = zero(cap);
        if (c_.empty())
            return acc;
        Series gp = g.pow(val_);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!detail::is_exact_zero(c_[i]))
                acc = acc + gp * c_[i];
            if (i + 1 < c_.size())
                gp = gp * g;
        }
        return acc.truncate(cap);
    }

    friend Series operator+(const Series& a, const Series& b)
    {
        int prec = std::min(a.prec_, b.prec_);
        if (a.c_.empty() && b.c_.empty())
            return zero(prec);
        int val = std::min(a.c_.empty() ? b.val_ : a.val_, b.c_.empty() ? a.val_ : b.val_);
        if (val >= prec)
            return zero(prec);
        // coefficients past the stored ones are known zeros
        int end = std::max(a.c_.empty() ? val : a.val_ + static_cast<int>(a.c_.size()),
                           b.c_.empty() ? val : b.val_ + static_cast<int>(b.c_.size()));
        std::vector<T> out(static_cast<std::size_t>(std::min(prec, end) - val), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            int k = a.val_ + static_cast<int>(i);
            if (k < prec)
                out[static_cast<std::size_t>(k - val)] += a.c_[i];
        }
        for (std::size_t i = 0; i < b.c_.size(); ++i) {
            int k = b.val_ + static_cast<int>(i);
            if (k < prec)
                out[static_cast<std::size_t>(k - val)] += b.c_[i];
        }
        return Series(val, std::move(out), prec);
    }

    friend Series operator-(const Series& a) { return a * T(-1); }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

    friend Series operator*(const Series& a, const Series& b)
    {
        int prec = std::min(sat_add(a.val_, b.prec_), sat_add(b.val_, a.prec_));
        if (a.c_.empty() || b.c_.empty())
            return zero(prec);
        int val = a.val_ + b.val_;
        int len = std::min(prec - val, static_cast<int>(a.c_.size() + b.c_.size()) - 1);
        if (len <= 0)
            return zero(prec);
        std::vector<T> out(static_cast<std::size_t>(len), T(0));
        for (std::size_t i = 0; i < a.c_.size() && static_cast<int>(i) < len; ++i) {
            if (detail::is_exact_zero(a.c_[i]))
                continue;
            std::size_t jmax = std::min(b.c_.size(), static_cast<std::size_t>(len) - i);
            for (std::size_t j = 0; j < jmax; ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        }
        return Series(val, std::move(out), prec);
    }

    friend Series operator*(const Series& a, const T& s)
    {
        if (detail::is_exact_zero(s))
            return zero(a.prec_);
        std::vector<T> out(a.c_);
        for (auto& c : out)
            c *= s;
        return Series(a.val_, std::move(out), a.prec_);
    }
    friend Series operator*(const T& s, const Series& a) { return a * s; }
    friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

    /// Equality of the known coefficients up to the common precision.
    friend bool agree(const Series& a, const Series& b) { return (a - b).is_zero(); }

private:
    static int sat_add(int x, int y)
    {
        long s = static_cast<long>(x) + y;
        return static_cast<int>(std::clamp<long>(s, INT_MIN / 4, INT_MAX / 4));
    }

    void normalize()
    {
        std::size_t lead = 0;
        while (lead < c_.size() && detail::is_exact_zero(c_[lead]))
            ++lead;
        if (lead == c_.size()) {
            c_.clear();
            val_ = prec_;
            return;
        }
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            val_ += static_cast<int>(lead);
        }
        std::size_t end = c_.size();
        while (end > 0 && detail::is_exact_zero(c_[end - 1]))
            --end;
        c_.resize(end);
    }

    int val_ = 0;
    int prec_ = 0;
    std::vector<T> c_;
};

using RationalSeries = Series<Rational>;
using ComplexSeries = Series<std::complex<double>>;

}  // namespace fuchsian

#endif
