#include "fuchsian/bounds.hpp"

#include <cmath>
#include <string>

namespace fuchsian::bounds {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw BoundError(what);
}

void check_size(double log10_value)
{
    if (!(log10_value < kMaxDigits))
        throw BoundError("bound has about 10^" + std::to_string(std::log10(log10_value)) +
                         " digits, beyond the configured limit");
}

BigInt pow_big(const BigInt& base, unsigned long e)
{
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

}  // namespace

double zariski_closure_log10(const ZariskiInput& in)
{
    double e = std::exp2(static_cast<double>(in.m) * static_cast<double>(in.ell));
    return static_cast<double>(in.ell) * e * std::log10(static_cast<double>(in.deg_x)) +
           (e - 1) * std::log10(static_cast<double>(in.deg_s));
}

double andre_pink_log10(long r, long n, long deg_v)
{
    double e = std::exp2(3.0 * static_cast<double>(n)) - 1;
    return e * (static_cast<double>(n) * std::log10(2.0 * static_cast<double>(r) + 2) +
                std::log10(static_cast<double>(deg_v)));
}

BigInt zariski_closure_bound(const ZariskiInput& in)
{
    require(in.deg_x >= 1 && in.deg_s >= 1, "degrees must be positive");
    require(in.m >= 1 && in.ell >= 1, "dimension and prolongation order must be positive");
    require(in.m * in.ell < 63, "2^(m ell) does not fit in 64 bits");
    check_size(zariski_closure_log10(in));
    const unsigned long e = 1UL << (in.m * in.ell);
    return pow_big(BigInt(in.deg_x), static_cast<unsigned long>(in.ell) * e) * pow_big(BigInt(in.deg_s), e - 1);
}

BigInt andre_pink_bound(long r, long n, long deg_v)
{
    require(r >= 3, "r must be at least 3");
    require(n >= 1, "n must be at least 1");
    require(deg_v >= 1, "deg V must be positive");
    require(3 * n < 63, "2^(3n) does not fit in 64 bits");
    check_size(andre_pink_log10(r, n, deg_v));
    const BigInt base = pow_big(BigInt(2 * r + 2), static_cast<unsigned long>(n)) * deg_v;
    return pow_big(base, (1UL << (3 * n)) - 1);
}

std::size_t decimal_digits(const BigInt& v)
{
    std::string s = BigInt(abs(v)).get_str();
    return s.size();
}

}  // namespace fuchsian::bounds
