#include "fuchsian/exactalg/rational.hpp"

#include <cctype>

namespace fuchsian {

Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw AlgebraError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole)
{
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+'))
        ++i;
    if (i == text.size())
        throw AlgebraError("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t k = i; k < text.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw AlgebraError("malformed rational: '" + std::string(whole) + "'");
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return BigInt(digits, 10);
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(s, text));
    auto num = parse_integer(trim(s.substr(0, slash)), text);
    auto den_text = trim(s.substr(slash + 1));
    if (!den_text.empty() && den_text[0] == '-')
        throw AlgebraError("denominator must be positive: '" + std::string(text) + "'");
    return make_rational(num, parse_integer(den_text, text));
}

std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

BigInt floor(const Rational& q)
{
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

std::optional<Rational> exact_sqrt(const Rational& q)
{
    if (q < 0)
        return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return std::nullopt;
    BigInt n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    return make_rational(n, d);
}

}  // namespace fuchsian
