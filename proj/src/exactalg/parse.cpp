#include "fuchsian/exactalg/parse.hpp"

#include <cctype>
#include <string>

namespace fuchsian {

namespace {

class Parser {
public:
    Parser(std::string_view s, char var) : s_(s), var_(var) {}

    RatFunc parse()
    {
        RatFunc v = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw AlgebraError("cannot parse rational function \"" + std::string(s_) + "\" at offset " +
                           std::to_string(pos_) + ": " + what);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool starts_primary()
    {
        skip();
        if (pos_ >= s_.size())
            return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == var_ || c == '(';
    }

    RatFunc expr()
    {
        RatFunc v = term();
        while (true) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    RatFunc term()
    {
        RatFunc v = unary();
        while (true) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                RatFunc d = unary();
                if (d.is_zero())
                    fail("division by zero");
                v = v / d;
            } else if (starts_primary()) {
                v *= power();
            } else {
                return v;
            }
        }
    }

    RatFunc unary()
    {
        if (eat('-'))
            return -unary();
        if (eat('+'))
            return unary();
        return power();
    }

    RatFunc power()
    {
        RatFunc base = primary();
        if (!eat('^'))
            return base;
        bool neg = eat('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("exponent must be an integer");
        if (pos_ - start > 4)
            fail("exponent too large");
        int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
        if (neg && base.is_zero())
            fail("zero to a negative power");
        RatFunc out = RatFunc::constant(1);
        for (int i = 0; i < e; ++i)
            out *= base;
        return neg ? out.inverse() : out;
    }

    RatFunc primary()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            if (!eat(')'))
                fail("missing ')'");
            return v;
        }
        if (c == var_) {
            ++pos_;
            return RatFunc::identity();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
                fail("decimal numbers are not accepted; write p/q");
            return RatFunc::constant(Rational(BigInt(std::string(s_.substr(start, pos_ - start)))));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    char var_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text, char var)
{
    return Parser(text, var).parse();
}

}  // namespace fuchsian
