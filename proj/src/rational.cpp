#include "clzeta/rational.hpp"

#include "clzeta/errors.hpp"

namespace clzeta {

Rational make_rational(long num, long den)
{
    if (den == 0)
        throw InvalidArgumentError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw InvalidArgumentError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational pow(const Rational& base, long exp)
{
    if (exp < 0) {
        if (base == 0)
            throw InvalidArgumentError("zero to a negative power");
        Rational inv = 1 / base;
        return pow(inv, -exp);
    }
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
    return Rational(num, den);
}

BigInt pow(const BigInt& base, unsigned long exp)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

std::string to_string(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const BigInt& z)
{
    return z.get_str();
}

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
        BigInt z;
        std::string str(s);
        if (str.empty() || z.set_str(str, 10) != 0)
            throw InvalidArgumentError("not a rational number: '" + std::string(text) + "'");
        return z;
    };
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational qpochhammer(const Rational& a, const Rational& x, long n)
{
    Rational prod = 1;
    Rational term = a;
    for (long k = 0; k < n; ++k) {
        prod *= 1 - term;
        term *= x;
    }
    return prod;
}

} // namespace clzeta
