#include "zetadyn/rational.hpp"

#include "zetadyn/error.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace zetadyn {

Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw Error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    // mpq_class is always kept canonical, so get_str already drops "/1".
    return q.get_str();
}

std::string to_string(const BigInt& n) { return n.get_str(); }

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(BigInt(std::string(text)));
        BigInt num(std::string(text.substr(0, slash)));
        BigInt den(std::string(text.substr(slash + 1)));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational '" + std::string(text) + "'");
    }
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

BigInt ipow(const BigInt& base, unsigned long exponent)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational rpow(const Rational& base, long exponent)
{
    if (exponent >= 0) {
        const auto e = static_cast<unsigned long>(exponent);
        return make_rational(ipow(base.get_num(), e), ipow(base.get_den(), e));
    }
    if (base == 0)
        throw Error("zero raised to a negative power");
    const auto e = static_cast<unsigned long>(-exponent);
    return make_rational(ipow(base.get_den(), e), ipow(base.get_num(), e));
}

double log_of(const BigInt& n)
{
    if (n <= 0)
        throw Error("log of a non-positive integer");
    long exp2 = 0;
    const double mantissa = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
}

std::string to_decimal(double value, int significant_digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
    return buf;
}

} // namespace zetadyn
