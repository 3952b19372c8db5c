#include "fibvar/rational.hpp"

#include <stdexcept>

namespace fibvar {

Rational make_rational(const BigInt& numerator, const BigInt& denominator)
{
    if (denominator == 0)
        throw std::domain_error("rational with zero denominator");
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

Rational decimal_unit(int digits)
{
    if (digits < 0)
        throw std::domain_error("negative decimal digit count");
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    return make_rational(1, scale);
}

std::string to_decimal(const Rational& q, int digits)
{
    if (digits < 0)
        throw std::domain_error("negative decimal digit count");
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

    // round |q| * 10^digits to nearest, half away from zero
    const bool negative = sgn(q) < 0;
    const Rational magnitude = abs(q) * scale;
    BigInt twice = 2 * magnitude.get_num() + magnitude.get_den();
    BigInt rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), twice.get_mpz_t(), BigInt(2 * magnitude.get_den()).get_mpz_t());

    std::string text = rounded.get_str();
    if (digits > 0) {
        if (text.size() <= static_cast<std::size_t>(digits))
            text.insert(0, static_cast<std::size_t>(digits) + 1 - text.size(), '0');
        text.insert(text.size() - static_cast<std::size_t>(digits), 1, '.');
    }
    if (negative && rounded != 0)
        text.insert(0, 1, '-');
    return text;
}

} // namespace fibvar
