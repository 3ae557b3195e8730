#include <k3hilb/bigint.hpp>

#include <stdexcept>

namespace k3hilb {

BigInt isqrt(const BigInt& m)
{
    if (m < 0) {
        throw std::domain_error("isqrt of a negative integer");
    }
    return boost::multiprecision::sqrt(m);
}

BigInt gcd(const BigInt& a, const BigInt& b)
{
    return boost::multiprecision::gcd(a, b);
}

BigInt floor_div(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw std::domain_error("division by zero");
    }
    BigInt q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) {
        --q;
    }
    return q;
}

BigInt binomial(const BigInt& top, unsigned k)
{
    BigInt num = 1;
    BigInt den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= top - i;
        den *= i + 1;
    }
    return num / den;
}

std::string to_string(const BigInt& v)
{
    return v.str();
}

BigInt parse_bigint(std::string_view text)
{
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    BigInt v = 0;
    for (; pos < text.size(); ++pos) {
        const char ch = text[pos];
        if (ch < '0' || ch > '9') {
            throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
        }
        v = v * 10 + (ch - '0');
    }
    return negative ? BigInt(-v) : v;
}

} // namespace k3hilb
