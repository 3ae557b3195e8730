#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace k3hilb {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

// Floor of the square root; m must be nonnegative.
BigInt isqrt(const BigInt& m);

BigInt gcd(const BigInt& a, const BigInt& b);

// Floor division (rounds toward negative infinity), den != 0.
BigInt floor_div(const BigInt& num, const BigInt& den);

// Generalized binomial coefficient C(top, k) for any integer top.
BigInt binomial(const BigInt& top, unsigned k);

std::string to_string(const BigInt& v);

// Parses an optionally signed decimal integer. Throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

} // namespace k3hilb
