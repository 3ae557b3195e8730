#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <k3hilb/bigint.hpp>
#include <k3hilb/ring_traits.hpp>

namespace k3hilb {

using Alphabet = std::vector<std::string>;
using Exponents = std::vector<int>;

class AlphabetMismatch : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Sparse Laurent polynomial with integer coefficients over a fixed, ordered
// variable alphabet. Terms with zero coefficient are never stored.
class LaurentPoly
{
public:
    using Terms = std::map<Exponents, BigInt>;

    LaurentPoly() = default;
    explicit LaurentPoly(Alphabet alphabet);
    LaurentPoly(Alphabet alphabet, Terms terms);

    static LaurentPoly constant(Alphabet alphabet, const BigInt& c);
    static LaurentPoly monomial(Alphabet alphabet, Exponents exps, const BigInt& c = 1);
    static LaurentPoly variable(Alphabet alphabet, std::string_view name, int power = 1);

    const Alphabet& alphabet() const { return alphabet_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    BigInt coefficient(const Exponents& exps) const;
    // Value at every variable = 1.
    BigInt at_ones() const;
    // Smallest exponent of variable i over all terms (0 for the zero polynomial).
    int min_exponent(std::size_t i) const;
    bool is_monomial() const { return terms_.size() == 1; }

    // Multiplies by the monomial x^exps (exponent shift).
    LaurentPoly shifted(const Exponents& exps) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const BigInt& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const BigInt& c) { return a *= c; }
    friend LaurentPoly operator*(const BigInt& c, LaurentPoly a) { return a *= c; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    // Human-readable form, terms in descending exponent order, e.g. "L^4 + L^3".
    std::string to_string() const;

private:
    void check_same_alphabet(const LaurentPoly& o) const;
    void check_exponents(const Exponents& exps) const;

    Alphabet alphabet_;
    Terms terms_;
};

template <>
struct RingTraits<LaurentPoly> {
    static LaurentPoly zero_like(const LaurentPoly& p) { return LaurentPoly(p.alphabet()); }
    static LaurentPoly one_like(const LaurentPoly& p) { return LaurentPoly::constant(p.alphabet(), 1); }
    static bool is_unit(const LaurentPoly& p);
    static LaurentPoly unit_inverse(const LaurentPoly& p);
};

} // namespace k3hilb
