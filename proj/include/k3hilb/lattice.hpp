#pragma once

#include <cstdint>
#include <stdexcept>

#include <k3hilb/bigint.hpp>

// Rank-2 Picard lattice Z Ht + Z B of the Hilbert scheme of n points on a Picard-rank-1
// K3 surface of degree 2d, and its isometric image in the Mukai lattice
// H^0 + Pic + H^4 with pairing (r, L, s).(r', L', s') = L L' - r s' - s r'.
namespace k3hilb::lattice {

class ParameterMismatch : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// (r, c H, s) with H^2 = 2d.
struct MukaiVector {
    BigInt r;
    BigInt c;
    BigInt s;
    std::int64_t d = 1;

    friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

// a Ht + b B in Pic of the Hilbert scheme; Ht pulls back the ample generator through the
// Hilbert-Chow morphism, B is half the exceptional divisor.
struct DivisorClass {
    BigInt a;
    BigInt b;
    std::int64_t d = 1;
    std::int64_t n = 2;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass h_tilde(std::int64_t d, std::int64_t n);
DivisorClass half_exceptional(std::int64_t d, std::int64_t n);

BigInt mukai_pairing(const MukaiVector& v, const MukaiVector& w);

// Ht -> (0, -H, 0), B -> (-1, 0, 1 - n), extended linearly.
MukaiVector embed(const DivisorClass& divisor);

// q(a Ht + b B) = 2d a^2 - 2(n - 1) b^2.
BigInt bbf_q(const DivisorClass& divisor);
BigInt bbf_pair(const DivisorClass& x, const DivisorClass& y);

// gcd(a, b) == 1.
bool is_primitive(const DivisorClass& divisor);

} // namespace k3hilb::lattice
