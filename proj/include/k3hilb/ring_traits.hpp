#pragma once

#include <k3hilb/bigint.hpp>

namespace k3hilb {

// Customization point for coefficient rings of TruncatedSeries.
//
// A specialization provides:
//   static R zero_like(const R&);      additive identity compatible with the argument
//   static R one_like(const R&);       multiplicative identity compatible with the argument
//   static bool is_unit(const R&);
//   static R unit_inverse(const R&);   precondition: is_unit
template <typename R>
struct RingTraits;

template <>
struct RingTraits<BigInt> {
    static BigInt zero_like(const BigInt&) { return 0; }
    static BigInt one_like(const BigInt&) { return 1; }
    static bool is_unit(const BigInt& v) { return v == 1 || v == -1; }
    static BigInt unit_inverse(const BigInt& v) { return v; }
};

} // namespace k3hilb
