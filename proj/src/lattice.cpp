#include <k3hilb/lattice.hpp>

namespace k3hilb::lattice {

namespace {

void check_params(const DivisorClass& x, const DivisorClass& y)
{
    if (x.d != y.d || x.n != y.n) {
        throw ParameterMismatch("divisor classes live on different Hilbert schemes");
    }
}

} // namespace

DivisorClass h_tilde(std::int64_t d, std::int64_t n)
{
    return {1, 0, d, n};
}

DivisorClass half_exceptional(std::int64_t d, std::int64_t n)
{
    return {0, 1, d, n};
}

BigInt mukai_pairing(const MukaiVector& v, const MukaiVector& w)
{
    if (v.d != w.d) {
        throw ParameterMismatch("Mukai vectors over K3 surfaces of different degree");
    }
    return 2 * BigInt(v.d) * v.c * w.c - v.r * w.s - v.s * w.r;
}

MukaiVector embed(const DivisorClass& divisor)
{
    return {-divisor.b, -divisor.a, divisor.b * (1 - divisor.n), divisor.d};
}

BigInt bbf_pair(const DivisorClass& x, const DivisorClass& y)
{
    check_params(x, y);
    return 2 * BigInt(x.d) * x.a * y.a - 2 * BigInt(x.n - 1) * x.b * y.b;
}

BigInt bbf_q(const DivisorClass& divisor)
{
    return bbf_pair(divisor, divisor);
}

bool is_primitive(const DivisorClass& divisor)
{
    return gcd(divisor.a, divisor.b) == 1;
}

} // namespace k3hilb::lattice
