#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <k3hilb/laurent_poly.hpp>
#include <k3hilb/series.hpp>

// Motivic generating series of Hilbert schemes of points.
//
// Coefficients live either in Z[L, 1/L] (classes built from the Lefschetz class
// L = [A^1]) or in Z[u, v, 1/(uv)] (E-polynomial realization, L -> uv). On these
// monomially generated rings the power structure is fixed by
//   (1 - T^k)^(-w) = 1 / (1 - w T^k)  for a monomial w,
// extended multiplicatively in the exponent and through integer powers.
namespace k3hilb::motivic {

using Series = TruncatedSeries<LaurentPoly>;

enum class Mode { ClassRing, EPolynomial };

const Alphabet& class_alphabet();
const Alphabet& e_alphabet();

// Throws AlphabetMismatch for any other alphabet.
Mode mode_of(const LaurentPoly& value);

LaurentPoly lefschetz_power(int k);
LaurentPoly uv_power(int k);

// E-polynomial realization of a class-ring element (L -> uv).
LaurentPoly realize(const LaurentPoly& class_value);
Series realize(const Series& class_series);

class OddCohomology : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class RouteDisagreement : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

// Hodge numbers h^{p,q} of a variety of dimension `dim`. Non-compact varieties (affine
// space) are allowed to break Serre symmetry h^{p,q} = h^{dim-p,dim-q}.
class HodgeProfile
{
public:
    using Numbers = std::map<std::pair<int, int>, std::int64_t>;

    HodgeProfile(int dim, Numbers numbers, bool compact = true);

    static HodgeProfile point();
    static HodgeProfile affine_plane();
    static HodgeProfile k3();
    static HodgeProfile projective_plane();
    static HodgeProfile quadric_surface();
    // Even-degree part of an abelian surface: h00 = h22 = 1, h20 = h02 = 1, h11 = 4.
    static HodgeProfile abelian_even_part();

    int dim() const { return dim_; }
    bool compact() const { return compact_; }
    const Numbers& numbers() const { return numbers_; }
    std::int64_t h(int p, int q) const;

    // sum h^{p,q} u^p v^q (no signs: only even cohomology is accepted downstream).
    LaurentPoly e_polynomial() const;
    BigInt euler_characteristic() const;
    bool has_odd_cohomology() const;

private:
    int dim_;
    Numbers numbers_;
    bool compact_;
};

struct HilbSeries {
    Series series;
    int dim = 0;
    std::string source;
    // Set when two independent constructions were compared coefficient-wise.
    bool routes_verified = false;
};

// (1 - T^k)^(-c) = prod_w (1 - w T^k)^(-c_w) for c = sum c_w w.
Series zeta_power(const LaurentPoly& c, std::size_t k, std::size_t order);

// b_1..b_N with a = prod_k (1 - T^k)^(-b_k) up to T^N; a must have constant term 1.
std::vector<LaurentPoly> power_structure_decompose(const Series& a);
Series power_structure_recompose(const std::vector<LaurentPoly>& exponents, std::size_t order,
                                 const Alphabet& alphabet);
// a^M for the power structure; a must have constant term 1.
Series power_structure_pow(const Series& a, const LaurentPoly& exponent);

// Partitions of n as non-increasing part lists.
std::vector<std::vector<int>> partitions(int n);

// [(A^2)^[n]] = sum over partitions of n of L^(n + length).
Series hilb_affine_plane_partition_sum(std::size_t order);
// prod_{m >= 1} (1 - L^(m+1) T^m)^(-1).
Series hilb_affine_plane_product(std::size_t order);
HilbSeries hilb_affine_plane(std::size_t order);

// Kapranov zeta sum [Sym^n Z] T^n in E-polynomials: prod (1 - u^p v^q T)^(-h^{p,q}).
Series sym_series_even(const HodgeProfile& h, std::size_t order);

// (H_{A^2}(T))^((uv)^-2 e(X)) via the power structure.
Series hilb_surface_route_a(const HodgeProfile& h, std::size_t order);
// prod_{m >= 1} zeta_X((uv)^(m-1) T^m).
Series hilb_surface_route_b(const HodgeProfile& h, std::size_t order);
// Route A, checked against route B. Throws RouteDisagreement on any mismatch.
HilbSeries hilb_surface_series(const HodgeProfile& h, std::size_t order);

std::optional<std::size_t> first_difference(const Series& a, const Series& b);

// Hilbert series of the two surfaces agree to the given order.
bool l_equivalence_transfer_check(const HodgeProfile& x, const HodgeProfile& y, std::size_t order);

// Equality in the localized ring (L invertible).
bool l_equivalent(const LaurentPoly& x, const LaurentPoly& y);
// Least m >= 0 such that L^m x and L^m y have no negative powers of L.
int clearing_exponent(const LaurentPoly& x, const LaurentPoly& y);
// L^m (x - y) = 0 with m = clearing_exponent(x, y).
bool l_equivalent_by_clearing(const LaurentPoly& x, const LaurentPoly& y);

} // namespace k3hilb::motivic
