#include <k3hilb/motivic.hpp>

#include <algorithm>
#include <functional>

namespace k3hilb::motivic {

const Alphabet& class_alphabet()
{
    static const Alphabet a{"L"};
    return a;
}

const Alphabet& e_alphabet()
{
    static const Alphabet a{"u", "v"};
    return a;
}

Mode mode_of(const LaurentPoly& value)
{
    if (value.alphabet() == class_alphabet()) {
        return Mode::ClassRing;
    }
    if (value.alphabet() == e_alphabet()) {
        return Mode::EPolynomial;
    }
    throw AlphabetMismatch("motivic values use the alphabet {L} or {u, v}");
}

LaurentPoly lefschetz_power(int k)
{
    return LaurentPoly::monomial(class_alphabet(), {k});
}

LaurentPoly uv_power(int k)
{
    return LaurentPoly::monomial(e_alphabet(), {k, k});
}

LaurentPoly realize(const LaurentPoly& class_value)
{
    if (mode_of(class_value) != Mode::ClassRing) {
        throw AlphabetMismatch("realize expects a class-ring value");
    }
    LaurentPoly::Terms terms;
    for (const auto& [exps, c] : class_value.terms()) {
        terms.emplace(Exponents{exps[0], exps[0]}, c);
    }
    return LaurentPoly(e_alphabet(), std::move(terms));
}

Series realize(const Series& class_series)
{
    std::vector<LaurentPoly> coeffs;
    coeffs.reserve(class_series.order() + 1);
    for (const auto& c : class_series.coeffs()) {
        coeffs.push_back(realize(c));
    }
    return Series(class_series.order(), std::move(coeffs));
}

// ---------------------------------------------------------------------------
// HodgeProfile

HodgeProfile::HodgeProfile(int dim, Numbers numbers, bool compact)
    : dim_(dim), compact_(compact)
{
    if (dim < 0) {
        throw std::invalid_argument("negative dimension");
    }
    for (const auto& [pq, h] : numbers) {
        const auto [p, q] = pq;
        if (p < 0 || q < 0 || p > dim || q > dim) {
            throw std::invalid_argument("Hodge index out of range");
        }
        if (h < 0) {
            throw std::invalid_argument("negative Hodge number");
        }
        if (h != 0) {
            numbers_.emplace(pq, h);
        }
    }
    for (const auto& [pq, h] : numbers_) {
        const auto [p, q] = pq;
        if (this->h(q, p) != h) {
            throw std::invalid_argument("Hodge numbers violate h^{p,q} = h^{q,p}");
        }
        if (compact_ && this->h(dim - p, dim - q) != h) {
            throw std::invalid_argument("Hodge numbers violate Serre symmetry");
        }
    }
}

HodgeProfile HodgeProfile::point()
{
    return HodgeProfile(0, {{{0, 0}, 1}});
}

HodgeProfile HodgeProfile::affine_plane()
{
    return HodgeProfile(2, {{{2, 2}, 1}}, false);
}

HodgeProfile HodgeProfile::k3()
{
    return HodgeProfile(2, {{{0, 0}, 1}, {{2, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 20}, {{2, 2}, 1}});
}

HodgeProfile HodgeProfile::projective_plane()
{
    return HodgeProfile(2, {{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}});
}

HodgeProfile HodgeProfile::quadric_surface()
{
    return HodgeProfile(2, {{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}});
}

HodgeProfile HodgeProfile::abelian_even_part()
{
    return HodgeProfile(2, {{{0, 0}, 1}, {{2, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 4}, {{2, 2}, 1}});
}

std::int64_t HodgeProfile::h(int p, int q) const
{
    const auto it = numbers_.find({p, q});
    return it == numbers_.end() ? 0 : it->second;
}

LaurentPoly HodgeProfile::e_polynomial() const
{
    LaurentPoly::Terms terms;
    for (const auto& [pq, h] : numbers_) {
        terms.emplace(Exponents{pq.first, pq.second}, BigInt(h));
    }
    return LaurentPoly(e_alphabet(), std::move(terms));
}

BigInt HodgeProfile::euler_characteristic() const
{
    BigInt chi = 0;
    for (const auto& [pq, h] : numbers_) {
        chi += (pq.first + pq.second) % 2 == 0 ? BigInt(h) : BigInt(-h);
    }
    return chi;
}

bool HodgeProfile::has_odd_cohomology() const
{
    return std::any_of(numbers_.begin(), numbers_.end(),
                       [](const auto& e) { return (e.first.first + e.first.second) % 2 != 0; });
}

// ---------------------------------------------------------------------------
// Power structure

namespace {

void require_unit_constant(const Series& a)
{
    if (a[0] != RingTraits<LaurentPoly>::one_like(a[0])) {
        throw std::invalid_argument("power structure needs constant term 1");
    }
}

} // namespace

Series zeta_power(const LaurentPoly& c, std::size_t k, std::size_t order)
{
    if (k == 0) {
        throw std::invalid_argument("zeta_power needs k >= 1");
    }
    Series result = Series::one(order, LaurentPoly(c.alphabet()));
    for (const auto& [w, cw] : c.terms()) {
        // (1 - x)^(-cw) = sum_j C(cw + j - 1, j) x^j, any integer cw.
        std::vector<LaurentPoly> coeffs(order + 1, LaurentPoly(c.alphabet()));
        const LaurentPoly mono = LaurentPoly::monomial(c.alphabet(), w);
        LaurentPoly mono_pow = LaurentPoly::constant(c.alphabet(), 1);
        for (std::size_t j = 0; j * k <= order; ++j) {
            coeffs[j * k] = mono_pow * binomial(cw + j - 1, static_cast<unsigned>(j));
            mono_pow *= mono;
        }
        result = result * Series(order, std::move(coeffs));
    }
    return result;
}

std::vector<LaurentPoly> power_structure_decompose(const Series& a)
{
    require_unit_constant(a);
    std::vector<LaurentPoly> b;
    b.reserve(a.order());
    Series rest = a;
    for (std::size_t k = 1; k <= a.order(); ++k) {
        // Remaining factors are 1 + b_k T^k + O(T^(k+1)).
        b.push_back(rest[k]);
        if (!rest[k].is_zero()) {
            rest = rest * zeta_power(-rest[k], k, a.order());
        }
    }
    return b;
}

Series power_structure_recompose(const std::vector<LaurentPoly>& exponents, std::size_t order,
                                 const Alphabet& alphabet)
{
    Series result = Series::one(order, LaurentPoly(alphabet));
    for (std::size_t k = 1; k <= std::min(order, exponents.size()); ++k) {
        if (!exponents[k - 1].is_zero()) {
            result = result * zeta_power(exponents[k - 1], k, order);
        }
    }
    return result;
}

Series power_structure_pow(const Series& a, const LaurentPoly& exponent)
{
    std::vector<LaurentPoly> b = power_structure_decompose(a);
    for (auto& bk : b) {
        bk *= exponent;
    }
    return power_structure_recompose(b, a.order(), a[0].alphabet());
}

// ---------------------------------------------------------------------------
// Hilbert series

std::vector<std::vector<int>> partitions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    if (n >= 0) {
        rec(n, n);
    }
    return out;
}

Series hilb_affine_plane_partition_sum(std::size_t order)
{
    std::vector<LaurentPoly> coeffs;
    for (std::size_t n = 0; n <= order; ++n) {
        LaurentPoly c(class_alphabet());
        for (const auto& lambda : partitions(static_cast<int>(n))) {
            c += lefschetz_power(static_cast<int>(n + lambda.size()));
        }
        coeffs.push_back(std::move(c));
    }
    return Series(order, std::move(coeffs));
}

Series hilb_affine_plane_product(std::size_t order)
{
    Series result = Series::one(order, LaurentPoly(class_alphabet()));
    for (std::size_t m = 1; m <= order; ++m) {
        result = result * zeta_power(lefschetz_power(static_cast<int>(m + 1)), m, order);
    }
    return result;
}

HilbSeries hilb_affine_plane(std::size_t order)
{
    Series product = hilb_affine_plane_product(order);
    if (product != hilb_affine_plane_partition_sum(order)) {
        throw RouteDisagreement("affine plane: product and partition sum differ");
    }
    return {std::move(product), 2, "affine-space", true};
}

Series sym_series_even(const HodgeProfile& h, std::size_t order)
{
    if (h.has_odd_cohomology()) {
        throw OddCohomology("symmetric powers with odd cohomology are not supported");
    }
    return zeta_power(h.e_polynomial(), 1, order);
}

Series hilb_surface_route_a(const HodgeProfile& h, std::size_t order)
{
    if (h.dim() != 2) {
        throw std::invalid_argument("Hilbert series are computed for surfaces only");
    }
    if (h.has_odd_cohomology()) {
        throw OddCohomology("surfaces with odd cohomology are not supported");
    }
    const Series affine = realize(hilb_affine_plane(order).series);
    return power_structure_pow(affine, uv_power(-2) * h.e_polynomial());
}

Series hilb_surface_route_b(const HodgeProfile& h, std::size_t order)
{
    if (h.dim() != 2) {
        throw std::invalid_argument("Hilbert series are computed for surfaces only");
    }
    const Series zeta = sym_series_even(h, order);
    Series result = Series::one(order, LaurentPoly(e_alphabet()));
    for (std::size_t m = 1; m <= order; ++m) {
        result = result * zeta.substitute(uv_power(static_cast<int>(m) - 1), m);
    }
    return result;
}

HilbSeries hilb_surface_series(const HodgeProfile& h, std::size_t order)
{
    Series a = hilb_surface_route_a(h, order);
    const Series b = hilb_surface_route_b(h, order);
    if (const auto k = first_difference(a, b)) {
        throw RouteDisagreement("Hilbert series routes differ at T^" + std::to_string(*k));
    }
    if (order >= 1 && a[1] != h.e_polynomial()) {
        throw RouteDisagreement("T^1 coefficient is not the class of the surface");
    }
    return {std::move(a), 2, "surface-from-E-polynomial", true};
}

std::optional<std::size_t> first_difference(const Series& a, const Series& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] != b[i]) {
            return i;
        }
    }
    return std::nullopt;
}

bool l_equivalence_transfer_check(const HodgeProfile& x, const HodgeProfile& y, std::size_t order)
{
    if (x.dim() != 2 || y.dim() != 2) {
        throw std::invalid_argument("L-equivalence transfer is checked for surfaces");
    }
    return hilb_surface_series(x, order).series == hilb_surface_series(y, order).series;
}

// ---------------------------------------------------------------------------
// L-equivalence predicates

bool l_equivalent(const LaurentPoly& x, const LaurentPoly& y)
{
    mode_of(x);
    return x == y;
}

int clearing_exponent(const LaurentPoly& x, const LaurentPoly& y)
{
    mode_of(x);
    int m = 0;
    for (std::size_t i = 0; i < x.alphabet().size(); ++i) {
        m = std::max({m, -x.min_exponent(i), -y.min_exponent(i)});
    }
    return m;
}

bool l_equivalent_by_clearing(const LaurentPoly& x, const LaurentPoly& y)
{
    const int m = clearing_exponent(x, y);
    const Exponents shift(x.alphabet().size(), m);
    return (x.shifted(shift) - y.shifted(shift)).is_zero();
}

} // namespace k3hilb::motivic
