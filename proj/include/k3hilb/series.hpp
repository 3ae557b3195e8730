#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <k3hilb/ring_traits.hpp>

namespace k3hilb {

class NonUnitConstantTerm : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Power series in T over a commutative ring R, truncated after T^order.
// Always stores exactly order + 1 coefficients; index i holds the T^i coefficient.
template <typename R>
class TruncatedSeries
{
    using traits = RingTraits<R>;

public:
    // The zero series; `zero` fixes the coefficient ring instance (e.g. the alphabet).
    TruncatedSeries(std::size_t order, const R& zero) : coeffs_(order + 1, traits::zero_like(zero)) {}

    // Coefficients beyond `order` are dropped, missing ones are zero. `coeffs` must be nonempty.
    TruncatedSeries(std::size_t order, std::vector<R> coeffs)
    {
        if (coeffs.empty()) {
            throw std::invalid_argument("TruncatedSeries needs at least one coefficient");
        }
        const R zero = traits::zero_like(coeffs.front());
        coeffs.resize(order + 1, zero);
        coeffs_ = std::move(coeffs);
    }

    static TruncatedSeries one(std::size_t order, const R& prototype)
    {
        TruncatedSeries s(order, prototype);
        s.coeffs_[0] = traits::one_like(prototype);
        return s;
    }

    // c * T^k (zero if k > order).
    static TruncatedSeries term(std::size_t order, const R& c, std::size_t k)
    {
        TruncatedSeries s(order, c);
        if (k <= order) {
            s.coeffs_[k] = c;
        }
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const R& operator[](std::size_t i) const { return coeffs_.at(i); }
    const std::vector<R>& coeffs() const { return coeffs_; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        check_order(a, b);
        TruncatedSeries r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
            r.coeffs_[i] += b.coeffs_[i];
        }
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        check_order(a, b);
        TruncatedSeries r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
            r.coeffs_[i] -= b.coeffs_[i];
        }
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        check_order(a, b);
        const std::size_t n = a.coeffs_.size();
        TruncatedSeries r(a.order(), a.coeffs_[0]);
        for (std::size_t i = 0; i < n; ++i) {
            if (is_zero(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; i + j < n; ++j) {
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    // a / b; b must have a unit constant term.
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        check_order(a, b);
        if (!traits::is_unit(b.coeffs_[0])) {
            throw NonUnitConstantTerm("series division requires a unit constant term");
        }
        const R inv = traits::unit_inverse(b.coeffs_[0]);
        const std::size_t n = a.coeffs_.size();
        TruncatedSeries r(a.order(), a.coeffs_[0]);
        for (std::size_t i = 0; i < n; ++i) {
            R acc = a.coeffs_[i];
            for (std::size_t j = 1; j <= i; ++j) {
                acc -= b.coeffs_[j] * r.coeffs_[i - j];
            }
            r.coeffs_[i] = acc * inv;
        }
        return r;
    }

    // a(scale * T^power), truncated at the same order. power >= 1.
    TruncatedSeries substitute(const R& scale, std::size_t power) const
    {
        if (power == 0) {
            throw std::invalid_argument("substitution power must be positive");
        }
        TruncatedSeries r(order(), coeffs_[0]);
        R scale_pow = traits::one_like(scale);
        for (std::size_t i = 0; i * power <= order(); ++i) {
            r.coeffs_[i * power] = coeffs_[i] * scale_pow;
            scale_pow = scale_pow * scale;
        }
        return r;
    }

private:
    static bool is_zero(const R& v) { return v == traits::zero_like(v); }

    static void check_order(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        if (a.coeffs_.size() != b.coeffs_.size()) {
            throw std::invalid_argument("series truncation orders differ");
        }
    }

    std::vector<R> coeffs_;
};

} // namespace k3hilb
