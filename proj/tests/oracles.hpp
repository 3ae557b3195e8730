#pragma once

// Test-only reference computations. Nothing here calls into the library's solvers.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

inline std::int64_t isqrt64(std::int64_t m)
{
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(m)));
    while (r * r > m) {
        --r;
    }
    while ((r + 1) * (r + 1) <= m) {
        ++r;
    }
    return r;
}

inline bool is_square64(std::int64_t m, std::int64_t* root = nullptr)
{
    if (m < 0) {
        return false;
    }
    const std::int64_t r = isqrt64(m);
    if (root) {
        *root = r;
    }
    return r * r == m;
}

// Least y in [1, y_max] with D y^2 + 1 a square.
inline std::optional<std::pair<std::int64_t, std::int64_t>> brute_fundamental(std::int64_t D, std::int64_t y_max)
{
    for (std::int64_t y = 1; y <= y_max; ++y) {
        std::int64_t x = 0;
        if (is_square64(D * y * y + 1, &x)) {
            return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

// Least x in [1, limit] with (a x^2 - 1) / b a square y^2, 1 <= y <= limit.
inline std::optional<std::pair<std::int64_t, std::int64_t>> brute_unit_form(std::int64_t a, std::int64_t b,
                                                                         std::int64_t limit)
{
    for (std::int64_t x = 1; x <= limit; ++x) {
        const std::int64_t lhs = a * x * x - 1;
        if (lhs <= 0 || lhs % b != 0) {
            continue;
        }
        std::int64_t y = 0;
        if (is_square64(lhs / b, &y) && y >= 1 && y <= limit) {
            return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

inline std::vector<std::vector<int>> partitions(int n, int max_part = -1)
{
    if (max_part < 0) {
        max_part = n;
    }
    if (n == 0) {
        return {{}};
    }
    std::vector<std::vector<int>> out;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        for (auto rest : partitions(n - p, p)) {
            rest.insert(rest.begin(), p);
            out.push_back(std::move(rest));
        }
    }
    return out;
}

inline std::int64_t binom64(std::int64_t top, std::int64_t k)
{
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        r = r * (top - i) / (i + 1);
    }
    return r;
}

// Coefficient of T^n in prod_m (1 - T^m)^(-c): sum over partitions of n of
// prod over distinct parts of C(c + mult - 1, mult).
inline std::int64_t eta_power_coefficient(int n, std::int64_t c)
{
    std::int64_t total = 0;
    for (const auto& lambda : partitions(n)) {
        std::map<int, std::int64_t> mult;
        for (int p : lambda) {
            ++mult[p];
        }
        std::int64_t term = 1;
        for (const auto& [p, m] : mult) {
            term *= binom64(c + m - 1, m);
        }
        total += term;
    }
    return total;
}

using Big = boost::multiprecision::cpp_int;

// Fundamental solution of x^2 - D y^2 = 1 by scanning the convergents of sqrt(D) and
// testing each one directly. D must not be a square.
inline std::pair<Big, Big> convergent_scan_fundamental(std::int64_t D)
{
    const std::int64_t a0 = isqrt64(D);
    std::int64_t m = 0, q = 1, a = a0;
    Big p_prev = 1, p = a0, k_prev = 0, k = 1;
    for (;;) {
        if (p * p - Big(D) * k * k == 1) {
            return {p, k};
        }
        m = q * a - m;
        q = (D - m * m) / q;
        a = (a0 + m) / q;
        Big p_next = Big(a) * p + p_prev;
        Big k_next = Big(a) * k + k_prev;
        p_prev = p;
        k_prev = k;
        p = p_next;
        k = k_next;
    }
}

// Whether a X^2 - b Y^2 = 1 has a solution in positive integers, for a > 1, via the
// least solution squaring to the fundamental unit of x^2 - ab y^2 = 1. A square ab
// never admits one.
inline bool unit_form_solvable(std::int64_t a, std::int64_t b)
{
    if (is_square64(a * b)) {
        return false;
    }
    const auto [t, u] = convergent_scan_fundamental(a * b);
    if ((t + 1) % (2 * a) != 0 || (t - 1) % (2 * b) != 0) {
        return false;
    }
    const Big x2 = (t + 1) / (2 * a);
    const Big y2 = (t - 1) / (2 * b);
    const Big x = boost::multiprecision::sqrt(x2);
    const Big y = boost::multiprecision::sqrt(y2);
    return x * x == x2 && y * y == y2;
}

} // namespace oracle
