#include <k3hilb/pell.hpp>

#include <algorithm>
#include <set>
#include <utility>

namespace k3hilb::pell {

namespace {

void require_non_square(const BigInt& D)
{
    if (D < 2) {
        throw std::domain_error("Pell discriminant must be at least 2");
    }
    if (is_perfect_square(D)) {
        throw PerfectSquareError("D = " + to_string(D) + " is a perfect square");
    }
}

// (x + y sqrt(D)) * (t + u sqrt(D))
QuadraticPoint mul_unit(const QuadraticPoint& p, const BigInt& t, const BigInt& u, const BigInt& D)
{
    return {p.x * t + p.y * u * D, p.x * u + p.y * t};
}

// floor((P + sqrt(D)) / Q) for non-square D, Q != 0.
BigInt pqa_quotient(const BigInt& P, const BigInt& Q, const BigInt& root)
{
    if (Q > 0) {
        return floor_div(P + root, Q);
    }
    return -(floor_div(P + root, -Q) + 1);
}

// For N > 0: the element of the orbit {r * eps^k} with the smallest x subject to x > 0, y > 0.
// On that orbit y grows with x + y sqrt(D), so walk down while y stays positive, then up.
QuadraticPoint least_positive_in_orbit(QuadraticPoint p, const PellSolution& eps, const BigInt& D)
{
    if (p.x < 0) {
        p = {-p.x, -p.y};
    }
    const BigInt inv_u = -eps.y;
    while (p.y > 0) {
        QuadraticPoint down = mul_unit(p, eps.x, inv_u, D);
        if (down.y <= 0) {
            break;
        }
        p = std::move(down);
    }
    while (p.y <= 0) {
        p = mul_unit(p, eps.x, eps.y, D);
    }
    return p;
}

bool better(const PellSolution& a, const PellSolution& b)
{
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// a X^2 - b Y^2 = 1 with a b = k^2: (aX - kY)(aX + kY) = a, finitely many divisor pairs.
std::optional<PellSolution> solve_square_discriminant(const PellProblem& pr, const BigInt& k)
{
    std::optional<PellSolution> best;
    for (BigInt e = 1; e * e <= pr.a; ++e) {
        if (pr.a % e != 0) {
            continue;
        }
        const BigInt f = pr.a / e;
        if ((e + f) % 2 != 0) {
            continue;
        }
        const BigInt ax = (e + f) / 2;
        const BigInt ky = (f - e) / 2;
        if (ky <= 0 || ax % pr.a != 0 || ky % k != 0) {
            continue;
        }
        PellSolution s{ax / pr.a, ky / k};
        if (!best || better(s, *best)) {
            best = std::move(s);
        }
    }
    return best;
}

} // namespace

std::optional<BigInt> is_perfect_square(const BigInt& m)
{
    if (m < 0) {
        return std::nullopt;
    }
    BigInt r = isqrt(m);
    if (r * r == m) {
        return r;
    }
    return std::nullopt;
}

ContinuedFraction continued_fraction_sqrt(const BigInt& D)
{
    require_non_square(D);
    ContinuedFraction cf;
    cf.a0 = isqrt(D);
    BigInt m = 0;
    BigInt d = 1;
    BigInt a = cf.a0;
    const BigInt stop = 2 * cf.a0;
    do {
        m = d * a - m;
        d = (D - m * m) / d;
        a = (cf.a0 + m) / d;
        cf.period.push_back(a);
    } while (a != stop);
    return cf;
}

namespace {

// Convergent p_k / q_k of sqrt(D) at index k (k = 0 is a0).
PellSolution convergent(const ContinuedFraction& cf, std::size_t k)
{
    BigInt p_prev = 1, p = cf.a0;
    BigInt q_prev = 0, q = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        const BigInt& a = cf.period[(i - 1) % cf.period.size()];
        BigInt p_next = a * p + p_prev;
        BigInt q_next = a * q + q_prev;
        p_prev = std::exchange(p, std::move(p_next));
        q_prev = std::exchange(q, std::move(q_next));
    }
    return {p, q};
}

} // namespace

PellSolution fundamental_pell(const BigInt& D)
{
    const ContinuedFraction cf = continued_fraction_sqrt(D);
    const std::size_t l = cf.period.size();
    return convergent(cf, l % 2 == 0 ? l - 1 : 2 * l - 1);
}

std::optional<PellSolution> negative_pell(const BigInt& D)
{
    const ContinuedFraction cf = continued_fraction_sqrt(D);
    const std::size_t l = cf.period.size();
    if (l % 2 == 0) {
        return std::nullopt;
    }
    return convergent(cf, l - 1);
}

// Lagrange-Matthews-Mollin (LMM) enumeration.
//
// For each f with f^2 | N put m = N / f^2. Every primitive solution class of
// x^2 - D y^2 = m corresponds to a root z of z^2 = D (mod |m|) with -|m|/2 < z <= |m|/2.
// Running the PQa recurrence on (z + sqrt(D)) / |m|, the first index i >= 1 with |Q_i| = 1
// inside the pre-period plus one full period yields (G_{i-1}, B_{i-1}) with
// G^2 - D B^2 = (-1)^i Q_i |m| = +-m. A value of -m is lifted through a solution of the
// negative Pell equation, or discarded when none exists. No search bound on y is involved;
// the classical fundamental-solution bound (Nagell: 0 <= y <= u sqrt(N) / sqrt(2(t + 1)) for
// N > 0, eps = t + u sqrt(D)) is only used by the tests as an independent oracle.
std::vector<QuadraticPoint> generalized_pell_classes(const BigInt& D, const BigInt& N)
{
    require_non_square(D);
    if (N == 0) {
        throw std::invalid_argument("generalized Pell right-hand side must be nonzero");
    }
    const BigInt root = isqrt(D);
    const std::optional<PellSolution> neg = negative_pell(D);
    const BigInt abs_n = N < 0 ? BigInt(-N) : N;

    std::vector<QuadraticPoint> out;
    for (BigInt f = 1; f * f <= abs_n; ++f) {
        if (N % (f * f) != 0) {
            continue;
        }
        const BigInt m = N / (f * f);
        const BigInt am = m < 0 ? BigInt(-m) : m;
        for (BigInt z = -((am - 1) / 2); z <= am / 2; ++z) {
            if ((z * z - D) % am != 0) {
                continue;
            }
            BigInt P = z;
            BigInt Q = am;
            BigInt b_prev2 = 1, b_prev = 0;
            BigInt g_prev2 = -z, g_prev = am;
            std::set<std::pair<BigInt, BigInt>> seen;
            while (seen.emplace(P, Q).second) {
                const BigInt a = pqa_quotient(P, Q, root);
                BigInt b = a * b_prev + b_prev2;
                BigInt g = a * g_prev + g_prev2;
                const BigInt P_next = a * Q - P;
                const BigInt Q_next = (D - P_next * P_next) / Q;
                b_prev2 = std::exchange(b_prev, b);
                g_prev2 = std::exchange(g_prev, g);
                P = P_next;
                Q = Q_next;
                if (Q == 1 || Q == -1) {
                    const BigInt val = g * g - D * b * b;
                    if (val == m) {
                        out.push_back({f * g, f * b});
                    } else if (val == -m && neg) {
                        const QuadraticPoint lifted = mul_unit({g, b}, neg->x, neg->y, D);
                        out.push_back({f * lifted.x, f * lifted.y});
                    }
                    break;
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const QuadraticPoint& a, const QuadraticPoint& b) {
        return std::tie(a.x, a.y) < std::tie(b.x, b.y);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<PellSolution> solve_unit_form(const PellProblem& pr)
{
    if (pr.a < 1 || pr.b < 1) {
        throw std::invalid_argument("unit form coefficients must be positive");
    }
    const BigInt D = pr.a * pr.b;
    std::optional<PellSolution> best;
    if (const auto k = is_perfect_square(D)) {
        best = solve_square_discriminant(pr, *k);
    } else {
        // U = a X turns a X^2 - b Y^2 = 1 into U^2 - D Y^2 = a. Since a | D, U mod a is
        // multiplied by the unit t along each orbit, so U = 0 (mod a) holds for a whole
        // orbit or for none of it; the least positive member of each orbit suffices.
        const PellSolution eps = fundamental_pell(D);
        for (const QuadraticPoint& rep : generalized_pell_classes(D, pr.a)) {
            const QuadraticPoint p = least_positive_in_orbit(rep, eps, D);
            if (p.x % pr.a != 0) {
                continue;
            }
            PellSolution s{p.x / pr.a, p.y};
            if (!best || better(s, *best)) {
                best = std::move(s);
            }
        }
    }
    if (best && !pr.satisfied_by(*best)) {
        throw std::logic_error("unit form solver produced a non-solution");
    }
    return best;
}

std::optional<PellSolution> solve_case_b(std::int64_t n, std::int64_t d)
{
    if (n < 2 || d < 1) {
        throw std::invalid_argument("case (b) equation needs n >= 2 and d >= 1");
    }
    return solve_unit_form({BigInt(n - 1), BigInt(d)});
}

} // namespace k3hilb::pell
