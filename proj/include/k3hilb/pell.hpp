#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <k3hilb/bigint.hpp>

namespace k3hilb::pell {

class PerfectSquareError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class NotASolution : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Positive solution (x, y) of a quadratic unit equation.
struct PellSolution {
    BigInt x;
    BigInt y;

    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

// a X^2 - b Y^2 = 1 with a, b >= 1.
struct PellProblem {
    BigInt a;
    BigInt b;

    bool satisfied_by(const PellSolution& s) const { return a * s.x * s.x - b * s.y * s.y == 1; }
};

// sqrt(D) = [a0; period...], period minimal.
struct ContinuedFraction {
    BigInt a0;
    std::vector<BigInt> period;
};

// Signed lattice point (x, y) used for class representatives of x^2 - D y^2 = N.
struct QuadraticPoint {
    BigInt x;
    BigInt y;

    friend bool operator==(const QuadraticPoint&, const QuadraticPoint&) = default;
};

// Root when m is a perfect square, empty otherwise. m >= 0.
std::optional<BigInt> is_perfect_square(const BigInt& m);

ContinuedFraction continued_fraction_sqrt(const BigInt& D);

// Least positive solution of X^2 - D Y^2 = 1. Throws PerfectSquareError.
PellSolution fundamental_pell(const BigInt& D);

// Least positive solution of X^2 - D Y^2 = -1, if any (odd period length).
std::optional<PellSolution> negative_pell(const BigInt& D);

// One fundamental solution per solution class of x^2 - D y^2 = N (D > 0 non-square, N != 0),
// including non-primitive ones. Every solution equals +-r * eps^k for some returned r and
// k in Z, eps being the fundamental unit.
std::vector<QuadraticPoint> generalized_pell_classes(const BigInt& D, const BigInt& N);

// Solution of a X^2 - b Y^2 = 1 in positive integers with the smallest x (then smallest y).
std::optional<PellSolution> solve_unit_form(const PellProblem& problem);

// (n - 1) X^2 - d Y^2 = 1, n >= 2, d >= 1.
std::optional<PellSolution> solve_case_b(std::int64_t n, std::int64_t d);

} // namespace k3hilb::pell
