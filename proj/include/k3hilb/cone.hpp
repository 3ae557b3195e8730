#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

#include <k3hilb/lattice.hpp>
#include <k3hilb/pell.hpp>

namespace k3hilb::cone {

// Which of the three shapes the second extremal ray of the movable cone takes:
//   A  d(n-1) is a square, the ray is isotropic (rational Lagrangian fibration);
//   B  (n-1) X^2 - d Y^2 = 1 is solvable, ray x1(n-1) Ht - d y1 B;
//   C  otherwise, ray x'1 Ht - y'1 d B from X^2 - d(n-1) Y^2 = 1.
enum class Tag { A, B, C };

std::string_view to_string(Tag tag);
Tag tag_from_string(std::string_view s);

struct ConeCase {
    Tag tag = Tag::A;
    std::optional<lattice::DivisorClass> ray;
    std::optional<pell::PellSolution> pell;

    friend bool operator==(const ConeCase&, const ConeCase&) = default;
};

class InconsistentTrichotomy : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

class NoStoredRay : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

ConeCase movable_case(std::int64_t d, std::int64_t n);

// gcd(x1 (n-1), d y1) == 1. Throws pell::NotASolution unless sol solves the case (b) equation.
bool check_primitive_case_b(std::int64_t d, std::int64_t n, const pell::PellSolution& sol);

// q of the stored ray: 2d(n-1) in case B, 2d in case C. Throws NoStoredRay in case A.
BigInt ray_q_norm(const ConeCase& c, std::int64_t d, std::int64_t n);

} // namespace k3hilb::cone
