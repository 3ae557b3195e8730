#include <k3hilb/cone.hpp>

#include <string>

namespace k3hilb::cone {

std::string_view to_string(Tag tag)
{
    switch (tag) {
    case Tag::A:
        return "A";
    case Tag::B:
        return "B";
    case Tag::C:
        return "C";
    }
    return "?";
}

Tag tag_from_string(std::string_view s)
{
    if (s == "A") {
        return Tag::A;
    }
    if (s == "B") {
        return Tag::B;
    }
    if (s == "C") {
        return Tag::C;
    }
    throw std::invalid_argument("unknown cone case tag '" + std::string(s) + "'");
}

ConeCase movable_case(std::int64_t d, std::int64_t n)
{
    if (d < 1 || n < 2) {
        throw std::invalid_argument("movable cone needs d >= 1 and n >= 2");
    }
    const BigInt disc = BigInt(d) * (n - 1);
    const auto case_b = pell::solve_case_b(n, d);

    if (pell::is_perfect_square(disc)) {
        // Both Pell equations must be degenerate here.
        if (case_b) {
            throw InconsistentTrichotomy("case (b) equation solvable although d(n-1) is a square");
        }
        if (pell::solve_unit_form({1, disc})) {
            throw InconsistentTrichotomy("case (c) equation solvable although d(n-1) is a square");
        }
        return {Tag::A, std::nullopt, std::nullopt};
    }
    if (case_b) {
        lattice::DivisorClass ray{case_b->x * (n - 1), -BigInt(d) * case_b->y, d, n};
        return {Tag::B, std::move(ray), *case_b};
    }
    pell::PellSolution fund = pell::fundamental_pell(disc);
    lattice::DivisorClass ray{fund.x, -fund.y * d, d, n};
    return {Tag::C, std::move(ray), std::move(fund)};
}

bool check_primitive_case_b(std::int64_t d, std::int64_t n, const pell::PellSolution& sol)
{
    const pell::PellProblem eq{BigInt(n - 1), BigInt(d)};
    if (sol.x <= 0 || sol.y <= 0 || !eq.satisfied_by(sol)) {
        throw pell::NotASolution("(" + k3hilb::to_string(sol.x) + ", " + k3hilb::to_string(sol.y) +
                                 ") does not solve the case (b) equation");
    }
    return gcd(sol.x * (n - 1), sol.y * d) == 1;
}

BigInt ray_q_norm(const ConeCase& c, std::int64_t d, std::int64_t n)
{
    if (!c.ray) {
        throw NoStoredRay("cone case " + std::string(to_string(c.tag)) + " stores no ray");
    }
    if (c.ray->d != d || c.ray->n != n) {
        throw lattice::ParameterMismatch("ray belongs to a different (d, n)");
    }
    return lattice::bbf_q(*c.ray);
}

} // namespace k3hilb::cone
