#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <k3hilb/cone.hpp>
#include <k3hilb/pell.hpp>
#include <k3hilb/trace_expr.hpp>

namespace k3hilb::classify {

enum class Verdict { NotBirational, Undetermined };

// Which extremal-ray case produced the norm contradiction.
enum class Reason { CaseAIsotropy, CaseBNormContradiction, CaseCNormContradiction };

// Which hypothesis of the inequivalence criterion applies.
enum class Branch { DegreeMismatch, EqualDegreePell, NotCovered };

std::string_view to_string(Verdict v);
std::string_view to_string(Reason r);
std::string_view to_string(Branch b);
Verdict verdict_from_string(std::string_view s);
Reason reason_from_string(std::string_view s);
Branch branch_from_string(std::string_view s);

// Caller-asserted hypotheses on the surfaces X, Y; never computed.
struct Assumptions {
    bool non_isomorphic = true;
    bool d_equivalent = true;
    bool l_equivalent = true;

    friend bool operator==(const Assumptions&, const Assumptions&) = default;
};

struct TraceEntry {
    std::string expr;
    BigInt value;

    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct Certificate {
    std::int64_t d_x = 1;
    std::int64_t d_y = 1;
    std::int64_t n = 2;
    Assumptions assumptions;

    // Normalized so that d_x >= d_y; the cone cases and the trace refer to these.
    bool swapped = false;
    std::int64_t norm_d_x = 1;
    std::int64_t norm_d_y = 1;
    cone::ConeCase cone_case_x;
    cone::ConeCase cone_case_y;

    Verdict verdict = Verdict::Undetermined;
    std::optional<Reason> reason;
    Branch branch = Branch::NotCovered;

    std::vector<TraceEntry> norm_trace;
    // A birational map would force these two trace expressions to be equal.
    std::pair<std::string, std::string> isometry_requires;
    bool proof_walk_contradiction = false;

    std::vector<std::string> cited_facts;
    std::vector<std::string> notes;
    std::vector<std::string> citations;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

Certificate classify(std::int64_t d_x, std::int64_t d_y, std::int64_t n, Assumptions assumptions = {});

// Re-evaluates every trace entry and the contradiction claim from the certificate's own data.
bool verify_certificate(const Certificate& cert);

// Bindings the trace of `cert` is evaluated against.
TraceBindings trace_bindings(const Certificate& cert);

struct FamilyMember {
    std::int64_t y = 0;
    std::int64_t n = 0;
    pell::PellSolution solution;
};

// n = 6 y^2 + 2 for y = 1..max_y with the solution (1, y) of (n - 1) X^2 - 6 Y^2 = 1.
std::vector<FamilyMember> enumerate_family(std::int64_t max_y);

} // namespace k3hilb::classify
