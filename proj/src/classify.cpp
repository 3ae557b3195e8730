#include <k3hilb/classify.hpp>

#include <stdexcept>

namespace k3hilb::classify {

namespace {

template <typename E, std::size_t N>
E from_table(std::string_view s, const std::pair<E, std::string_view> (&table)[N], const char* what)
{
    for (const auto& [e, name] : table) {
        if (name == s) {
            return e;
        }
    }
    throw std::invalid_argument(std::string("unknown ") + what + " '" + std::string(s) + "'");
}

template <typename E, std::size_t N>
std::string_view to_table(E e, const std::pair<E, std::string_view> (&table)[N])
{
    for (const auto& [v, name] : table) {
        if (v == e) {
            return name;
        }
    }
    return "?";
}

constexpr std::pair<Verdict, std::string_view> kVerdicts[] = {
    {Verdict::NotBirational, "not_birational"},
    {Verdict::Undetermined, "undetermined"},
};

constexpr std::pair<Reason, std::string_view> kReasons[] = {
    {Reason::CaseAIsotropy, "case_a_isotropy"},
    {Reason::CaseBNormContradiction, "case_b_norm_contradiction"},
    {Reason::CaseCNormContradiction, "case_c_norm_contradiction"},
};

constexpr std::pair<Branch, std::string_view> kBranches[] = {
    {Branch::DegreeMismatch, "degree_mismatch"},
    {Branch::EqualDegreePell, "equal_degree_pell"},
    {Branch::NotCovered, "not_covered"},
};

const std::vector<std::string>& citation_list()
{
    static const std::vector<std::string> c{
        "MR0237496: Hilbert schemes of points on a smooth surface are smooth projective",
        "MR2353249 Prop. 8 (after Bridgeland-King-Reid): derived-equivalent surfaces have "
        "derived-equivalent Hilbert schemes of points",
        "Gusein-Zade, Luengo, Melle-Hernandez (2006), Corollary: "
        "H_Z(T) = (H_{A^dim Z}(T))^(L^(-dim Z) [Z]) in K0(Var)[1/L][[T]]",
        "MR3279532 Prop. 13.1: extremal rays of the movable cone of X^[n] for Picard rank 1",
        "MR1664696 Lemma 2.6: a birational map of hyperkaehler manifolds induces an isometry "
        "of Picard lattices respecting movable cones",
        "MR770463 Thm. 2.1: a birational map preserving the Hilbert-Chow exceptional divisors "
        "comes from an isomorphism of the surfaces",
    };
    return c;
}

// Primitive isotropic class (n-1)/g Ht - k/g B, k^2 = d(n-1), g = gcd(n-1, k).
std::pair<BigInt, BigInt> isotropic_class(std::int64_t d, std::int64_t n)
{
    const BigInt k = isqrt(BigInt(d) * (n - 1));
    const BigInt g = gcd(BigInt(n - 1), k);
    return {BigInt(n - 1) / g, k / g};
}

void append(Certificate& cert, const TraceBindings& b, std::string expr)
{
    BigInt v = evaluate_trace_expression(expr, b);
    cert.norm_trace.push_back({std::move(expr), std::move(v)});
}

void build_trace(Certificate& cert)
{
    const TraceBindings b = trace_bindings(cert);
    switch (cert.cone_case_x.tag) {
    case cone::Tag::A:
        append(cert, b, "dX*(n-1)-k^2");
        append(cert, b, "q(iso_a,-iso_b)");
        append(cert, b, "2*dY");
        cert.isometry_requires = {"q(iso_a,-iso_b)", "2*dY"};
        break;
    case cone::Tag::B:
        append(cert, b, "(n-1)*x1^2-dX*y1^2");
        append(cert, b, "gcd(x1*(n-1),dX*y1)");
        append(cert, b, "q(x1*(n-1),-dX*y1)");
        append(cert, b, "2*dX*(n-1)*((n-1)*x1^2-dX*y1^2)");
        append(cert, b, "2*dX*(n-1)");
        append(cert, b, "2*dY");
        cert.isometry_requires = {"q(x1*(n-1),-dX*y1)", "2*dY"};
        break;
    case cone::Tag::C:
        append(cert, b, "x1^2-dX*(n-1)*y1^2");
        append(cert, b, "gcd(x1,y1*dX)");
        append(cert, b, "q(x1,-y1*dX)");
        append(cert, b, "2*dX*(x1^2-dX*(n-1)*y1^2)");
        append(cert, b, "2*dX");
        append(cert, b, "2*dY");
        cert.isometry_requires = {"q(x1,-y1*dX)", "2*dY"};
        break;
    }
}

Reason reason_for(cone::Tag tag)
{
    switch (tag) {
    case cone::Tag::A:
        return Reason::CaseAIsotropy;
    case cone::Tag::B:
        return Reason::CaseBNormContradiction;
    case cone::Tag::C:
        return Reason::CaseCNormContradiction;
    }
    throw std::logic_error("unreachable cone tag");
}

} // namespace

std::string_view to_string(Verdict v) { return to_table(v, kVerdicts); }
std::string_view to_string(Reason r) { return to_table(r, kReasons); }
std::string_view to_string(Branch b) { return to_table(b, kBranches); }
Verdict verdict_from_string(std::string_view s) { return from_table(s, kVerdicts, "verdict"); }
Reason reason_from_string(std::string_view s) { return from_table(s, kReasons, "reason"); }
Branch branch_from_string(std::string_view s) { return from_table(s, kBranches, "branch"); }

TraceBindings trace_bindings(const Certificate& cert)
{
    TraceBindings b;
    b.d = cert.norm_d_x;
    b.n = cert.n;
    b.vars.emplace("dX", cert.norm_d_x);
    b.vars.emplace("dY", cert.norm_d_y);
    b.vars.emplace("n", cert.n);
    if (cert.cone_case_x.pell) {
        b.vars.emplace("x1", cert.cone_case_x.pell->x);
        b.vars.emplace("y1", cert.cone_case_x.pell->y);
    }
    if (cert.cone_case_x.tag == cone::Tag::A) {
        auto [a, bb] = isotropic_class(cert.norm_d_x, cert.n);
        b.vars.emplace("k", isqrt(BigInt(cert.norm_d_x) * (cert.n - 1)));
        b.vars.emplace("iso_a", std::move(a));
        b.vars.emplace("iso_b", std::move(bb));
    }
    return b;
}

Certificate classify(std::int64_t d_x, std::int64_t d_y, std::int64_t n, Assumptions assumptions)
{
    if (d_x < 1 || d_y < 1) {
        throw std::invalid_argument("half-degrees must be positive");
    }
    if (n < 2) {
        throw std::invalid_argument("number of points must be at least 2");
    }

    Certificate cert;
    cert.d_x = d_x;
    cert.d_y = d_y;
    cert.n = n;
    cert.assumptions = assumptions;
    cert.swapped = d_x < d_y;
    cert.norm_d_x = std::max(d_x, d_y);
    cert.norm_d_y = std::min(d_x, d_y);
    cert.cone_case_x = cone::movable_case(cert.norm_d_x, n);
    cert.cone_case_y = cone::movable_case(cert.norm_d_y, n);
    cert.citations = citation_list();
    cert.cited_facts = {
        "X^[n], Y^[n] are smooth projective of dimension 2n (MR0237496)",
        "X^[n], Y^[n] are D-equivalent (MR2353249 Prop. 8)",
        "X^[n], Y^[n] are L-equivalent: [X] = [Y] in K0(Var)[1/L] transfers through the power "
        "structure identity for H_X(T), H_Y(T)",
    };
    cert.notes.push_back(
        "case (i): a birational map sending Ht_Y to Ht_X respects the Hilbert-Chow exceptional "
        "divisors, hence comes from an isomorphism X = Y, excluded by non_isomorphic");

    build_trace(cert);
    const TraceBindings b = trace_bindings(cert);
    cert.proof_walk_contradiction = evaluate_trace_expression(cert.isometry_requires.first, b) !=
                                    evaluate_trace_expression(cert.isometry_requires.second, b);

    const bool hypotheses =
        assumptions.non_isomorphic && assumptions.d_equivalent && assumptions.l_equivalent;
    if (cert.norm_d_x != cert.norm_d_y) {
        cert.branch = Branch::DegreeMismatch;
    } else if (n > 2 && cert.cone_case_x.tag == cone::Tag::B) {
        cert.branch = Branch::EqualDegreePell;
    }

    if (!hypotheses) {
        cert.notes.push_back("hypotheses on X, Y not asserted; no conclusion drawn");
    } else if (cert.branch != Branch::NotCovered) {
        if (!cert.proof_walk_contradiction) {
            throw std::logic_error("criterion applies but the norm trace shows no contradiction");
        }
        cert.verdict = Verdict::NotBirational;
        cert.reason = reason_for(cert.cone_case_x.tag);
    } else if (cert.proof_walk_contradiction) {
        cert.notes.push_back(
            "case (ii): the isotropic extremal ray contradicts q(Ht_Y) = 2dY > 0, but neither "
            "hypothesis of the criterion holds for these inputs; verdict left undetermined");
    } else {
        cert.notes.push_back("case (ii): the extremal ray has norm 2dY, no contradiction");
    }
    return cert;
}

bool verify_certificate(const Certificate& cert)
{
    try {
        const TraceBindings b = trace_bindings(cert);
        for (const auto& entry : cert.norm_trace) {
            if (evaluate_trace_expression(entry.expr, b) != entry.value) {
                return false;
            }
        }
        const bool contradiction = evaluate_trace_expression(cert.isometry_requires.first, b) !=
                                   evaluate_trace_expression(cert.isometry_requires.second, b);
        if (contradiction != cert.proof_walk_contradiction) {
            return false;
        }
        if (cert.verdict == Verdict::NotBirational) {
            return contradiction && cert.reason && *cert.reason == reason_for(cert.cone_case_x.tag);
        }
        return !cert.reason.has_value();
    } catch (const std::exception&) {
        return false;
    }
}

std::vector<FamilyMember> enumerate_family(std::int64_t max_y)
{
    if (max_y < 1) {
        throw std::invalid_argument("max_y must be at least 1");
    }
    std::vector<FamilyMember> out;
    for (std::int64_t y = 1; y <= max_y; ++y) {
        const std::int64_t n = 6 * y * y + 2;
        FamilyMember m{y, n, {1, y}};
        if (!pell::PellProblem{BigInt(n - 1), 6}.satisfied_by(m.solution)) {
            throw std::logic_error("family member does not solve its Pell equation");
        }
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace k3hilb::classify
