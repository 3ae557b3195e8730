#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <k3hilb/classify.hpp>
#include <k3hilb/json_io.hpp>

#include <array>

#include "oracles.hpp"

using k3hilb::BigInt;
namespace cone = k3hilb::cone;
namespace pell = k3hilb::pell;
namespace json_io = k3hilb::json_io;
using namespace k3hilb::classify;

namespace {

// The inequivalence criterion read off its statement, with Pell solvability decided
// without the library's solvers.
bool statement_says_not_birational(std::int64_t dx, std::int64_t dy, std::int64_t n)
{
    if (dx != dy) {
        return true;
    }
    return n > 2 && oracle::unit_form_solvable(n - 1, dx);
}

std::string trace_value(const Certificate& c, std::string_view expr)
{
    for (const auto& e : c.norm_trace) {
        if (e.expr == expr) {
            return k3hilb::to_string(e.value);
        }
    }
    return "<missing>";
}

} // namespace

TEST_CASE("classify examples")
{
    const Certificate b = classify(6, 6, 8);
    CHECK(b.verdict == Verdict::NotBirational);
    CHECK(b.reason == Reason::CaseBNormContradiction);
    CHECK(b.branch == Branch::EqualDegreePell);
    CHECK(b.cone_case_x.tag == cone::Tag::B);
    CHECK(b.cone_case_x.pell == pell::PellSolution{1, 1});
    CHECK(trace_value(b, "q(x1*(n-1),-dX*y1)") == "84");
    CHECK(trace_value(b, "2*dX*(n-1)") == "84");
    CHECK(trace_value(b, "2*dY") == "12");

    const Certificate c = classify(6, 6, 3);
    CHECK(c.verdict == Verdict::Undetermined);
    CHECK_FALSE(c.reason.has_value());
    CHECK(c.cone_case_x.tag == cone::Tag::C);
    CHECK(trace_value(c, "q(x1,-y1*dX)") == "12");
    CHECK_FALSE(c.proof_walk_contradiction);

    const Certificate m = classify(7, 6, 5);
    CHECK(m.verdict == Verdict::NotBirational);
    CHECK(m.branch == Branch::DegreeMismatch);
    CHECK(m.cone_case_x.tag == cone::Tag::B);
    CHECK(trace_value(m, "2*dX*(n-1)") == "56");
    CHECK(trace_value(m, "2*dY") == "12");

    const Certificate two = classify(6, 6, 2);
    CHECK(two.verdict == Verdict::Undetermined);
    CHECK(two.branch == Branch::NotCovered);

    const Certificate swapped = classify(6, 7, 2);
    CHECK(swapped.verdict == Verdict::NotBirational);
    CHECK(swapped.swapped);
    CHECK(swapped.norm_d_x == 7);
}

TEST_CASE("classify input errors")
{
    CHECK_THROWS_AS(classify(6, 6, 1), std::invalid_argument);
    CHECK_THROWS_AS(classify(0, 6, 3), std::invalid_argument);
    CHECK_THROWS_AS(classify(6, -1, 3), std::invalid_argument);
}

TEST_CASE("unasserted hypotheses give no conclusion")
{
    Assumptions a;
    a.l_equivalent = false;
    const Certificate c = classify(7, 6, 5, a);
    CHECK(c.verdict == Verdict::Undetermined);
    CHECK(c.branch == Branch::DegreeMismatch);
    CHECK(verify_certificate(c));
}

TEST_CASE("trace expression evaluator")
{
    TraceBindings b;
    b.d = 6;
    b.n = 8;
    b.vars.emplace("x", 3);
    b.vars.emplace("big", BigInt("100000000000000000000"));
    CHECK(evaluate_trace_expression("1+2*3", b) == 7);
    CHECK(evaluate_trace_expression("(1+2)*3", b) == 9);
    CHECK(evaluate_trace_expression("2^3^2", b) == 512);
    CHECK(evaluate_trace_expression("-x^2", b) == -9);
    CHECK(evaluate_trace_expression("x - -x", b) == 6);
    CHECK(evaluate_trace_expression("big*big", b) == BigInt("10000000000000000000000000000000000000000"));
    CHECK(evaluate_trace_expression("gcd(12,-18)", b) == 6);
    // q(a, b) = 2 d a^2 - 2 (n - 1) b^2
    CHECK(evaluate_trace_expression("q(7,-6)", b) == 2 * 6 * 49 - 2 * 7 * 36);
    CHECK_THROWS_AS(evaluate_trace_expression("1+", b), TraceSyntaxError);
    CHECK_THROWS_AS(evaluate_trace_expression("(1", b), TraceSyntaxError);
    CHECK_THROWS_AS(evaluate_trace_expression("y", b), TraceSyntaxError);
    CHECK_THROWS_AS(evaluate_trace_expression("f(1)", b), TraceSyntaxError);
    CHECK_THROWS_AS(evaluate_trace_expression("2^-1", b), TraceSyntaxError);
    CHECK_THROWS_AS(evaluate_trace_expression("1 2", b), TraceSyntaxError);
}

TEST_CASE("verdicts agree with the statement on 1..40 x 1..40 x 2..40")
{
    int checked = 0;
    for (std::int64_t dx = 1; dx <= 40; ++dx) {
        for (std::int64_t dy = 1; dy <= 40; ++dy) {
            for (std::int64_t n = 2; n <= 40; ++n) {
                const Certificate c = classify(dx, dy, n);
                const bool expected = statement_says_not_birational(dx, dy, n);
                if ((c.verdict == Verdict::NotBirational) != expected) {
                    FAIL_CHECK("verdict mismatch at (" << dx << ", " << dy << ", " << n << ")");
                }
                if (!verify_certificate(c)) {
                    FAIL_CHECK("certificate does not verify at (" << dx << ", " << dy << ", " << n << ")");
                }
                ++checked;
            }
        }
    }
    CHECK(checked == 40 * 40 * 39);
}

TEST_CASE("proof walk and statement diverge exactly on equal degrees with d(n-1) square")
{
    for (std::int64_t d = 1; d <= 40; ++d) {
        for (std::int64_t n = 2; n <= 40; ++n) {
            const Certificate c = classify(d, d, n);
            const bool statement = c.verdict == Verdict::NotBirational;
            const bool diverges = c.proof_walk_contradiction != statement;
            CHECK(diverges == oracle::is_square64(d * (n - 1)));
            if (diverges) {
                CHECK(c.cone_case_x.tag == cone::Tag::A);
                CHECK(c.proof_walk_contradiction);
            }
        }
    }
}

TEST_CASE("WLOG symmetry")
{
    for (std::int64_t dx = 1; dx <= 20; ++dx) {
        for (std::int64_t dy = 1; dy <= 20; ++dy) {
            for (std::int64_t n = 2; n <= 20; ++n) {
                const Certificate a = classify(dx, dy, n);
                const Certificate b = classify(dy, dx, n);
                CHECK(a.verdict == b.verdict);
                CHECK(a.reason == b.reason);
                CHECK(a.norm_trace == b.norm_trace);
            }
        }
    }
}

TEST_CASE("tampered certificates fail verification")
{
    Certificate c = classify(6, 6, 8);
    REQUIRE(verify_certificate(c));
    Certificate bad_value = c;
    bad_value.norm_trace[2].value += 1;
    CHECK_FALSE(verify_certificate(bad_value));
    Certificate bad_reason = c;
    bad_reason.reason = Reason::CaseCNormContradiction;
    CHECK_FALSE(verify_certificate(bad_reason));
    Certificate bad_claim = classify(6, 6, 3);
    bad_claim.verdict = Verdict::NotBirational;
    bad_claim.reason = Reason::CaseCNormContradiction;
    CHECK_FALSE(verify_certificate(bad_claim));
    Certificate bad_expr = c;
    bad_expr.norm_trace[0].expr = "(n-1";
    CHECK_FALSE(verify_certificate(bad_expr));
}

TEST_CASE("enumerate_family")
{
    const auto fam = enumerate_family(20);
    REQUIRE(fam.size() == 20);
    CHECK(fam[0].n == 8);
    CHECK(fam[1].n == 26);
    CHECK(fam[2].n == 56);
    for (const auto& m : fam) {
        CHECK(m.n == 6 * m.y * m.y + 2);
        CHECK(m.solution == pell::PellSolution{1, m.y});
        CHECK((m.n - 1) - 6 * m.y * m.y == 1);
        const Certificate c = classify(6, 6, m.n);
        CHECK(c.verdict == Verdict::NotBirational);
        CHECK(verify_certificate(c));
    }
    CHECK(enumerate_family(1).size() == 1);
    CHECK_THROWS_AS(enumerate_family(0), std::invalid_argument);
}

TEST_CASE("certificate JSON round trip")
{
    for (auto [dx, dy, n] : {std::array<std::int64_t, 3>{6, 6, 8}, {6, 6, 3}, {7, 6, 5}, {6, 7, 2}, {4, 4, 5},
                             {29, 29, 40}}) {
        const Certificate c = classify(dx, dy, n);
        const json_io::Json j = json_io::to_json(c);
        CHECK(json_io::certificate_from_json(json_io::Json::parse(j.dump())) == c);
        CHECK(j["inputs"]["d_x"] == std::to_string(dx));
    }
}

TEST_CASE("cone case JSON round trip")
{
    for (std::int64_t d = 1; d <= 15; ++d) {
        for (std::int64_t n = 2; n <= 15; ++n) {
            const cone::ConeCase c = cone::movable_case(d, n);
            CHECK(json_io::cone_case_from_json(json_io::to_json(c), d, n) == c);
        }
    }
}
