#include <k3hilb/json_io.hpp>

#include <algorithm>
#include <stdexcept>

namespace k3hilb::json_io {

namespace {

std::string str(const BigInt& v)
{
    return to_string(v);
}

BigInt big(const Json& j)
{
    if (j.is_string()) {
        return parse_bigint(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return BigInt(j.get<std::int64_t>());
    }
    throw std::invalid_argument("expected an integer or decimal string");
}

std::int64_t small(const Json& j)
{
    return big(j).convert_to<std::int64_t>();
}

} // namespace

Json terms_to_json(const LaurentPoly& p)
{
    Json terms = Json::array();
    const auto& alphabet = p.alphabet();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Json mono = Json::object();
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
            mono[alphabet[i]] = it->first[i];
        }
        Json term = Json::object();
        term["monomials"] = std::move(mono);
        term["c"] = str(it->second);
        terms.push_back(std::move(term));
    }
    return terms;
}

LaurentPoly terms_from_json(const Json& j, const Alphabet& alphabet)
{
    LaurentPoly::Terms terms;
    for (const auto& term : j) {
        Exponents exps(alphabet.size(), 0);
        const Json& mono = term.at("monomials");
        for (const auto& [name, e] : mono.items()) {
            const auto it = std::find(alphabet.begin(), alphabet.end(), name);
            if (it == alphabet.end()) {
                throw AlphabetMismatch("variable '" + name + "' not in alphabet");
            }
            exps[static_cast<std::size_t>(it - alphabet.begin())] = e.get<int>();
        }
        BigInt c = big(term.at("c"));
        auto [pos, inserted] = terms.try_emplace(exps, c);
        if (!inserted) {
            pos->second += c;
        }
    }
    return LaurentPoly(alphabet, std::move(terms));
}

Json to_json(const LaurentPoly& p)
{
    Json j = Json::object();
    j["alphabet"] = p.alphabet();
    j["terms"] = terms_to_json(p);
    return j;
}

LaurentPoly poly_from_json(const Json& j)
{
    const auto alphabet = j.at("alphabet").get<Alphabet>();
    return terms_from_json(j.at("terms"), alphabet);
}

Json to_json(const motivic::Series& s)
{
    Json j = Json::object();
    j["var"] = "T";
    j["order"] = s.order();
    j["alphabet"] = s[0].alphabet();
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) {
        coeffs.push_back(terms_to_json(c));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

motivic::Series series_from_json(const Json& j)
{
    if (j.at("var") != "T") {
        throw std::invalid_argument("series variable must be T");
    }
    const auto order = j.at("order").get<std::size_t>();
    const auto alphabet = j.at("alphabet").get<Alphabet>();
    const Json& coeffs = j.at("coeffs");
    if (coeffs.size() != order + 1) {
        throw std::invalid_argument("series needs order + 1 coefficients");
    }
    std::vector<LaurentPoly> cs;
    for (const auto& c : coeffs) {
        cs.push_back(terms_from_json(c, alphabet));
    }
    return motivic::Series(order, std::move(cs));
}

Json to_json(const pell::PellSolution& s)
{
    Json j = Json::object();
    j["x"] = str(s.x);
    j["y"] = str(s.y);
    return j;
}

pell::PellSolution pell_from_json(const Json& j)
{
    return {big(j.at("x")), big(j.at("y"))};
}

Json to_json(const cone::ConeCase& c)
{
    Json j = Json::object();
    j["tag"] = std::string(cone::to_string(c.tag));
    if (c.ray) {
        Json ray = Json::object();
        ray["a"] = str(c.ray->a);
        ray["b"] = str(c.ray->b);
        j["ray"] = std::move(ray);
    } else {
        j["ray"] = nullptr;
    }
    j["pell"] = c.pell ? to_json(*c.pell) : Json(nullptr);
    return j;
}

cone::ConeCase cone_case_from_json(const Json& j, std::int64_t d, std::int64_t n)
{
    cone::ConeCase c;
    c.tag = cone::tag_from_string(j.at("tag").get<std::string>());
    if (!j.at("ray").is_null()) {
        c.ray = lattice::DivisorClass{big(j["ray"].at("a")), big(j["ray"].at("b")), d, n};
    }
    if (!j.at("pell").is_null()) {
        c.pell = pell_from_json(j["pell"]);
    }
    return c;
}

Json to_json(const classify::Certificate& cert)
{
    Json inputs = Json::object();
    inputs["d_x"] = std::to_string(cert.d_x);
    inputs["d_y"] = std::to_string(cert.d_y);
    inputs["n"] = std::to_string(cert.n);
    Json assumptions = Json::object();
    assumptions["non_isomorphic"] = cert.assumptions.non_isomorphic;
    assumptions["d_equivalent"] = cert.assumptions.d_equivalent;
    assumptions["l_equivalent"] = cert.assumptions.l_equivalent;
    inputs["assumptions"] = std::move(assumptions);

    Json normalized = Json::object();
    normalized["swapped"] = cert.swapped;
    normalized["d_x"] = std::to_string(cert.norm_d_x);
    normalized["d_y"] = std::to_string(cert.norm_d_y);

    Json trace = Json::array();
    for (const auto& e : cert.norm_trace) {
        trace.push_back(Json::array({e.expr, str(e.value)}));
    }

    Json j = Json::object();
    j["inputs"] = std::move(inputs);
    j["normalized"] = std::move(normalized);
    j["cone_case_x"] = to_json(cert.cone_case_x);
    j["cone_case_y"] = to_json(cert.cone_case_y);
    j["verdict"] = std::string(classify::to_string(cert.verdict));
    j["reason"] = cert.reason ? Json(std::string(classify::to_string(*cert.reason))) : Json(nullptr);
    j["branch"] = std::string(classify::to_string(cert.branch));
    j["norm_trace"] = std::move(trace);
    j["isometry_requires"] = Json::array({cert.isometry_requires.first, cert.isometry_requires.second});
    j["proof_walk_contradiction"] = cert.proof_walk_contradiction;
    j["cited_facts"] = cert.cited_facts;
    j["notes"] = cert.notes;
    j["citations"] = cert.citations;
    return j;
}

classify::Certificate certificate_from_json(const Json& j)
{
    classify::Certificate cert;
    const Json& inputs = j.at("inputs");
    cert.d_x = small(inputs.at("d_x"));
    cert.d_y = small(inputs.at("d_y"));
    cert.n = small(inputs.at("n"));
    const Json& a = inputs.at("assumptions");
    cert.assumptions = {a.at("non_isomorphic").get<bool>(), a.at("d_equivalent").get<bool>(),
                        a.at("l_equivalent").get<bool>()};
    const Json& norm = j.at("normalized");
    cert.swapped = norm.at("swapped").get<bool>();
    cert.norm_d_x = small(norm.at("d_x"));
    cert.norm_d_y = small(norm.at("d_y"));
    cert.cone_case_x = cone_case_from_json(j.at("cone_case_x"), cert.norm_d_x, cert.n);
    cert.cone_case_y = cone_case_from_json(j.at("cone_case_y"), cert.norm_d_y, cert.n);
    cert.verdict = classify::verdict_from_string(j.at("verdict").get<std::string>());
    if (!j.at("reason").is_null()) {
        cert.reason = classify::reason_from_string(j["reason"].get<std::string>());
    }
    cert.branch = classify::branch_from_string(j.at("branch").get<std::string>());
    for (const auto& e : j.at("norm_trace")) {
        cert.norm_trace.push_back({e.at(0).get<std::string>(), big(e.at(1))});
    }
    const Json& iso = j.at("isometry_requires");
    cert.isometry_requires = {iso.at(0).get<std::string>(), iso.at(1).get<std::string>()};
    cert.proof_walk_contradiction = j.at("proof_walk_contradiction").get<bool>();
    cert.cited_facts = j.at("cited_facts").get<std::vector<std::string>>();
    cert.notes = j.at("notes").get<std::vector<std::string>>();
    cert.citations = j.at("citations").get<std::vector<std::string>>();
    return cert;
}

} // namespace k3hilb::json_io
