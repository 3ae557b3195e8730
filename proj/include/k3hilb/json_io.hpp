#pragma once

#include <cstdint>

#include <json.hpp>

#include <k3hilb/classify.hpp>
#include <k3hilb/cone.hpp>
#include <k3hilb/laurent_poly.hpp>
#include <k3hilb/motivic.hpp>
#include <k3hilb/pell.hpp>

// Canonical JSON forms. Integers of unbounded size are decimal strings; object keys are
// emitted in a fixed order.
namespace k3hilb::json_io {

using Json = nlohmann::ordered_json;

// [{"monomials": {"u": p, "v": q}, "c": "..."}...], terms in descending exponent order.
Json terms_to_json(const LaurentPoly& p);
LaurentPoly terms_from_json(const Json& j, const Alphabet& alphabet);

// {"alphabet": [...], "terms": [...]}
Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

// {"var": "T", "order": N, "alphabet": [...], "coeffs": [[terms of T^0], [terms of T^1], ...]}
Json to_json(const motivic::Series& s);
motivic::Series series_from_json(const Json& j);

Json to_json(const pell::PellSolution& s);
pell::PellSolution pell_from_json(const Json& j);

// {"tag": "B", "ray": {"a": "7", "b": "-6"} | null, "pell": {"x": "1", "y": "1"} | null}
Json to_json(const cone::ConeCase& c);
cone::ConeCase cone_case_from_json(const Json& j, std::int64_t d, std::int64_t n);

Json to_json(const classify::Certificate& cert);
classify::Certificate certificate_from_json(const Json& j);

} // namespace k3hilb::json_io
