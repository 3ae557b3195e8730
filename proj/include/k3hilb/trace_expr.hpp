#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <k3hilb/bigint.hpp>

namespace k3hilb::classify {

class TraceSyntaxError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Variables visible to a norm-trace expression, plus the (d, n) that q(a, b) evaluates on.
struct TraceBindings {
    std::map<std::string, BigInt, std::less<>> vars;
    std::int64_t d = 1;
    std::int64_t n = 2;
};

// Integer arithmetic over + - * ^ and parentheses, identifiers from `bindings`, and the
// functions q(a, b) = BBF norm of a Ht + b B and gcd(a, b).
BigInt evaluate_trace_expression(std::string_view expr, const TraceBindings& bindings);

} // namespace k3hilb::classify
