#include <k3hilb/trace_expr.hpp>

#include <cctype>
#include <vector>

#include <k3hilb/lattice.hpp>

namespace k3hilb::classify {

namespace {

class Parser
{
public:
    Parser(std::string_view text, const TraceBindings& b) : text_(text), bindings_(b) {}

    BigInt parse()
    {
        BigInt v = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("trailing input");
        }
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw TraceSyntaxError(what + " at offset " + std::to_string(pos_) + " in '" +
                               std::string(text_) + "'");
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BigInt expr()
    {
        BigInt v = term();
        for (;;) {
            if (eat('+')) {
                v += term();
            } else if (eat('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    BigInt term()
    {
        BigInt v = unary();
        while (eat('*')) {
            v *= unary();
        }
        return v;
    }

    BigInt unary()
    {
        if (eat('-')) {
            return -unary();
        }
        return power();
    }

    BigInt power()
    {
        BigInt base = primary();
        if (eat('^')) {
            const BigInt e = power();
            if (e < 0 || e > 4096) {
                fail("exponent out of range");
            }
            return boost::multiprecision::pow(base, e.convert_to<unsigned>());
        }
        return base;
    }

    BigInt primary()
    {
        skip_ws();
        if (eat('(')) {
            BigInt v = expr();
            if (!eat(')')) {
                fail("expected ')'");
            }
            return v;
        }
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            return parse_bigint(text_.substr(start, pos_ - start));
        }
        if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string_view name = text_.substr(start, pos_ - start);
            if (eat('(')) {
                std::vector<BigInt> args{expr()};
                while (eat(',')) {
                    args.push_back(expr());
                }
                if (!eat(')')) {
                    fail("expected ')'");
                }
                return call(name, args);
            }
            const auto it = bindings_.vars.find(name);
            if (it == bindings_.vars.end()) {
                fail("unbound variable '" + std::string(name) + "'");
            }
            return it->second;
        }
        fail("unexpected input");
    }

    BigInt call(std::string_view name, const std::vector<BigInt>& args) const
    {
        if (args.size() != 2) {
            fail("functions take two arguments");
        }
        if (name == "q") {
            return lattice::bbf_q({args[0], args[1], bindings_.d, bindings_.n});
        }
        if (name == "gcd") {
            return gcd(args[0], args[1]);
        }
        fail("unknown function '" + std::string(name) + "'");
    }

    std::string_view text_;
    const TraceBindings& bindings_;
    std::size_t pos_ = 0;
};

} // namespace

BigInt evaluate_trace_expression(std::string_view expr, const TraceBindings& bindings)
{
    return Parser(expr, bindings).parse();
}

} // namespace k3hilb::classify
