#include <k3hilb/laurent_poly.hpp>

#include <algorithm>
#include <sstream>

namespace k3hilb {

LaurentPoly::LaurentPoly(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

LaurentPoly::LaurentPoly(Alphabet alphabet, Terms terms) : alphabet_(std::move(alphabet))
{
    for (auto& [exps, c] : terms) {
        check_exponents(exps);
        if (c != 0) {
            terms_.emplace(exps, std::move(c));
        }
    }
}

LaurentPoly LaurentPoly::constant(Alphabet alphabet, const BigInt& c)
{
    Exponents zero(alphabet.size(), 0);
    return monomial(std::move(alphabet), std::move(zero), c);
}

LaurentPoly LaurentPoly::monomial(Alphabet alphabet, Exponents exps, const BigInt& c)
{
    LaurentPoly p(std::move(alphabet));
    p.check_exponents(exps);
    if (c != 0) {
        p.terms_.emplace(std::move(exps), c);
    }
    return p;
}

LaurentPoly LaurentPoly::variable(Alphabet alphabet, std::string_view name, int power)
{
    const auto it = std::find(alphabet.begin(), alphabet.end(), name);
    if (it == alphabet.end()) {
        throw AlphabetMismatch("variable '" + std::string(name) + "' not in alphabet");
    }
    Exponents exps(alphabet.size(), 0);
    exps[static_cast<std::size_t>(it - alphabet.begin())] = power;
    return monomial(std::move(alphabet), std::move(exps));
}

void LaurentPoly::check_same_alphabet(const LaurentPoly& o) const
{
    if (alphabet_ != o.alphabet_) {
        throw AlphabetMismatch("polynomial alphabets differ");
    }
}

void LaurentPoly::check_exponents(const Exponents& exps) const
{
    if (exps.size() != alphabet_.size()) {
        throw AlphabetMismatch("exponent vector length does not match alphabet size");
    }
}

BigInt LaurentPoly::coefficient(const Exponents& exps) const
{
    const auto it = terms_.find(exps);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPoly::at_ones() const
{
    BigInt s = 0;
    for (const auto& [exps, c] : terms_) {
        s += c;
    }
    return s;
}

int LaurentPoly::min_exponent(std::size_t i) const
{
    if (terms_.empty()) {
        return 0;
    }
    int m = terms_.begin()->first.at(i);
    for (const auto& [exps, c] : terms_) {
        m = std::min(m, exps[i]);
    }
    return m;
}

LaurentPoly LaurentPoly::shifted(const Exponents& exps) const
{
    check_exponents(exps);
    LaurentPoly r(alphabet_);
    for (const auto& [e, c] : terms_) {
        Exponents s = e;
        for (std::size_t i = 0; i < s.size(); ++i) {
            s[i] += exps[i];
        }
        r.terms_.emplace(std::move(s), c);
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) {
        c = -c;
    }
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    check_same_alphabet(o);
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    return *this += -o;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigInt& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) {
        v *= c;
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    a.check_same_alphabet(b);
    LaurentPoly r(a.alphabet_);
    Exponents e(a.alphabet_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            auto [it, inserted] = r.terms_.try_emplace(e, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) {
                    r.terms_.erase(it);
                }
            }
        }
    }
    return r;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [exps, c] = *it;
        const bool negative = c < 0;
        const BigInt mag = negative ? BigInt(-c) : c;
        if (first) {
            if (negative) {
                os << '-';
            }
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += '*';
            }
            mono += alphabet_[i];
            if (exps[i] != 1) {
                mono += '^';
                mono += exps[i] < 0 ? "(" + std::to_string(exps[i]) + ")" : std::to_string(exps[i]);
            }
        }
        if (mono.empty()) {
            os << mag;
        } else if (mag == 1) {
            os << mono;
        } else {
            os << mag << '*' << mono;
        }
    }
    return os.str();
}

bool RingTraits<LaurentPoly>::is_unit(const LaurentPoly& p)
{
    if (!p.is_monomial()) {
        return false;
    }
    const BigInt& c = p.terms().begin()->second;
    return c == 1 || c == -1;
}

LaurentPoly RingTraits<LaurentPoly>::unit_inverse(const LaurentPoly& p)
{
    const auto& [exps, c] = *p.terms().begin();
    Exponents inv = exps;
    for (int& e : inv) {
        e = -e;
    }
    return LaurentPoly::monomial(p.alphabet(), std::move(inv), c);
}

} // namespace k3hilb
