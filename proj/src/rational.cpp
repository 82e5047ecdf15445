#include "nambu/rational.hpp"

#include "nambu/errors.hpp"

namespace nambu {

namespace {

// Optional leading minus followed by one or more decimal digits; rejects the
// hex/octal prefixes and empty strings the multiprecision parser tolerates.
bool is_decimal_integer(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto bad = [&] { throw ParseError("invalid rational: '" + text + "'"); };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_decimal_integer(text)) bad();
        return Rational(Integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_decimal_integer(num) || !is_decimal_integer(den)) bad();
    Integer d(den);
    if (d == 0) bad();
    return Rational(Integer(num), d);
}

std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace nambu
