#include "adjalg/rational.hpp"

#include "adjalg/errors.hpp"

namespace adjalg {

std::string to_string(const Rational& x) {
    return x.str();
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') ++pos;
    if (pos == s.size()) throw ParseError("bad rational literal: " + s);
    bool seen_slash = false;
    for (std::size_t i = pos; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            if (seen_slash || i == pos || i + 1 == s.size())
                throw ParseError("bad rational literal: " + s);
            seen_slash = true;
            continue;
        }
        if (c < '0' || c > '9') throw ParseError("bad rational literal: " + s);
    }
    if (seen_slash && s.back() == '0') {
        // A zero denominator would abort inside GMP; reject "x/0",
        // "x/00" and the like before construction.
        std::size_t slash = s.find('/');
        bool all_zero = true;
        for (std::size_t i = slash + 1; i < s.size(); ++i)
            if (s[i] != '0') all_zero = false;
        if (all_zero) throw ParseError("zero denominator: " + s);
    }
    return Rational(s);
}

bool is_binary_value(const Rational& x) {
    return x == 0 || x == 1;
}

bool is_integer_value(const Rational& x) {
    return boost::multiprecision::denominator(x) == 1;
}

Integer to_integer(const Rational& x) {
    if (!is_integer_value(x)) throw Error("to_integer: " + x.str() + " is not integral");
    return boost::multiprecision::numerator(x);
}

}  // namespace adjalg
