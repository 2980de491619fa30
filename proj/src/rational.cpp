#include "gqc/rational.hpp"

#include <cctype>

#include "gqc/error.hpp"

namespace gqc {

std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

BigInt parse_int(std::string_view s) {
    std::string digits(s);
    if (digits.empty() || digits == "-" || digits == "+")
        throw Error(ErrorKind::ParseError, "empty integer in rational");
    std::size_t start = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
    for (std::size_t i = start; i < digits.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(digits[i])))
            throw Error(ErrorKind::ParseError, "bad rational '" + std::string(s) + "'");
    if (digits[0] == '+') digits.erase(0, 1);
    return BigInt(digits);
}

}  // namespace

Rational parse_rational(std::string_view s) {
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        const BigInt den = parse_int(s.substr(slash + 1));
        if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
        return Rational(parse_int(s.substr(0, slash)), den);
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        const std::string_view frac = s.substr(dot + 1);
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const std::string_view whole = s.substr(0, dot);
        const bool negative = !whole.empty() && whole[0] == '-';
        BigInt w = (whole.empty() || whole == "-" || whole == "+") ? BigInt(0) : parse_int(whole);
        BigInt f = frac.empty() ? BigInt(0) : parse_int(frac);
        if (negative) f = -f;
        return Rational(w * scale + f, scale);
    }
    return Rational(parse_int(s));
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace gqc
