#include "equilef/rational.hpp"

#include "equilef/errors.hpp"

namespace equilef {

bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

std::string format_rational(const Rational& q) {
    if (is_integral(q)) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

namespace {

Integer parse_integer(const std::string& s, const std::string& whole) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) throw Error(ErrorKind::InvalidArgument, "not a rational: '" + whole + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] < '0' || s[j] > '9') throw Error(ErrorKind::InvalidArgument, "not a rational: '" + whole + "'");
    }
    return Integer(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator: '" + text + "'");
    return Rational(num, den);
}

}  // namespace equilef
