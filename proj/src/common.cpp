#include "cheb/common.hpp"

#include <charconv>
#include <cmath>

namespace cheb {

std::string to_string(const Rational& q) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& s) {
    auto bad = [&] { return ValidationError("not a rational number: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational n = parse_rational(s.substr(0, slash)), d = parse_rational(s.substr(slash + 1));
        if (d == 0) throw bad();
        return n / d;
    }
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
    BigInt num = 0, den = 1;
    bool digits = false, dot = false;
    for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
        if (s[i] == '.' && !dot) {
            dot = true;
        } else if (s[i] >= '0' && s[i] <= '9') {
            num = num * 10 + (s[i] - '0');
            if (dot) den *= 10;
            digits = true;
        } else {
            throw bad();
        }
    }
    if (!digits) throw bad();
    Rational q(num, den);
    if (i < s.size()) {
        std::string e = s.substr(i + 1);
        if (e.empty()) throw bad();
        int ev = 0;
        auto [p, ec] = std::from_chars(e.data() + (e[0] == '+' ? 1 : 0), e.data() + e.size(), ev);
        if (ec != std::errc() || p != e.data() + e.size() || ev > 400 || ev < -400) throw bad();
        Rational ten = 10;
        for (int k = 0; k < (ev < 0 ? -ev : ev); ++k) q = ev < 0 ? Rational(q / ten) : Rational(q * ten);
    }
    return neg ? -q : q;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string fmt_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string fmt_double(double x, int digits) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

}  // namespace cheb
