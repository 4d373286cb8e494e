#include "ssx/scalar.hpp"

#include <cctype>
#include <cstdlib>

namespace ssx {
namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// cpp_int's string constructor treats leading "0"/"0x" as a radix prefix.
std::string strip_leading_zeros(std::string s) {
    std::size_t i = 0;
    while (i + 1 < s.size() && s[i] == '0') ++i;
    return s.substr(i);
}

using Int = boost::multiprecision::cpp_int;

Int pow10(long long e) {
    Int r = 1;
    for (long long i = 0; i < e; ++i) r *= 10;
    return r;
}

// Decimal literal with optional exponent -> exact rational.
Rational parse_decimal(const std::string& text) {
    std::string s = text;
    long long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        std::string etail = s.substr(epos + 1);
        char* end = nullptr;
        exp10 = std::strtoll(etail.c_str(), &end, 10);
        if (end == nullptr || *end != '\0' || etail.empty()) throw ParseError("bad exponent in '" + text + "'");
        s = s.substr(0, epos);
    }
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = (s[0] == '-');
        s = s.substr(1);
    }
    std::string digits;
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        digits = s;
    } else {
        digits = s.substr(0, dot) + s.substr(dot + 1);
        exp10 -= static_cast<long long>(s.size() - dot - 1);
    }
    if (!all_digits(digits)) throw ParseError("bad numeric literal '" + text + "'");
    Rational q{Int(strip_leading_zeros(digits))};
    if (exp10 >= 0)
        q *= Rational(pow10(exp10));
    else
        q /= Rational(pow10(-exp10));
    if (neg) q = -q;
    return q;
}

} // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        std::string n = num;
        if (!n.empty() && (n[0] == '+' || n[0] == '-')) n = n.substr(1);
        if (!all_digits(n) || !all_digits(den)) throw ParseError("bad rational literal '" + text + "'");
        Int d(strip_leading_zeros(den));
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        Int p(strip_leading_zeros(n));
        if (!n.empty() && num[0] == '-') p = -p;
        return Rational{p, d};
    }
    return parse_decimal(text);
}

std::string format_rational(const Rational& q) {
    std::string num = numerator(q).str();
    Int den = denominator(q);
    if (den == 1) return num;
    return num + "/" + den.str();
}

} // namespace ssx
