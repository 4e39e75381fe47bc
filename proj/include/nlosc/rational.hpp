#pragma once

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>

#include "nlosc/errors.hpp"

namespace nlosc {

// Exact rational p/q, normalized: q > 0, gcd(|p|, q) == 1.
// Used so that boundary tests on lambda (singular set, interval endpoints)
// can be decided exactly when the caller supplies "p/q" on the command line.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;

    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    // Sign of (*this - n/d). d may be any nonzero integer.
    int compare(long long n, long long d) const {
        if (d == 0) throw domain_error("Rational::compare: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 lhs = static_cast<__int128>(num) * d;
        __int128 rhs = static_cast<__int128>(n) * den;
        if (lhs < rhs) return -1;
        if (lhs > rhs) return 1;
        return 0;
    }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

// Accepts "p/q" or a bare integer; returns nullopt on anything else
// (floating point literals are handled separately by the caller).
inline std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto parse_int = [](const std::string& s, long long& out) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (std::size_t j = i; j < s.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
        errno = 0;
        char* end = nullptr;
        long long v = std::strtoll(s.c_str(), &end, 10);
        if (errno != 0 || end != s.c_str() + s.size()) return false;
        out = v;
        return true;
    };
    std::size_t slash = text.find('/');
    long long p = 0, q = 1;
    if (slash == std::string::npos) {
        if (!parse_int(text, p)) return std::nullopt;
    } else {
        if (!parse_int(text.substr(0, slash), p)) return std::nullopt;
        if (!parse_int(text.substr(slash + 1), q)) return std::nullopt;
        if (q == 0) return std::nullopt;
    }
    return Rational(p, q);
}

} // namespace nlosc
