#pragma once

#include <gmpxx.h>

#include <charconv>
#include <cmath>
#include <concepts>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace krawtchouk {

/// Exact arbitrary-precision rational, the reference arithmetic backend.
using Rational = mpq_class;

/// Scalar types the library is instantiated with: exact rationals or double.
template <class S>
concept field_scalar = requires(S a, S b) {
    S(0);
    S(1);
    S(-3);
    { S(a + b) };
    { S(a - b) };
    { S(a * b) };
    { S(a / b) };
    { a == b } -> std::convertible_to<bool>;
};

/// num/den with canonicalization (mpq_class(a,b) alone does not reduce).
inline Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace detail {

inline Rational rational_from_decimal(std::string_view s) {
    // [sign] digits [. digits] [ (e|E) [sign] digits ]
    std::string mantissa;
    long frac_digits = 0;
    long exponent = 0;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) mantissa += s[i++];
    bool any_digit = false;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
        mantissa += s[i];
        any_digit = true;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
            mantissa += s[i];
            ++frac_digits;
            any_digit = true;
        }
    }
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
        if (i == s.size()) throw std::invalid_argument("bad exponent");
        long e = 0;
        for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i)
            e = e * 10 + (s[i] - '0');
        exponent = neg ? -e : e;
    }
    if (!any_digit || i != s.size())
        throw std::invalid_argument("not a decimal literal: " + std::string(s));

    mpz_class digits(mantissa.empty() || mantissa == "-" || mantissa == "+" ? "0" : mantissa, 10);
    long ten_power = exponent - frac_digits;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(ten_power)));
    Rational r;
    if (ten_power >= 0)
        r = Rational(digits * scale);
    else
        r = Rational(digits, scale);
    r.canonicalize();
    return r;
}

}  // namespace detail

/// Parse "a/b", an integer, or a decimal/scientific literal, exactly.
inline Rational rational_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::string str(s);
    if (str.find('/') != std::string::npos) {
        Rational r;
        try {
            r = Rational(str, 10);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("not a rational literal: " + str);
        }
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + str);
        r.canonicalize();
        return r;
    }
    if (str.find('.') != std::string::npos || str.find('e') != std::string::npos ||
        str.find('E') != std::string::npos)
        return detail::rational_from_decimal(str);
    try {
        return Rational(str, 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational literal: " + str);
    }
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Shortest round-trip decimal form, byte-stable across runs.
inline std::string to_string(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, end);
}

/// b^e for integer e; negative e inverts (b must be nonzero then).
template <field_scalar S>
S pow_int(const S& base, long e) {
    if (e < 0) return S(S(1) / pow_int(base, -e));
    S acc(1);
    S b = base;
    long n = e;
    while (n > 0) {
        if (n & 1) acc = S(acc * b);
        b = S(b * b);
        n >>= 1;
    }
    return acc;
}

/// |a-b| <= tol * max(|a|, |b|, scale).
inline bool approx_equal(double a, double b, double tol = 1e-9, double scale = 1.0) {
    double m = std::max({std::fabs(a), std::fabs(b), scale});
    return std::fabs(a - b) <= tol * m;
}

template <field_scalar S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static const char* name() { return "exact"; }
    static double to_double(const Rational& r) { return r.get_d(); }
    static Rational from_rational(const Rational& r) { return r; }
    static bool eq(const Rational& a, const Rational& b, double = 1e-9) { return a == b; }
    static std::string str(const Rational& r) { return to_string(r); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static const char* name() { return "float"; }
    static double to_double(double x) { return x; }
    static double from_rational(const Rational& r) { return r.get_d(); }
    static bool eq(double a, double b, double tol = 1e-9) { return approx_equal(a, b, tol); }
    static std::string str(double x) { return to_string(x); }
};

}  // namespace krawtchouk
