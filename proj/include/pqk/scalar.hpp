#pragma once

// Exact scalar types for the verification engine.
//
// Rational   — arbitrary-precision rational, the default scalar. Every
//              theorem check in the suite is an exact identity in Q.
// QuadExt<R> — elements a + b*sqrt(d) of a real quadratic field Q(sqrt d):
//              the *-Einstein roots for the second structure live in
//              Q(sqrt(9n^2-10n+5)) and are handled without any floats.
// double     — optional float mode; comparisons then carry tolerance 1e-10.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pqk {

using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Parses "p", "-p/q" (arbitrary precision). Throws std::invalid_argument.
inline Rational parse_rational(const std::string& s)
{
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(boost::multiprecision::cpp_int(s));
        boost::multiprecision::cpp_int num(s.substr(0, slash));
        boost::multiprecision::cpp_int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(std::string("bad rational literal '") + s + "': " + e.what());
    }
}

// a + b*sqrt(d). d is carried per value; pure-rational values (b == 0) mix
// freely, two values with b != 0 must agree on d.
template <class R>
struct QuadExt {
    R a{};
    R b{};
    long d = 0;

    QuadExt() = default;
    QuadExt(R ra) : a(std::move(ra)) {}              // NOLINT(google-explicit-constructor)
    QuadExt(int v) : a(v) {}                         // NOLINT(google-explicit-constructor)
    QuadExt(R ra, R rb, long dd) : a(std::move(ra)), b(std::move(rb)), d(dd)
    {
        if (b == 0) d = 0;
    }

    static long join(const QuadExt& x, const QuadExt& y)
    {
        if (x.b != 0 && y.b != 0 && x.d != y.d)
            throw std::logic_error("QuadExt: mixed radicands");
        return x.b != 0 ? x.d : y.d;
    }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y)
    {
        return {x.a + y.a, x.b + y.b, join(x, y)};
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y)
    {
        return {x.a - y.a, x.b - y.b, join(x, y)};
    }
    friend QuadExt operator-(const QuadExt& x) { return {-x.a, -x.b, x.d}; }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y)
    {
        long dd = join(x, y);
        return {x.a * y.a + x.b * y.b * dd, x.a * y.b + x.b * y.a, dd};
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y)
    {
        long dd = join(x, y);
        R den = y.a * y.a - y.b * y.b * dd;
        if (den == 0) throw std::domain_error("QuadExt: division by zero");
        QuadExt conj{y.a / den, -y.b / den, dd};
        return x * conj;
    }
    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y)
    {
        return x.a == y.a && x.b == y.b && (x.b == 0 || x.d == y.d);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
};

using QRational = QuadExt<Rational>;

inline std::string to_string(const QRational& q)
{
    if (q.b == 0) return to_string(q.a);
    std::string bs = to_string(q.b);
    std::string out = to_string(q.a);
    out += (bs.size() && bs[0] == '-') ? "" : "+";
    out += bs + "*sqrt(" + std::to_string(q.d) + ")";
    return out;
}

inline double to_double(const QRational& q)
{
    return to_double(q.a) + to_double(q.b) * std::sqrt(static_cast<double>(q.d));
}

inline std::string to_string(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline double to_double(double v) { return v; }

// Field traits: exact scalars compare exactly, double carries 1e-10.
template <class K>
struct scalar_traits {
    static constexpr bool exact = true;
    static bool eq(const K& x, const K& y) { return x == y; }
    static bool is_zero(const K& x) { return x == K(0); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static constexpr double tol = 1e-10;
    static bool eq(double x, double y) { return std::fabs(x - y) <= tol; }
    static bool is_zero(double x) { return std::fabs(x) <= tol; }
};

template <class K>
bool scalar_eq(const K& x, const K& y) { return scalar_traits<K>::eq(x, y); }

template <class K>
bool scalar_is_zero(const K& x) { return scalar_traits<K>::is_zero(x); }

}  // namespace pqk
