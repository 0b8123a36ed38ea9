// Scalar abstraction: every numerical routine in this library is generic over
// a real type R selected through num_traits<R>.  The two supported backends
// are double (num_traits below) and a 50-digit binary float (extended.hpp).
#ifndef OPUC_NUMERIC_HPP
#define OPUC_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>

#include "opuc/errors.hpp"

namespace opuc {

template <class R>
struct num_traits;

template <>
struct num_traits<double> {
    using real = double;
    using complex = std::complex<double>;

    static constexpr int digits10 = 16;
    static constexpr int output_digits = 17;

    static double pi() { return 3.14159265358979323846264338327950288; }
    static double epsilon() { return std::numeric_limits<double>::epsilon(); }

    // absolute target for moment quadrature
    static double quad_target() { return 5e-15; }
    // default residual tolerance for verification runs
    static double default_tolerance() { return 1e-8; }
    // |alpha_n| >= 1 - margin diagnoses precision exhaustion
    static double breakdown_margin() { return 1e-6; }

    static double tanh_sinh_tmax() { return 6.0; }
    static int tanh_sinh_max_level() { return 10; }

    static int stirling_shift() { return 20; }
    static int stirling_terms() { return 13; }

    static const char* name() { return "double"; }

    static double parse(const std::string& s) {
        char* end = nullptr;
        double v = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0')
            throw InvalidParameter("cannot parse real number '" + s + "'");
        return v;
    }

    static std::string str(double x) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%.*g", output_digits, x);
        return buf;
    }
};

template <class R>
using complex_t = typename num_traits<R>::complex;

// ADL-friendly wrappers so generic code reads the same for both backends.
template <class Cx>
auto cabs(const Cx& z) {
    using std::abs;
    return abs(z);
}

template <class Cx>
Cx cconj(const Cx& z) {
    using std::conj;
    return conj(z);
}

template <class Cx>
auto carg(const Cx& z) {
    using std::atan2;
    return atan2(z.imag(), z.real());
}

// |z|^2 without the sqrt/rounding of abs()
template <class Cx>
auto cnorm(const Cx& z) {
    return z.real() * z.real() + z.imag() * z.imag();
}

template <class R>
complex_t<R> unit_circle(const R& theta) {
    using std::cos;
    using std::sin;
    return complex_t<R>(cos(theta), sin(theta));
}

template <class R>
bool is_zero(const complex_t<R>& z) {
    return z.real() == R(0) && z.imag() == R(0);
}

// Splits "a+bi" decimal syntax into its two decimal component strings:
// "1" -> ("1","0"); "1-0.5i" -> ("1","-0.5"); "i" -> ("0","1").
inline std::pair<std::string, std::string> split_complex_literal(const std::string& in) {
    std::string s;
    for (char ch : in)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw InvalidParameter("empty complex literal");

    auto unit_fix = [](std::string p) -> std::string {
        if (p.empty() || p == "+") return "1";
        if (p == "-") return "-1";
        return p;
    };

    if (s.back() != 'i' && s.back() != 'I') return {s, "0"};

    std::string body = s.substr(0, s.size() - 1);
    // split at the last sign that is not leading and not part of an exponent
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return {"0", unit_fix(body)};
    return {body.substr(0, split), unit_fix(body.substr(split))};
}

// Parses "a+bi" decimal syntax: "1", "-2.5", "1+0.5i", "1-i", "i", "0.5i", "1e-3+2e4i".
template <class R>
complex_t<R> parse_complex(const std::string& in) {
    auto [re, im] = split_complex_literal(in);
    return complex_t<R>(num_traits<R>::parse(re), num_traits<R>::parse(im));
}

template <class R>
std::string complex_str(const complex_t<R>& z) {
    std::string im = num_traits<R>::str(z.imag());
    std::string sep = (!im.empty() && im[0] == '-') ? "" : "+";
    return num_traits<R>::str(z.real()) + sep + im + "i";
}

}  // namespace opuc

#endif
