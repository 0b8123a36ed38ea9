// 50-significant-digit backend.  Include only in translation units that
// actually instantiate extended-precision pipelines; the boost headers are
// heavy.
#ifndef OPUC_EXTENDED_HPP
#define OPUC_EXTENDED_HPP

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "opuc/numeric.hpp"

namespace opuc {

using ext_real = boost::multiprecision::cpp_bin_float_50;
using ext_complex = boost::multiprecision::cpp_complex_50;

template <>
struct num_traits<ext_real> {
    using real = ext_real;
    using complex = ext_complex;

    static constexpr int digits10 = 50;
    static constexpr int output_digits = 50;

    static ext_real pi() { return boost::math::constants::pi<ext_real>(); }
    static ext_real epsilon() { return std::numeric_limits<ext_real>::epsilon(); }

    static ext_real quad_target() { return ext_real("1e-44"); }
    static ext_real default_tolerance() { return ext_real("1e-20"); }
    static ext_real breakdown_margin() { return ext_real("1e-12"); }

    static ext_real tanh_sinh_tmax() { return ext_real("8.5"); }
    static int tanh_sinh_max_level() { return 12; }

    static int stirling_shift() { return 42; }
    static int stirling_terms() { return 34; }

    static const char* name() { return "extended:50"; }

    static ext_real parse(const std::string& s) {
        try {
            return ext_real(s);
        } catch (const std::exception&) {
            throw InvalidParameter("cannot parse real number '" + s + "'");
        }
    }

    static std::string str(const ext_real& x) {
        return x.str(output_digits, std::ios_base::scientific);
    }
};

}  // namespace opuc

#endif
