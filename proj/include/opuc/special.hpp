// Special functions needed by the weight catalog: rising factorials,
// terminating 2F1 sums, the principal branch of log Gamma, and I0.
#ifndef OPUC_SPECIAL_HPP
#define OPUC_SPECIAL_HPP

#include <boost/math/special_functions/bernoulli.hpp>

#include "opuc/numeric.hpp"

namespace opuc {

// (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1
template <class R>
complex_t<R> pochhammer(const complex_t<R>& a, int n) {
    complex_t<R> acc(1);
    for (int k = 0; k < n; ++k) acc *= a + complex_t<R>(R(k));
    return acc;
}

// 2F1(-n, b; c; x) as the finite sum over k = 0..n.
// Requires c + k != 0 for k = 0..n-1.
template <class R>
complex_t<R> hyp2f1_terminating(int n, const complex_t<R>& b, const complex_t<R>& c,
                                const complex_t<R>& x) {
    using C = complex_t<R>;
    for (int k = 0; k < n; ++k)
        if (is_zero<R>(c + C(R(k))))
            throw ParameterPole("hyp2f1_terminating: c + " + std::to_string(k) + " = 0");
    C sum(1), term(1);
    for (int k = 0; k < n; ++k) {
        term *= C(R(-n + k)) * (b + C(R(k))) * x / ((c + C(R(k))) * C(R(k + 1)));
        sum += term;
    }
    return sum;
}

// Principal branch of log Gamma via the Stirling series after shifting the
// argument to Re z >= num_traits<R>::stirling_shift().  The shift identity
// log G(z) = log G(z+m) - sum log(z+k) with principal logs holds off the
// cut (-inf, 0]; real negative arguments get the limit from above.
template <class R>
complex_t<R> log_gamma_complex(complex_t<R> z) {
    using C = complex_t<R>;
    using std::floor;
    using std::log;

    if (z.imag() == R(0) && z.real() <= R(0) && floor(z.real()) == z.real())
        throw GammaPole("log_gamma_complex at z = " + num_traits<R>::str(z.real()));

    const R shift(num_traits<R>::stirling_shift());
    C corr(0);
    while (z.real() < shift) {
        corr += log(z);
        z += C(1);
    }

    const R pi = num_traits<R>::pi();
    const R half(0.5), one(1);
    // log G(z) ~ (z - 1/2) log z - z + log(2 pi)/2 + sum B_2j / (2j (2j-1) z^(2j-1))
    C acc = (z - C(half)) * log(z) - z + C(log(R(2) * pi) * half);
    const C z2 = z * z;
    C zpow = z;  // z^(2j-1)
    for (int j = 1; j <= num_traits<R>::stirling_terms(); ++j) {
        R b2j = boost::math::bernoulli_b2n<R>(j);
        acc += C(b2j / (R(2 * j) * R(2 * j - 1))) / zpow;
        zpow *= z2;
    }
    (void)one;
    return acc - corr;
}

// I0(t) = sum_k (t/2)^(2k) / (k!)^2
template <class R>
R bessel_i0(const R& t) {
    const R q = t * t / R(4);
    R term(1), sum(1);
    for (int k = 1; k < 10000; ++k) {
        term *= q / (R(k) * R(k));
        sum += term;
        if (term <= sum * num_traits<R>::epsilon()) break;
    }
    return sum;
}

}  // namespace opuc

#endif
