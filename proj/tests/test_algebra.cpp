#include <doctest.h>

#include <random>

#include "opuc/polynomial.hpp"
#include "opuc/special.hpp"

using opuc::ComplexPoly;
using C = std::complex<double>;
using P = ComplexPoly<double>;

TEST_CASE("poly_eval by Horner") {
    CHECK(P{C(1)}(C(5, 2)) == C(1));
    CHECK(std::abs(P{C(-1), C(0), C(1)}(C(1)) - C(0)) == 0.0);  // z^2 - 1 at z = 1
    // z^2 + i z at z = i:  -1 + i*i = -2
    CHECK(std::abs(P{C(0), C(0, 1), C(1)}(C(0, 1)) - C(-2)) < 1e-15);
}

TEST_CASE("poly_derivative") {
    CHECK(P{C(7)}.derivative() == P{C(0)});
    CHECK(P{C(-1), C(0), C(1)}.derivative() == P{C(0), C(2)});
    // z^3 + g z^2 -> 3 z^2 + 2 g z, g = 1+i
    C g(1, 1);
    CHECK(P{C(0), C(0), g, C(1)}.derivative() == P{C(0), C(2) * g, C(3)});
    CHECK(P{C(0), C(1), C(0), C(3)}.derivative().degree() == 2);
}

TEST_CASE("reciprocal polynomial") {
    C a0(0.4, -0.3);
    // p = z - conj(a0) with n = 1 -> -a0 z + 1
    P p{-std::conj(a0), C(1)};
    P ps = p.reciprocal(1);
    CHECK(std::abs(ps.coeff(0) - C(1)) == 0.0);
    CHECK(std::abs(ps.coeff(1) + a0) == 0.0);

    CHECK(P{C(1)}.reciprocal(0) == P{C(1)});
    CHECK_THROWS_AS((P{C(0), C(0), C(1)}.reciprocal(1)), opuc::DegreeMismatch);

    // involution at fixed n
    P q{C(1, 2), C(-0.5, 0.25), C(0, 1), C(3)};
    CHECK(q.reciprocal(5).reciprocal(5) == q);
}

TEST_CASE("pochhammer") {
    CHECK(opuc::pochhammer<double>(C(2.75, -4), 0) == C(1));
    CHECK(opuc::pochhammer<double>(C(2), 3) == C(24));
    CHECK(std::abs(opuc::pochhammer<double>(C(0, 1), 2) - C(-1, 1)) < 1e-15);

    // (a)_{m+n} = (a)_m (a+m)_n
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        C a(dist(rng), dist(rng));
        int m = trial % 5, n = (trial * 7) % 6;
        C lhs = opuc::pochhammer<double>(a, m + n);
        C rhs = opuc::pochhammer<double>(a, m) *
                opuc::pochhammer<double>(a + C(double(m)), n);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("terminating 2F1") {
    CHECK(opuc::hyp2f1_terminating<double>(0, C(2, 1), C(0.5), C(9, 9)) == C(1));
    CHECK(opuc::hyp2f1_terminating<double>(5, C(2, 1), C(0.5), C(0)) == C(1));
    CHECK_THROWS_AS(opuc::hyp2f1_terminating<double>(4, C(1), C(-2), C(0.3)),
                    opuc::ParameterPole);

    // n = 1: 1 - b/c x
    C b(1.5, -0.5), c(2, 1), x(0.3, 0.7);
    C expect = C(1) - b / c * x;
    CHECK(std::abs(opuc::hyp2f1_terminating<double>(1, b, c, x) - expect) < 1e-15);

    // Chu-Vandermonde: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
    for (int n = 1; n <= 8; ++n) {
        C lhs = opuc::hyp2f1_terminating<double>(n, b, c, C(1));
        C rhs = opuc::pochhammer<double>(c - b, n) / opuc::pochhammer<double>(c, n);
        CHECK(std::abs(lhs - rhs) <= 1e-13 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("log gamma, complex principal branch") {
    auto lg = [](C z) { return opuc::log_gamma_complex<double>(z); };
    CHECK(std::abs(lg(C(1))) < 1e-14);
    CHECK(std::abs(lg(C(5)) - std::log(24.0)) < 1e-13);
    CHECK_THROWS_AS(lg(C(0)), opuc::GammaPole);
    CHECK_THROWS_AS(lg(C(-3)), opuc::GammaPole);

    // reflection oracle: |Gamma(1+i)|^2 = pi / sinh(pi)
    double expect = M_PI / std::sinh(M_PI);
    double got = std::exp(2.0 * lg(C(1, 1)).real());
    CHECK(std::abs(got - expect) <= 1e-12 * expect);

    // functional equation on a grid avoiding poles
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> re(-4.3, 4.3), im(0.1, 4.0);
    for (int trial = 0; trial < 60; ++trial) {
        C z(re(rng), im(rng) * (trial % 2 ? 1 : -1));
        C lhs = std::exp(lg(z + C(1)));
        C rhs = z * std::exp(lg(z));
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(lhs));
    }
}

TEST_CASE("bessel I0") {
    CHECK(opuc::bessel_i0(0.0) == 1.0);
    CHECK(opuc::bessel_i0(-2.5) == opuc::bessel_i0(2.5));

    // quadrature oracle: I0(t) = (1/2pi) int_0^{2pi} e^{t cos theta} dtheta
    for (double t : {1.0, 2.0}) {
        const int m = 400;
        double acc = 0;
        for (int j = 0; j < m; ++j) acc += std::exp(t * std::cos(2 * M_PI * (j + 0.5) / m));
        acc /= m;
        CHECK(std::abs(opuc::bessel_i0(t) - acc) <= 1e-12 * acc);
    }
}
