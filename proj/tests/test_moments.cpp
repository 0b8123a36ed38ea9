#include <doctest.h>

#include <random>
#include <sstream>

#include "opuc/io.hpp"
#include "opuc/moments.hpp"

using namespace opuc;
using C = std::complex<double>;
using P = ComplexPoly<double>;

namespace {

// independent oracle: I_k(t) = sum_m (t/2)^(2m+k) / (m! (m+k)!)
double bessel_ik_series(int k, double t) {
    double term = std::pow(t / 2, k);
    for (int j = 2; j <= k; ++j) term /= j;
    double sum = term;
    for (int m = 1; m < 200; ++m) {
        term *= (t * t / 4) / (m * (m + k));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

P random_poly(std::mt19937& rng, int deg) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<C> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = C(d(rng), d(rng));
    if (std::abs(c.back()) < 0.1) c.back() += C(0.5);
    return P(std::move(c));
}

}  // namespace

TEST_CASE("Lebesgue moments are a delta") {
    auto T = compute_moments<double>(make_spec(Family::lebesgue), 10);
    CHECK(T.mu(0).real() == doctest::Approx(1.0).epsilon(1e-14));
    for (int k = 1; k <= 10; ++k) {
        CHECK(std::abs(T.mu(k)) < 1e-14);
        CHECK(std::abs(T.mu(-k)) < 1e-14);
    }
    CHECK_THROWS_AS(T.mu(11), MomentRangeExceeded);
}

TEST_CASE("Bessel moments against the I_k series oracle") {
    for (double t : {0.5, 1.0, 2.0}) {
        WeightSpec spec = make_spec(Family::bessel, {{"t", num_traits<double>::str(t)}}, false);
        auto T = compute_moments<double>(spec, 8);
        for (int k = 0; k <= 8; ++k) {
            double expect = 2 * M_PI * bessel_ik_series(k, t);
            CHECK(T.mu(k).real() == doctest::Approx(expect).epsilon(1e-12));
            CHECK(std::abs(T.mu(k).imag()) < 1e-13);
        }
        CHECK(T.mu(0).real() == doctest::Approx(2 * M_PI * bessel_i0(t)).epsilon(1e-13));
    }
}

TEST_CASE("conjugate symmetry and mu0 normalization across the catalog") {
    for (const auto& spec : default_catalog()) {
        CAPTURE(family_name(spec.family));
        auto T = compute_moments<double>(spec, 6);
        CHECK(T.mu(0).real() == doctest::Approx(1.0).epsilon(1e-11));
        CHECK(std::abs(T.mu(0).imag()) < 1e-13);
        for (int k = 1; k <= 6; ++k) CHECK(T.mu(-k) == std::conj(T.mu(k)));  // by construction
        // 3x3 Toeplitz section positivity
        C m0 = T.mu(0), m1 = T.mu(1), m2 = T.mu(2);
        double det3 = ((m0 * (m0 * m0 - m1 * std::conj(m1)) -
                        m1 * (std::conj(m1) * m0 - m1 * std::conj(m2)) +
                        m2 * (std::conj(m1) * std::conj(m1) - m0 * std::conj(m2))))
                          .real();
        CHECK(det3 > 0.0);
    }
}

TEST_CASE("circular Jacobi lambda=1: first moment from the brute-force oracle") {
    // mu_1 = (1/pi) int e^{-i theta} sin^2(theta/2) dtheta = -1/2 (high-node rectangle sum)
    const int m = 5000;
    C acc(0);
    for (int j = 0; j < m; ++j) {
        double th = 2 * M_PI * (j + 0.5) / m;
        acc += std::polar(1.0, -th) * (std::sin(th / 2) * std::sin(th / 2) / M_PI);
    }
    acc *= 2 * M_PI / m;
    auto T = compute_moments<double>(make_spec(Family::circular_jacobi, {{"lambda", "1"}}), 4);
    CHECK(std::abs(T.mu(1) - acc) < 1e-12);
    CHECK(T.mu(1).real() == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(std::abs(T.mu(1).imag()) < 1e-13);
}

TEST_CASE("inner product basics") {
    auto T = compute_moments<double>(make_spec(Family::lebesgue), 8);
    CHECK(inner_product(T, P{C(1)}, P{C(1)}) == T.mu(0));
    CHECK(inner_product(T, P{C(0), C(1)}, P{C(1)}) == T.mu(-1));
    for (int n = 0; n <= 4; ++n)
        for (int mdeg = 0; mdeg <= 4; ++mdeg) {
            C v = inner_product(T, P::monomial(n), P::monomial(mdeg));
            CHECK(std::abs(v - (n == mdeg ? C(1) : C(0))) < 1e-13);
        }
}

TEST_CASE("inner product is a positive hermitian form") {
    std::mt19937 rng(11);
    std::vector<WeightSpec> specs;
    {
        WeightSpec s = make_spec(Family::sri_ranga);
        set_param(s, "b", "0.8", "-0.3");
        specs.push_back(s);
    }
    specs.push_back(make_spec(Family::bessel, {{"t", "2"}}));
    specs.push_back(make_spec(Family::jacobi, {{"lambda", "0.25"}, {"beta", "1.5"}}));
    for (const auto& spec : specs) {
        CAPTURE(family_name(spec.family));
        auto T = compute_moments<double>(spec, 12);
        for (int trial = 0; trial < 25; ++trial) {
            P f = random_poly(rng, trial % 5);
            P g = random_poly(rng, (trial + 2) % 6);
            C fg = inner_product(T, f, g);
            C gf = inner_product(T, g, f);
            CHECK(std::abs(fg - std::conj(gf)) <= 1e-13 * (1 + std::abs(fg)));
            C ff = inner_product(T, f, f);
            CHECK(ff.real() > 0.0);
            CHECK(std::abs(ff.imag()) <= 1e-13 * ff.real());
        }
    }
}

TEST_CASE("integration by parts identity and its orthogonality consequence") {
    // <A Phi_n', z^k> = <Phi_n [iB + (k+1)A], z^{k+1}>  (k = 0..n), and
    // <A Phi_n', z^k> = 0 for k = 1..n-2, for pairs passing the boundary check
    for (const auto& spec : default_catalog()) {
        CAPTURE(family_name(spec.family));
        auto ctx = make_context<double>(spec);
        const int n_hi = 8;
        auto T = compute_moments(ctx, n_hi + 3);

        // Szego recurrence inline (the mopuc module gets its own tests)
        std::vector<P> phi{P{C(1)}};
        for (int n = 0; n < n_hi; ++n) {
            P zp = phi.back().shift_z(1);
            P ps = phi.back().reciprocal(n);
            C abar = inner_product(T, zp, P{C(1)}) / inner_product(T, ps, P{C(1)});
            phi.push_back(zp - abar * ps);
        }

        for (const auto& pair : pearson_pairs(ctx)) {
            CAPTURE(pair.label);
            REQUIRE(boundary_check(ctx, pair, 1e-10));
            const C I(0, 1);
            for (int n = 2; n <= n_hi; ++n) {
                P Adphi = pair.A * phi[static_cast<std::size_t>(n)].derivative();
                for (int k = 0; k <= n; ++k) {
                    C lhs = inner_product(T, Adphi, P::monomial(k));
                    P mult = I * pair.B + C(double(k + 1)) * pair.A;
                    C rhs = inner_product(T, phi[static_cast<std::size_t>(n)] * mult,
                                          P::monomial(k + 1));
                    CHECK(std::abs(lhs - rhs) <= 1e-8 * (1 + std::abs(lhs)));
                    if (k >= 1 && k <= n - 2) CHECK(std::abs(lhs) <= 1e-8);
                }
            }
        }
    }
}

TEST_CASE("moment table JSON round trip") {
    WeightSpec s = make_spec(Family::sri_ranga);
    set_param(s, "b", "1", "0.5");
    auto T = compute_moments<double>(s, 6);
    auto j = moment_table_json(T);
    auto T2 = moment_table_from_json<double>(j);
    CHECK(T2.N == T.N);
    CHECK(T2.precision == T.precision);
    for (int k = -6; k <= 6; ++k) CHECK(T2.mu(k) == T.mu(k));  // 17 digits round-trips double
}
