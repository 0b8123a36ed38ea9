#include <doctest.h>

#include "opuc/special.hpp"
#include "opuc/moments.hpp"
#include "opuc/weights.hpp"

using namespace opuc;
using C = std::complex<double>;

namespace {

WeightSpec sriranga(const std::string& re, const std::string& im, bool normalized = true) {
    WeightSpec s = make_spec(Family::sri_ranga, {}, normalized);
    set_param(s, "b", re, im);
    return s;
}

}  // namespace

TEST_CASE("pointwise evaluation") {
    auto leb = make_context<double>(make_spec(Family::lebesgue));
    CHECK(weight_eval(leb, 1.234) == doctest::Approx(1.0 / (2 * M_PI)).epsilon(1e-15));

    auto bes = make_context<double>(make_spec(Family::bessel, {{"t", "1"}}, false));
    CHECK(weight_eval(bes, 0.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));

    auto gj = make_context<double>(
        make_spec(Family::generalized_jacobi, {{"lambda", "1"}, {"beta", "1"}, {"eta", "0"}}, false));
    CHECK(weight_eval(gj, M_PI) == doctest::Approx(0.0));
    // sin^2(pi/4) cos^2(pi/4) = 1/4
    CHECK(weight_eval(gj, M_PI / 2) == doctest::Approx(0.25).epsilon(1e-14));

    // singular point with negative exponent
    auto cj = make_context<double>(
        make_spec(Family::circular_jacobi, {{"lambda", "-0.25"}}, false));
    CHECK_THROWS_AS(weight_eval(cj, 0.0), SingularPoint);
    CHECK(weight_eval(cj, M_PI) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("parameter domain validation") {
    CHECK_THROWS_AS(make_context<double>(make_spec(Family::bessel, {{"t", "-1"}})),
                    InvalidParameter);
    CHECK_THROWS_AS(make_context<double>(make_spec(Family::circular_jacobi, {{"lambda", "-0.5"}})),
                    InvalidParameter);
    WeightSpec hp = make_spec(Family::half_plane_pole);
    set_param(hp, "u", "0.3", "0.2");
    set_param(hp, "r", "1", "0");  // |r| = 1 rejected
    CHECK_THROWS_AS(make_context<double>(hp), InvalidParameter);
}

TEST_CASE("catalog Pearson pairs and class labels") {
    auto leb = make_context<double>(make_spec(Family::lebesgue));
    auto lp = pearson_pairs(leb);
    REQUIRE(lp.size() == 2);
    CHECK(lp[0].class_pq == std::pair<int, int>{0, 0});
    CHECK(lp[0].B.is_zero());
    CHECK(lp[1].class_pq == std::pair<int, int>{1, 1});

    WeightSpec es = make_spec(Family::exp_sine);
    set_param(es, "u", "0.3", "0.4");
    auto ep = pearson_pairs(make_context<double>(es));
    REQUIRE(ep.size() == 1);
    CHECK(ep[0].class_pq == std::pair<int, int>{1, 2});
    CHECK(ep[0].B.coeff(2) == C(0.3, 0.4));
    CHECK(ep[0].B.coeff(1) == C(0, 1));
    CHECK(ep[0].B.coeff(0) == C(0.3, -0.4));

    auto sp = pearson_pairs(make_context<double>(sriranga("1", "1")));
    REQUIRE(sp.size() == 4);
    C b(1, 1), I(0, 1);
    CHECK(sp[0].A == (ComplexPoly<double>{C(-1), C(1)}));
    CHECK(sp[0].B == (ComplexPoly<double>{I * std::conj(b), I * (b + C(1))}));
    CHECK(sp[0].class_pq == std::pair<int, int>{1, 1});
    CHECK(sp[1].A == (ComplexPoly<double>{C(-1), C(0), C(1)}));
    CHECK(sp[1].B ==
          (ComplexPoly<double>{I * std::conj(b), I * (b + std::conj(b)), I * (b + C(2))}));
    CHECK(sp[2].A == (ComplexPoly<double>{C(1), C(-2), C(1)}));
    CHECK(sp[2].B == (ComplexPoly<double>{-I * std::conj(b), I * (std::conj(b) - b - C(2)),
                                          I * (b + C(2))}));
    CHECK(sp[3].A == (ComplexPoly<double>{C(0), C(-1), C(1)}));
    CHECK(sp[3].B ==
          (ComplexPoly<double>{C(0), I * (std::conj(b) - C(1)), I * (b + C(2))}));
    for (std::size_t k = 1; k < 4; ++k) CHECK(sp[k].class_pq == std::pair<int, int>{2, 2});

    auto gj = make_context<double>(make_spec(
        Family::generalized_jacobi, {{"lambda", "1"}, {"beta", "0.5"}, {"eta", "0.3"}}));
    CHECK(pearson_pairs(gj)[0].class_pq == std::pair<int, int>{2, 2});

    WeightSpec hps = make_spec(Family::half_plane_pole);
    set_param(hps, "u", "0.3", "0.2");
    set_param(hps, "r", "0.5", "0.1");
    CHECK(pearson_pairs(make_context<double>(hps))[0].class_pq == std::pair<int, int>{2, 2});
}

TEST_CASE("pearson residual across the whole catalog") {
    for (const auto& spec : default_catalog()) {
        CAPTURE(family_name(spec.family));
        auto ctx = make_context<double>(spec);
        for (const auto& pair : pearson_pairs(ctx)) {
            CAPTURE(pair.label);
            auto rep = pearson_residual(ctx, pair, 128, 1e-8);
            CHECK(rep.pass);
            CHECK(rep.sup <= 1e-10);  // analytic log-derivative, no differencing
            CHECK(boundary_check(ctx, pair, 1e-10));
        }
    }
}

TEST_CASE("pearson residual details") {
    auto cj = make_context<double>(make_spec(Family::circular_jacobi, {{"lambda", "1"}}));
    auto pairs = pearson_pairs(cj);
    auto rep = pearson_residual(cj, pairs[0], 128, 1e-10);
    CHECK(rep.pass);

    auto leb = make_context<double>(make_spec(Family::lebesgue));
    auto lrep = pearson_residual(leb, pearson_pairs(leb)[0], 64, 1e-14);
    CHECK(lrep.sup == 0.0);

    // Bessel pair written with b2 = it/2
    auto bes = make_context<double>(make_spec(Family::bessel, {{"t", "1"}}));
    auto brep = pearson_residual(bes, pearson_pairs(bes)[0], 128, 1e-10);
    CHECK(brep.pass);

    // grid hitting a zero of A is rejected: A = z - r with r on the offset grid
    auto pair_on_grid = make_pearson_pair<double>(
        ComplexPoly<double>{-std::polar(1.0, 2 * M_PI * 10.5 / 128.0), C(1)},
        ComplexPoly<double>{C(0), C(0, 1)}, "A=z-grid_point");
    CHECK_THROWS_AS(pearson_residual(leb, pair_on_grid, 128, 1e-8), GridOnSingularity);
}

TEST_CASE("boundary condition") {
    auto sr = make_context<double>(sriranga("1", "1"));
    auto pairs = pearson_pairs(sr);
    CHECK(boundary_check(sr, pairs[0], 1e-10));  // A(1) = 0

    auto leb = make_context<double>(make_spec(Family::lebesgue));
    CHECK(boundary_check(leb, pearson_pairs(leb)[0], 1e-12));  // periodic constant

    WeightSpec es = make_spec(Family::exp_sine);
    set_param(es, "u", "0", "0.5");
    auto ectx = make_context<double>(es);
    CHECK(boundary_check(ectx, pearson_pairs(ectx)[0], 1e-12));  // Re(b1) = 0
}

TEST_CASE("normalization constants") {
    CHECK(normalization_constant<double>(make_spec(Family::lebesgue)) == 1.0);

    double t = 1.7;
    CHECK(normalization_constant<double>(make_spec(Family::bessel, {{"t", "1.7"}})) ==
          doctest::Approx(1.0 / (2 * M_PI * bessel_i0(t))).epsilon(1e-14));

    // circular Jacobi lambda = 1: tau = 2^2 Gamma(2)^2 / (2 pi Gamma(3)) = 1/pi,
    // matching the quadrature of sin^2(theta/2) over [0, 2pi] = pi
    CHECK(normalization_constant<double>(make_spec(Family::circular_jacobi, {{"lambda", "1"}})) ==
          doctest::Approx(1.0 / M_PI).epsilon(1e-13));

    // exp-sine tau is computed by quadrature; oracle 1/(2 pi I0(2|u|))
    WeightSpec es = make_spec(Family::exp_sine);
    set_param(es, "u", "0.3", "0.4");
    double tau = normalization_constant<double>(es);
    CHECK(tau == doctest::Approx(1.0 / (2 * M_PI * bessel_i0(1.0))).epsilon(1e-12));

    // normalized weights integrate to 1 (checked through mu_0 in moment tests)
}

TEST_CASE("positivity on a dense grid") {
    for (const auto& spec : default_catalog()) {
        auto ctx = make_context<double>(spec);
        const int G = 400;
        for (int j = 0; j < G; ++j) {
            double theta = ctx.dom_lo + (j + 0.5) * (ctx.dom_hi - ctx.dom_lo) / G;
            CHECK(weight_eval(ctx, theta) >= 0.0);
        }
    }
}

TEST_CASE("half-plane pole with |r| > 1") {
    // principal-branch arg is continuous on the circle only for |r| < 1;
    // for |r| > 1 the density is still pointwise well defined, and the
    // modulus-only case (Re(u/conj r) = 0) remains smooth and verifiable
    WeightSpec smooth = make_spec(Family::half_plane_pole);
    set_param(smooth, "u", "0", "1");
    set_param(smooth, "r", "2", "0");  // u/conj(r) = i/2
    auto ctx = make_context<double>(smooth);
    CHECK(weight_eval(ctx, 1.0) > 0.0);
    auto pair = pearson_pairs(ctx)[0];
    CHECK(pearson_residual(ctx, pair, 128, 1e-10).pass);
    CHECK(boundary_check(ctx, pair, 1e-10));

    // with Re(u/conj r) != 0 the principal branch has a jump on the circle
    // and the moment quadrature refuses to converge on it
    WeightSpec jump = make_spec(Family::half_plane_pole);
    set_param(jump, "u", "0.3", "0.2");
    set_param(jump, "r", "2", "0.5");
    CHECK_THROWS_AS(compute_moments<double>(jump, 4), QuadratureFailure);
}

TEST_CASE("general-r pair satisfies the Pearson equation") {
    auto sr = make_context<double>(sriranga("0.7", "-0.4"));
    for (C r : {C(0.4, 0.2), C(-0.8, 0), C(2.5, 1)}) {
        auto pair = sriranga_general_pair<double>(C(0.7, -0.4), r);
        auto rep = pearson_residual(sr, pair, 128, 1e-9);
        CHECK(rep.pass);
    }
}
