// The catalog of semi-classical weight functions on the unit circle, each
// with its Pearson data (A, B), an analytic log-derivative, and stable
// pointwise evaluation near algebraic endpoint singularities.
#ifndef OPUC_WEIGHTS_HPP
#define OPUC_WEIGHTS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opuc/polynomial.hpp"
#include "opuc/quadrature.hpp"
#include "opuc/report.hpp"
#include "opuc/special.hpp"

namespace opuc {

enum class Family {
    lebesgue,
    exp_sine,
    bessel,
    circular_jacobi,
    jacobi,
    generalized_jacobi,
    sri_ranga,
    rotated_cos,
    half_plane_pole,
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);

// Parameters are kept as decimal strings so that both precision backends
// parse the same literals.
struct WeightSpec {
    Family family = Family::lebesgue;
    std::map<std::string, std::pair<std::string, std::string>> params;
    bool normalized = true;
};

WeightSpec make_spec(Family f,
                     std::initializer_list<std::pair<std::string, std::string>> real_params = {},
                     bool normalized = true);
void set_param(WeightSpec& spec, const std::string& name, const std::string& re,
               const std::string& im = "0");
// Domain checks (lambda, beta > -1/2; t > 0; |r| away from 0 and 1).
void validate_spec(const WeightSpec& spec);
// Default parameter choices used by the verification suites.
std::vector<WeightSpec> default_catalog();

template <class R>
struct PearsonPair {
    ComplexPoly<R> A;  // monic, degree <= 2
    ComplexPoly<R> B;  // degree <= 2
    std::pair<int, int> class_pq{0, 0};
    std::string label;
};

// (p, q) with p = deg A and q = max{p-1, deg((p-1)A + iB)}
template <class R>
std::pair<int, int> pearson_class(const ComplexPoly<R>& A, const ComplexPoly<R>& B) {
    using C = complex_t<R>;
    const int p = A.degree();
    ComplexPoly<R> m = C(R(p - 1)) * A + C(0, 1) * B;
    int dm = m.is_zero() ? -1 : m.degree();
    return {p, std::max(p - 1, dm)};
}

template <class R>
PearsonPair<R> make_pearson_pair(ComplexPoly<R> A, ComplexPoly<R> B, std::string label) {
    PearsonPair<R> pp{std::move(A), std::move(B), {0, 0}, std::move(label)};
    pp.class_pq = pearson_class(pp.A, pp.B);
    return pp;
}

// A WeightSpec compiled for one scalar backend.
template <class R>
struct WeightContext {
    using C = complex_t<R>;

    Family family;
    WeightSpec spec;
    bool normalized = true;

    R lambda{}, beta{}, eta{}, t{};
    C u{}, r{}, b{}, c{};

    R tau{1};  // constant actually applied to the raw density
    R dom_lo{}, dom_hi{};
    std::vector<R> cells;  // cell boundaries; singular angles are boundaries
    bool smooth_periodic = false;

    bool has_sin_factor() const {
        return family == Family::circular_jacobi || family == Family::jacobi ||
               family == Family::generalized_jacobi || family == Family::sri_ranga;
    }
    bool has_cos_factor() const {
        return family == Family::jacobi || family == Family::generalized_jacobi ||
               family == Family::rotated_cos;
    }
};

namespace detail {

template <class R>
complex_t<R> get_param(const WeightSpec& spec, const std::string& name) {
    auto it = spec.params.find(name);
    if (it == spec.params.end())
        throw InvalidParameter(std::string(family_name(spec.family)) +
                               " requires parameter '" + name + "'");
    return complex_t<R>(num_traits<R>::parse(it->second.first),
                        num_traits<R>::parse(it->second.second));
}

}  // namespace detail

template <class R>
R normalization_constant(const WeightContext<R>& ctx);

// Builds the typed context; computes tau (closed form where the catalog
// records one, quadrature otherwise).
template <class R>
WeightContext<R> make_context(const WeightSpec& spec) {
    using C = complex_t<R>;
    validate_spec(spec);

    WeightContext<R> ctx;
    ctx.family = spec.family;
    ctx.spec = spec;
    ctx.normalized = spec.normalized;

    const R pi = num_traits<R>::pi();
    ctx.dom_lo = R(0);
    ctx.dom_hi = R(2) * pi;

    switch (spec.family) {
        case Family::lebesgue:
            ctx.smooth_periodic = true;
            break;
        case Family::exp_sine:
            ctx.u = detail::get_param<R>(spec, "u");
            ctx.smooth_periodic = true;
            break;
        case Family::bessel:
            ctx.t = detail::get_param<R>(spec, "t").real();
            ctx.smooth_periodic = true;
            break;
        case Family::circular_jacobi:
            ctx.lambda = detail::get_param<R>(spec, "lambda").real();
            ctx.b = C(ctx.lambda);
            break;
        case Family::jacobi:
            ctx.lambda = detail::get_param<R>(spec, "lambda").real();
            ctx.beta = detail::get_param<R>(spec, "beta").real();
            break;
        case Family::generalized_jacobi:
            ctx.lambda = detail::get_param<R>(spec, "lambda").real();
            ctx.beta = detail::get_param<R>(spec, "beta").real();
            ctx.eta = detail::get_param<R>(spec, "eta").real();
            break;
        case Family::sri_ranga:
            ctx.b = detail::get_param<R>(spec, "b");
            ctx.lambda = ctx.b.real();
            ctx.eta = ctx.b.imag();
            break;
        case Family::rotated_cos:
            ctx.c = detail::get_param<R>(spec, "c");
            ctx.beta = ctx.c.real();
            ctx.eta = ctx.c.imag();
            ctx.dom_lo = -pi;
            ctx.dom_hi = pi;
            break;
        case Family::half_plane_pole:
            ctx.u = detail::get_param<R>(spec, "u");
            ctx.r = detail::get_param<R>(spec, "r");
            ctx.smooth_periodic = true;
            break;
    }

    if (ctx.smooth_periodic) {
        ctx.cells = {ctx.dom_lo, ctx.dom_hi};
    } else if (ctx.family == Family::rotated_cos) {
        ctx.cells = {-pi, R(0), pi};
    } else {
        ctx.cells = {R(0), pi, R(2) * pi};
    }

    if (ctx.normalized) ctx.tau = normalization_constant(ctx);
    return ctx;
}

namespace detail {

// Raw density inside a cell given exact distances dl, dr to the cell
// boundaries; limit_mode maps exact singular hits to 0 / +inf instead of
// throwing.
template <class R>
R weight_raw_cell(const WeightContext<R>& ctx, std::size_t cell, const R& theta,
                  const R& dl, const R& dr, bool limit_mode) {
    using std::cos;
    using std::exp;
    using std::pow;
    using std::sin;

    // [sin^2(dist/2)]^expo computed as sin(dist/2)^(2 expo): the squared
    // form underflows first for the tiny distances tanh-sinh reaches
    auto power_factor = [&](const R& dist, const R& expo) -> R {
        if (dist == R(0)) {
            if (expo > R(0)) return R(0);
            if (expo == R(0)) return R(1);
            if (limit_mode) return std::numeric_limits<R>::infinity();
            throw SingularPoint("weight evaluated at a singular angle");
        }
        return pow(sin(dist / R(2)), R(2) * expo);
    };

    switch (ctx.family) {
        case Family::lebesgue:
            return R(1) / (R(2) * num_traits<R>::pi());
        case Family::exp_sine: {
            R au = cabs(ctx.u), pu = carg(ctx.u);
            return exp(R(2) * au * sin(theta + pu));
        }
        case Family::bessel:
            return exp(ctx.t * cos(theta));
        case Family::circular_jacobi:
        case Family::sri_ranga: {
            // cells {0, pi, 2pi}; sin^2(theta/2) = sin^2(d/2), d = distance to 0 or 2pi
            R d = (cell == 0) ? dl : dr;
            R v = power_factor(d, ctx.lambda);
            if (ctx.eta != R(0)) v *= exp(-ctx.eta * theta);
            return v;
        }
        case Family::jacobi:
        case Family::generalized_jacobi: {
            R dsin = (cell == 0) ? dl : dr;
            R dcos = (cell == 0) ? dr : dl;  // distance to pi
            R v = power_factor(dsin, ctx.lambda) * power_factor(dcos, ctx.beta);
            if (ctx.eta != R(0)) v *= exp(-ctx.eta * theta);
            return v;
        }
        case Family::rotated_cos: {
            // cells {-pi, 0, pi}; cos^2(theta/2) = sin^2(d/2), d = distance to -pi or pi
            R d = (cell == 0) ? dl : dr;
            R v = power_factor(d, ctx.beta);
            if (ctx.eta != R(0)) v *= exp(-ctx.eta * theta);
            return v;
        }
        case Family::half_plane_pole: {
            using C = complex_t<R>;
            C z = unit_circle<R>(theta);
            C w = C(1) - ctx.r * cconj(z);  // 1 - r e^{-i theta}
            C urc = ctx.u / cconj(ctx.r);
            R cre = R(2) * urc.real(), cim = R(2) * urc.imag();
            return exp(cre * carg(w)) * pow(cnorm(z - ctx.r), -cim / R(2));
        }
    }
    throw Error("unreachable family");
}

template <class R>
std::size_t find_cell(const WeightContext<R>& ctx, const R& theta) {
    if (theta < ctx.dom_lo || theta > ctx.dom_hi)
        throw InvalidParameter("angle outside weight domain");
    for (std::size_t i = 0; i + 2 < ctx.cells.size(); ++i)
        if (theta <= ctx.cells[i + 1]) return i;
    return ctx.cells.size() - 2;
}

template <class R>
R weight_value_impl(const WeightContext<R>& ctx, const R& theta, bool limit_mode) {
    std::size_t cell = find_cell(ctx, theta);
    R dl = theta - ctx.cells[cell];
    R dr = ctx.cells[cell + 1] - theta;
    return ctx.tau * weight_raw_cell(ctx, cell, theta, dl, dr, limit_mode);
}

}  // namespace detail

template <class R>
R weight_eval(const WeightContext<R>& ctx, const R& theta) {
    return detail::weight_value_impl(ctx, theta, false);
}

// Analytic d/dtheta log w; independent of normalization.
template <class R>
R weight_log_derivative(const WeightContext<R>& ctx, const R& theta) {
    using std::cos;
    using std::sin;
    using std::tan;
    switch (ctx.family) {
        case Family::lebesgue:
            return R(0);
        case Family::exp_sine:
            return R(2) * cabs(ctx.u) * cos(theta + carg(ctx.u));
        case Family::bessel:
            return -ctx.t * sin(theta);
        case Family::circular_jacobi:
        case Family::sri_ranga:
            return ctx.lambda * cos(theta / R(2)) / sin(theta / R(2)) - ctx.eta;
        case Family::jacobi:
        case Family::generalized_jacobi:
            return ctx.lambda * cos(theta / R(2)) / sin(theta / R(2)) -
                   ctx.beta * tan(theta / R(2)) - ctx.eta;
        case Family::rotated_cos:
            return -ctx.beta * tan(theta / R(2)) - ctx.eta;
        case Family::half_plane_pole: {
            using C = complex_t<R>;
            C z = unit_circle<R>(theta);
            C rz = ctx.r * cconj(z);
            C urc = ctx.u / cconj(ctx.r);
            C q = rz / (C(1) - rz);
            C zz = z / (z - ctx.r);
            return R(2) * urc.real() * q.real() + R(2) * urc.imag() * zz.imag();
        }
    }
    throw Error("unreachable family");
}

// All Pearson pairs the catalog records for the family.
template <class R>
std::vector<PearsonPair<R>> pearson_pairs(const WeightContext<R>& ctx) {
    using C = complex_t<R>;
    const C I(0, 1);
    std::vector<PearsonPair<R>> out;

    switch (ctx.family) {
        case Family::lebesgue: {
            out.push_back(make_pearson_pair<R>(ComplexPoly<R>{C(1)}, ComplexPoly<R>{C(0)}, "A=1"));
            out.push_back(make_pearson_pair<R>(ComplexPoly<R>{C(R(-0.5)), C(1)},
                                       ComplexPoly<R>{C(0), I}, "A=z-1/2"));
            break;
        }
        case Family::exp_sine: {
            out.push_back(make_pearson_pair<R>(ComplexPoly<R>{C(0), C(1)},
                                       ComplexPoly<R>{cconj(ctx.u), I, ctx.u}, "A=z"));
            break;
        }
        case Family::bessel: {
            C h = I * ctx.t / R(2);
            out.push_back(make_pearson_pair<R>(ComplexPoly<R>{C(0), C(1)},
                                       ComplexPoly<R>{-h, I, h}, "A=z"));
            break;
        }
        case Family::circular_jacobi:
        case Family::sri_ranga: {
            const C b = ctx.b, bb = cconj(b);
            out.push_back(make_pearson_pair<R>(ComplexPoly<R>{C(-1), C(1)},
                                       ComplexPoly<R>{I * bb, I * (b + C(1))}, "A=z-1"));
            out.push_back(make_pearson_pair<R>(ComplexPoly<R>{C(-1), C(0), C(1)},
                                       ComplexPoly<R>{I * bb, I * (b + bb), I * (b + C(2))},
                                       "A=z^2-1"));
            out.push_back(make_pearson_pair<R>(ComplexPoly<R>{C(1), C(-2), C(1)},
                                       ComplexPoly<R>{-I * bb, I * (bb - b - C(2)), I * (b + C(2))},
                                       "A=(z-1)^2"));
            out.push_back(make_pearson_pair<R>(ComplexPoly<R>{C(0), C(-1), C(1)},
                                       ComplexPoly<R>{C(0), I * (bb - C(1)), I * (b + C(2))},
                                       "A=z(z-1)"));
            break;
        }
        case Family::jacobi:
        case Family::generalized_jacobi: {
            C d(ctx.lambda + ctx.beta, ctx.eta);
            out.push_back(make_pearson_pair<R>(
                ComplexPoly<R>{C(-1), C(0), C(1)},
                ComplexPoly<R>{I * cconj(d), I * R(2) * (ctx.lambda - ctx.beta), I * (d + C(2))},
                "A=z^2-1"));
            break;
        }
        case Family::rotated_cos: {
            const C c = ctx.c, cb = cconj(c);
            out.push_back(make_pearson_pair<R>(ComplexPoly<R>{C(1), C(1)},
                                       ComplexPoly<R>{-I * cb, I * (c + C(1))}, "A=z+1"));
            out.push_back(make_pearson_pair<R>(ComplexPoly<R>{C(-1), C(0), C(1)},
                                       ComplexPoly<R>{I * cb, -I * (c + cb), I * (c + C(2))},
                                       "A=z^2-1"));
            break;
        }
        case Family::half_plane_pole: {
            const C r = ctx.r, rb = cconj(r), u = ctx.u;
            C a0 = r / rb;
            C b1 = (C(R(2) * (u * r).real()) - I * (cnorm(r) + R(1))) / rb;
            out.push_back(make_pearson_pair<R>(ComplexPoly<R>{a0, -(r + C(1) / rb), C(1)},
                                       ComplexPoly<R>{-cconj(u) / rb, b1, C(2) * I - u / rb},
                                       "A=(z-r)(z-1/conj(r))"));
            break;
        }
    }
    return out;
}

// Degree-2 pair A = (z-1)(z-r) for the sin^(2 lambda) weight, any r.
template <class R>
PearsonPair<R> sriranga_general_pair(const complex_t<R>& b, const complex_t<R>& r) {
    using C = complex_t<R>;
    const C I(0, 1);
    return make_pearson_pair<R>(
        ComplexPoly<R>{r, -(C(1) + r), C(1)},
        ComplexPoly<R>{-I * r * cconj(b), I * (cconj(b) - C(1) - r * (b + C(1))), I * (b + C(2))},
        "A=(z-1)(z-r)");
}

// sup over an offset grid of |w'/w - (B - i z A')/A|
template <class R>
ResidualReport<R> pearson_residual(const WeightContext<R>& ctx, const PearsonPair<R>& pair,
                                   int grid_size, const R& tolerance) {
    using C = complex_t<R>;
    const C I(0, 1);
    ComplexPoly<R> Ad = pair.A.derivative();

    std::vector<R> grid(static_cast<std::size_t>(grid_size));
    std::vector<R> res(static_cast<std::size_t>(grid_size));
    const R h = (ctx.dom_hi - ctx.dom_lo) / R(grid_size);
    R scale(0);
    for (int j = 0; j < grid_size; ++j) {
        R theta = ctx.dom_lo + (R(j) + R(0.5)) * h;
        C z = unit_circle<R>(theta);
        C Az = pair.A(z);
        if (cabs(Az) < R(1e-12))
            throw GridOnSingularity("pearson_residual: grid point at a zero of A");
        C rhs = (pair.B(z) - I * z * Ad(z)) / Az;
        R lhs = weight_log_derivative(ctx, theta);
        grid[static_cast<std::size_t>(j)] = theta;
        res[static_cast<std::size_t>(j)] = cabs(C(lhs) - rhs);
        R m = cabs(rhs);
        if (m > scale) scale = m;
    }
    return ResidualReport<R>::from("pearson " + std::string(family_name(ctx.family)) + " " +
                                       pair.label,
                                   std::move(grid), std::move(res), tolerance, scale);
}

// A(1)[w(end) - w(start)] = 0, with both endpoints of the weight's domain.
template <class R>
bool boundary_check(const WeightContext<R>& ctx, const PearsonPair<R>& pair,
                    const R& tolerance) {
    using C = complex_t<R>;
    R a1 = cabs(pair.A(C(1)));
    R coeff_scale(0);
    for (const auto& cc : pair.A.coeffs()) {
        R m = cabs(cc);
        if (m > coeff_scale) coeff_scale = m;
    }
    if (a1 <= coeff_scale * R(1e-14)) return true;

    R w0 = detail::weight_value_impl(ctx, ctx.dom_lo, true);
    R w1 = detail::weight_value_impl(ctx, ctx.dom_hi, true);
    using std::isinf;
    if (isinf(w0) || isinf(w1)) return isinf(w0) && isinf(w1);
    using std::abs;
    R ref = std::max(R(1), std::max(abs(w0), abs(w1)));
    return abs(w1 - w0) <= tolerance * ref;
}

namespace detail {

// integral of the raw (tau-free) density over the context's domain
template <class R>
R integrate_raw(const WeightContext<R>& ctx) {
    using C = complex_t<R>;
    const R target = num_traits<R>::quad_target();
    R total(0);
    std::vector<C> cell_out;
    for (std::size_t cell = 0; cell + 1 < ctx.cells.size(); ++cell) {
        const R a = ctx.cells[cell], b = ctx.cells[cell + 1];
        QuadratureMeta<R> meta;
        if (ctx.smooth_periodic) {
            meta = trapezoid_periodic<R>(
                [&](const R& theta, std::vector<C>& out) {
                    out[0] = C(weight_raw_cell(ctx, cell, theta, theta - a, b - theta, false));
                },
                a, b, 1, target, cell_out);
        } else {
            meta = tanh_sinh_cell<R>(
                [&](const R& theta, const R& dl, const R& dr, std::vector<C>& out) {
                    out[0] = C(weight_raw_cell(ctx, cell, theta, dl, dr, false));
                },
                a, b, 1, target, cell_out);
        }
        if (!meta.converged)
            throw QuadratureFailure("normalization integral did not converge for " +
                                    std::string(family_name(ctx.family)));
        total += cell_out[0].real();
    }
    return total;
}

}  // namespace detail

// tau with mu_0 = 1: closed form for Lebesgue, Bessel and the
// sin^(2 lambda) families, quadrature otherwise.
template <class R>
R normalization_constant(const WeightContext<R>& ctx) {
    using C = complex_t<R>;
    using std::exp;
    using std::pow;
    const R pi = num_traits<R>::pi();
    switch (ctx.family) {
        case Family::lebesgue:
            return R(1);
        case Family::bessel:
            return R(1) / (R(2) * pi * bessel_i0(ctx.t));
        case Family::circular_jacobi:
        case Family::sri_ranga: {
            // e^{pi eta} 2^{2 lambda} |Gamma(b+1)|^2 / (2 pi Gamma(2 lambda + 1))
            C lg = log_gamma_complex<R>(ctx.b + C(1));
            C lg2 = log_gamma_complex<R>(C(R(2) * ctx.lambda + R(1)));
            return exp(pi * ctx.eta + R(2) * ctx.lambda * log(R(2)) + R(2) * lg.real() -
                       lg2.real()) /
                   (R(2) * pi);
        }
        default:
            return R(1) / detail::integrate_raw(ctx);
    }
}

template <class R>
R normalization_constant(const WeightSpec& spec) {
    WeightSpec raw = spec;
    raw.normalized = false;
    return normalization_constant(make_context<R>(raw));
}

}  // namespace opuc

#endif
