// Structure relations A Phi_n' = combination of neighboring Phi's: the
// general form with explicit coefficients, its two corollary rearrangements,
// and the specialized displayed relations for the catalog families.
#ifndef OPUC_RELATIONS_HPP
#define OPUC_RELATIONS_HPP

#include <optional>

#include "opuc/mopuc.hpp"

namespace opuc {

enum class SnnForm { via_gamma, via_conj_gamma };
enum class SRVariant { star_n, star_np1, star_nm1 };

template <class R>
struct StructureCoefficients {
    int n = 0;
    complex_t<R> lead;   // multiplies Phi_{n+1}
    complex_t<R> s_nn;   // multiplies Phi_n
    complex_t<R> s_nn1;  // multiplies Phi_{n-1}
    complex_t<R> t_n;    // multiplies Phi_n^*
    SnnForm form = SnnForm::via_gamma;
};

// t_n    = (i b2 + a2) conj(alpha_n)
// s_nn1  = (i b0 + n a0)(1 - |alpha_{n-1}|^2)
// s_nn   = n a1 - a2 gamma_n + [i b2 - (n-1) a2] conj(alpha_n) alpha_{n-1}
//        = i b1 + (n+1) a1 - a0 conj(gamma_n)
//          - [i b0 + (n+1) a0] alpha_n conj(alpha_{n-1})
template <class R>
StructureCoefficients<R> structure_coefficients(const PearsonPair<R>& pair,
                                                const OpucSequence<R>& seq, int n,
                                                SnnForm form) {
    using C = complex_t<R>;
    if (n < 2) throw OutOfTheoremRange("structure_coefficients requires n >= 2");
    const C I(0, 1);
    const C a0 = pair.A.coeff(0), a1 = pair.A.coeff(1), a2 = pair.A.coeff(2);
    const C b0 = pair.B.coeff(0), b1 = pair.B.coeff(1), b2 = pair.B.coeff(2);
    const C an = seq.alpha(n), an1 = seq.alpha(n - 1);
    const C gn = seq.gamma_n[static_cast<std::size_t>(n)];

    StructureCoefficients<R> sc;
    sc.n = n;
    sc.form = form;
    sc.lead = C(R(n)) * a2;
    sc.t_n = (I * b2 + a2) * cconj(an);
    sc.s_nn1 = (I * b0 + C(R(n)) * a0) * C(R(1) - static_cast<R>(cnorm(an1)));
    if (form == SnnForm::via_gamma) {
        sc.s_nn = C(R(n)) * a1 - a2 * gn + (I * b2 - C(R(n - 1)) * a2) * cconj(an) * an1;
    } else {
        sc.s_nn = I * b1 + C(R(n + 1)) * a1 - a0 * cconj(gn) -
                  (I * b0 + C(R(n + 1)) * a0) * an * cconj(an1);
    }
    return sc;
}

namespace detail {

// sup over an offset circle grid of |A(z) Phi_n'(z) - rhs(z)|
template <class R, class Rhs>
ResidualReport<R> residual_on_grid(const std::string& label, const ComplexPoly<R>& A,
                                   const OpucSequence<R>& seq, int n, int grid_size,
                                   const R& tolerance, Rhs&& rhs) {
    using C = complex_t<R>;
    ComplexPoly<R> dphi = seq.phi[static_cast<std::size_t>(n)].derivative();
    std::vector<R> grid(static_cast<std::size_t>(grid_size));
    std::vector<R> res(static_cast<std::size_t>(grid_size));
    const R two_pi = R(2) * num_traits<R>::pi();
    R scale(0);
    for (int j = 0; j < grid_size; ++j) {
        R theta = (R(j) + R(0.5)) * two_pi / R(grid_size);
        C z = unit_circle<R>(theta);
        C lhs = A(z) * dphi(z);
        grid[static_cast<std::size_t>(j)] = theta;
        res[static_cast<std::size_t>(j)] = cabs(lhs - rhs(z));
        R m = cabs(lhs);
        if (m > scale) scale = m;
    }
    return ResidualReport<R>::from(label, std::move(grid), std::move(res), tolerance, scale);
}

}  // namespace detail

// Residual of the chosen variant; seq must hold data through n+1.
template <class R>
ResidualReport<R> structure_residual(const PearsonPair<R>& pair, const OpucSequence<R>& seq,
                                     int n, int grid_size, SRVariant variant,
                                     const R& tolerance) {
    using C = complex_t<R>;
    if (n < 2) throw OutOfTheoremRange("structure_residual requires n >= 2");
    if (n + 1 > seq.n_max) throw OutOfRange("structure_residual: seq must hold Phi_{n+1}");
    const C I(0, 1);
    const C a1 = pair.A.coeff(1), a2 = pair.A.coeff(2);
    const C b2 = pair.B.coeff(2);
    const C an = seq.alpha(n), an1 = seq.alpha(n - 1);
    const C gn = seq.gamma_n[static_cast<std::size_t>(n)];
    const R nan2 = R(1) - static_cast<R>(cnorm(an));
    const R nan12 = R(1) - static_cast<R>(cnorm(an1));

    StructureCoefficients<R> sc = structure_coefficients(pair, seq, n, SnnForm::via_gamma);
    const auto& p_n = seq.phi[static_cast<std::size_t>(n)];
    const auto& p_np1 = seq.phi[static_cast<std::size_t>(n + 1)];
    const auto& p_nm1 = seq.phi[static_cast<std::size_t>(n - 1)];
    ComplexPoly<R> star_n = p_n.reciprocal(n);
    ComplexPoly<R> star_np1 = p_np1.reciprocal(n + 1);
    ComplexPoly<R> star_nm1 = p_nm1.reciprocal(n - 1);

    std::string label = "structure[" + pair.label + "] n=" + std::to_string(n);
    switch (variant) {
        case SRVariant::star_n:
            return detail::residual_on_grid<R>(
                label + " star_n", pair.A, seq, n, grid_size, tolerance, [&](const C& z) {
                    return sc.lead * p_np1(z) + sc.s_nn * p_n(z) + sc.s_nn1 * p_nm1(z) +
                           sc.t_n * star_n(z);
                });
        case SRVariant::star_np1: {
            C cn1 = (C(R(n)) * a2 + (I * b2 - C(R(n - 1)) * a2) * C(static_cast<R>(cnorm(an)))) /
                    C(nan2);
            C ct = (I * b2 + a2) * cconj(an) / C(nan2);
            return detail::residual_on_grid<R>(
                label + " star_np1", pair.A, seq, n, grid_size, tolerance, [&](const C& z) {
                    return sc.s_nn * p_n(z) + sc.s_nn1 * p_nm1(z) + cn1 * p_np1(z) +
                           ct * star_np1(z);
                });
        }
        case SRVariant::star_nm1: {
            C cn = C(R(n)) * a1 - a2 * gn - C(R(n)) * a2 * cconj(an) * an1;
            C ct = (I * b2 + a2) * cconj(an) * C(nan12);
            return detail::residual_on_grid<R>(
                label + " reciprocal", pair.A, seq, n, grid_size, tolerance, [&](const C& z) {
                    return sc.lead * p_np1(z) + cn * p_n(z) + sc.s_nn1 * p_nm1(z) +
                           ct * star_nm1(z);
                });
        }
    }
    throw Error("unreachable variant");
}

// The displayed specializations.
enum class RelationId {
    sinw_zm1,          // (z-1) Phi_n'      [sin^(2 lambda) weight]
    sinw_z2m1,          // (z^2-1) Phi_n'
    sinw_zm1_sq,          // (z-1)^2 Phi_n'
    sinw_z_zm1,          // z(z-1) Phi_n'
    sinw_zm1_zmr, // (z-1)(z-r) Phi_n'
    cjacobi_zm1,      // circular Jacobi (z-1) form
    cjacobi_z_zm1,
    cjacobi_zm1_sq,
    cjacobi_z2m1,
    expsine,
    bessel_deriv,   // Phi_n' = n Phi_{n-1} + (t/2)(k_{n-2}^2/k_n^2) Phi_{n-2}
    bessel_zderiv,  // z Phi_n' = n Phi_n + (t/2)(k_{n-1}^2/k_n^2)[Phi_{n-1} - a_n Phi_{n-1}^*]
    halfplane,
    genjacobi,
    jacobi,
};

const char* relation_name(RelationId id);
RelationId relation_from_name(const std::string& name);
std::vector<RelationId> applicable_relations(Family f);

template <class R>
ResidualReport<R> specialized_relation(const WeightContext<R>& ctx, RelationId id,
                                       const OpucSequence<R>& seq, int n, int grid_size,
                                       const R& tolerance,
                                       std::optional<complex_t<R>> general_r = {}) {
    using C = complex_t<R>;
    if (n < 2) throw OutOfTheoremRange("specialized_relation requires n >= 2");
    if (n + 1 > seq.n_max) throw OutOfRange("specialized_relation: seq must hold Phi_{n+1}");
    const C I(0, 1);

    auto require_family = [&](bool ok) {
        if (!ok)
            throw UnknownRelation(std::string(relation_name(id)) + " does not apply to " +
                                  family_name(ctx.family));
    };
    const bool is_sin_family =
        ctx.family == Family::sri_ranga || ctx.family == Family::circular_jacobi;

    const C an = seq.alpha(n), an1 = seq.alpha(n - 1);
    const C an2 = (n >= 2) ? seq.alpha(n - 2) : C(0);
    const C gn = seq.gamma_n[static_cast<std::size_t>(n)];
    const R w1 = R(1) - static_cast<R>(cnorm(an1));
    const R w2 = R(1) - static_cast<R>(cnorm(an2));

    // coefficients of Phi_{n+1}, Phi_n, Phi_{n-1}, Phi_{n-2}, Phi_n^*, Phi_{n-1}^*
    C cp1(0), cn_(0), cm1(0), cm2(0), cs(0), cs1(0);
    ComplexPoly<R> A;
    const C b = ctx.b, bb = cconj(ctx.b);

    switch (id) {
        case RelationId::sinw_zm1:
            require_family(is_sin_family);
            A = ComplexPoly<R>{C(-1), C(1)};
            cn_ = C(R(n));
            cm1 = -(bb + C(R(n))) * C(w1);
            break;
        case RelationId::sinw_z2m1:
            require_family(is_sin_family);
            A = ComplexPoly<R>{C(-1), C(0), C(1)};
            cp1 = C(R(n));
            cn_ = -bb;
            cm1 = -(bb + C(R(n))) * C(w1);
            cs = -(b + C(1)) * cconj(an);
            break;
        case RelationId::sinw_zm1_sq:
            require_family(is_sin_family);
            A = ComplexPoly<R>{C(1), C(-2), C(1)};
            cp1 = C(R(n));
            cn_ = -(bb + C(R(2 * n)));
            cm1 = (bb + C(R(n))) * C(w1);
            cs = -(b + C(1)) * cconj(an);
            break;
        case RelationId::sinw_z_zm1:
            require_family(is_sin_family);
            A = ComplexPoly<R>{C(0), C(-1), C(1)};
            cp1 = C(R(n));
            cn_ = -(bb + C(R(n)));
            cs = -(b + C(1)) * cconj(an);
            break;
        case RelationId::sinw_zm1_zmr: {
            require_family(is_sin_family);
            C r = general_r.value_or(C(R(0.5)));
            A = ComplexPoly<R>{r, -(C(1) + r), C(1)};
            cp1 = C(R(n));
            cn_ = -(bb + C(R(n)) * (r + C(1)));
            cm1 = r * (bb + C(R(n))) * C(w1);
            cs = -(b + C(1)) * cconj(an);
            break;
        }
        case RelationId::cjacobi_zm1:
        case RelationId::cjacobi_z_zm1:
        case RelationId::cjacobi_zm1_sq:
        case RelationId::cjacobi_z2m1: {
            require_family(ctx.family == Family::circular_jacobi);
            const R lam = ctx.lambda;
            const R cm = R(n) * (R(n) + R(2) * lam) / (R(n) + lam);
            const R ct = lam * (lam + R(1)) / (R(n + 1) + lam);
            if (id == RelationId::cjacobi_zm1) {
                A = ComplexPoly<R>{C(-1), C(1)};
                cn_ = C(R(n));
                cm1 = C(-cm);
            } else if (id == RelationId::cjacobi_z_zm1) {
                A = ComplexPoly<R>{C(0), C(-1), C(1)};
                cp1 = C(R(n));
                cn_ = C(-(lam + R(n)));
                cs = C(ct);
            } else if (id == RelationId::cjacobi_zm1_sq) {
                A = ComplexPoly<R>{C(1), C(-2), C(1)};
                cp1 = C(R(n));
                cn_ = C(-(lam + R(2 * n)));
                cm1 = C(cm);
                cs = C(ct);
            } else {
                A = ComplexPoly<R>{C(-1), C(0), C(1)};
                cp1 = C(R(n));
                cn_ = C(-lam);
                cm1 = C(-cm);
                cs = C(ct);
            }
            break;
        }
        case RelationId::expsine:
            require_family(ctx.family == Family::exp_sine);
            A = ComplexPoly<R>{C(0), C(1)};
            cm1 = I * cconj(ctx.u) * C(w1);
            cn_ = C(R(n)) + I * ctx.u * cconj(an) * an1;
            cs = I * ctx.u * cconj(an);
            break;
        case RelationId::bessel_deriv:
            require_family(ctx.family == Family::bessel);
            A = ComplexPoly<R>{C(1)};
            cm1 = C(R(n));
            cm2 = C(ctx.t / R(2) * w1 * w2);
            break;
        case RelationId::bessel_zderiv:
            require_family(ctx.family == Family::bessel);
            A = ComplexPoly<R>{C(0), C(1)};
            cn_ = C(R(n));
            cm1 = C(ctx.t / R(2) * w1);
            cs1 = -C(ctx.t / R(2) * w1) * an;
            break;
        case RelationId::halfplane: {
            require_family(ctx.family == Family::half_plane_pole);
            const C r = ctx.r, rb = cconj(r), u = ctx.u;
            A = ComplexPoly<R>{r / rb, -(r + C(1) / rb), C(1)};
            cp1 = C(R(n));
            cn_ = -(C(R(n)) * C(static_cast<R>(cnorm(r)) + R(1)) / rb + gn +
                    (C(R(n + 1)) + u / rb * I) * cconj(an) * an1);
            cm1 = (C(R(n)) * r - cconj(u) * I) / rb * C(w1);
            cs = -(C(1) + u / rb * I) * cconj(an);
            break;
        }
        case RelationId::genjacobi: {
            require_family(ctx.family == Family::generalized_jacobi ||
                           ctx.family == Family::jacobi);
            C d(ctx.lambda + ctx.beta, ctx.eta);
            A = ComplexPoly<R>{C(-1), C(0), C(1)};
            cp1 = C(R(n));
            cn_ = -((d + C(R(n + 1))) * cconj(an) * an1 + gn);
            cm1 = -(cconj(d) + C(R(n))) * C(w1);
            cs = -(d + C(1)) * cconj(an);
            break;
        }
        case RelationId::jacobi: {
            require_family(ctx.family == Family::jacobi);
            const R lb = ctx.lambda + ctx.beta;
            A = ComplexPoly<R>{C(-1), C(0), C(1)};
            cp1 = C(R(n));
            cn_ = -(C(lb + R(n + 1)) * an * an1 + gn);
            cm1 = C(-(lb + R(n)) * w1);
            cs = C(-(lb + R(1))) * an;
            break;
        }
    }

    const auto& p_np1 = seq.phi[static_cast<std::size_t>(n + 1)];
    const auto& p_n = seq.phi[static_cast<std::size_t>(n)];
    const auto& p_nm1 = seq.phi[static_cast<std::size_t>(n - 1)];
    const auto& p_nm2 = seq.phi[static_cast<std::size_t>(n - 2)];
    ComplexPoly<R> star_n = p_n.reciprocal(n);
    ComplexPoly<R> star_nm1 = p_nm1.reciprocal(n - 1);

    return detail::residual_on_grid<R>(
        std::string(relation_name(id)) + " n=" + std::to_string(n), A, seq, n, grid_size,
        tolerance, [&](const C& z) {
            return cp1 * p_np1(z) + cn_ * p_n(z) + cm1 * p_nm1(z) + cm2 * p_nm2(z) +
                   cs * star_n(z) + cs1 * star_nm1(z);
        });
}

// --- coefficient identities the paper derives by comparing s_nn forms ---

// |gamma_n - [conj(b) - (b+n-1) conj(alpha_{n-1}) alpha_{n-2}]|, n >= 1
template <class R>
R sriranga_gamma_identity(const OpucSequence<R>& seq, const complex_t<R>& b, int n) {
    using C = complex_t<R>;
    if (n < 1) throw OutOfRange("sriranga_gamma_identity: n >= 1");
    C rhs = cconj(b) - (b + C(R(n - 1))) * cconj(seq.alpha(n - 1)) * seq.alpha(n - 2);
    return cabs(seq.gamma_n[static_cast<std::size_t>(n)] - rhs);
}

// gamma_n = n conj(b)/(b+n)  and  alpha_n conj(alpha_{n-1}) = |b|^2 / ((conj(b)+n)(conj(b)+n+1))
template <class R>
std::pair<R, R> proposition42_residuals(const OpucSequence<R>& seq, const complex_t<R>& b,
                                        int n) {
    using C = complex_t<R>;
    if (n < 1) throw OutOfRange("proposition42_residuals: n >= 1");
    C bb = cconj(b);
    R r1 = cabs(seq.gamma_n[static_cast<std::size_t>(n)] - C(R(n)) * bb / (b + C(R(n))));
    R r2 = cabs(seq.alpha(n) * cconj(seq.alpha(n - 1)) -
                C(static_cast<R>(cnorm(b))) / ((bb + C(R(n))) * (bb + C(R(n + 1)))));
    return {r1, r2};
}

// Re(u conj(alpha_n) alpha_{n-1}) and the phase-rotation identity
// alpha_n / conj(alpha_n) = (alpha_1 / conj(alpha_1)) (-u/conj(u))^{n-1},
// the latter multiplied through by conj(alpha_n) so that vanishing alphas do
// not amplify roundoff.  n >= 2.
template <class R>
std::pair<R, R> expsine_identities(const OpucSequence<R>& seq, const complex_t<R>& u, int n) {
    using C = complex_t<R>;
    if (n < 2) throw OutOfRange("expsine_identities: n >= 2");
    using std::abs;
    R r1 = abs((u * cconj(seq.alpha(n)) * seq.alpha(n - 1)).real());
    C a1 = seq.alpha(1), an = seq.alpha(n);
    C ratio = -u / cconj(u);
    C pw(1);
    for (int k = 0; k < n - 1; ++k) pw *= ratio;
    R r2 = cabs(an - cconj(an) * (a1 / cconj(a1)) * pw);
    return {r1, r2};
}

// |Im(conj(r) gamma_n + [(n+1)conj(r) + i u] conj(alpha_n) alpha_{n-1}) + Re(u r)|
template <class R>
R halfplane_identity(const OpucSequence<R>& seq, const complex_t<R>& u, const complex_t<R>& r,
                     int n) {
    using C = complex_t<R>;
    if (n < 2) throw OutOfRange("halfplane_identity: n >= 2");
    const C I(0, 1);
    C v = cconj(r) * seq.gamma_n[static_cast<std::size_t>(n)] +
          (C(R(n + 1)) * cconj(r) + I * u) * cconj(seq.alpha(n)) * seq.alpha(n - 1);
    using std::abs;
    return abs(v.imag() + (u * r).real());
}

// |Re(gamma_n + (d+n+1) conj(alpha_n) alpha_{n-1}) - (lambda - beta)|
template <class R>
R genjacobi_identity(const OpucSequence<R>& seq, const complex_t<R>& d,
                     const R& lambda_minus_beta, int n) {
    using C = complex_t<R>;
    if (n < 2) throw OutOfRange("genjacobi_identity: n >= 2");
    C v = seq.gamma_n[static_cast<std::size_t>(n)] +
          (d + C(R(n + 1))) * cconj(seq.alpha(n)) * seq.alpha(n - 1);
    using std::abs;
    return abs(v.real() - lambda_minus_beta);
}

}  // namespace opuc

#endif
