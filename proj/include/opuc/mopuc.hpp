// Monic orthogonal polynomials on the unit circle: the Szego recurrence
// driven by a moment table, plus the closed-form Verblunsky routes for the
// catalog families.
#ifndef OPUC_MOPUC_HPP
#define OPUC_MOPUC_HPP

#include <vector>

#include "opuc/moments.hpp"

namespace opuc {

template <class R>
struct OpucSequence {
    using C = complex_t<R>;

    int n_max = 0;
    std::vector<ComplexPoly<R>> phi;  // Phi_0 .. Phi_{n_max}
    std::vector<C> alpha_store;       // alpha_store[j] = alpha_{j-1}, j = 0 .. n_max+1
    std::vector<C> gamma_n;           // coefficient of z^{n-1} in Phi_n
    std::vector<C> beta_n;            // Phi_n'(0)
    std::vector<R> norm_sq;           // <Phi_n, Phi_n>

    // alpha_n for n in [-1, n_max]; alpha_{-1} = -1
    const C& alpha(int n) const {
        if (n < -1 || n + 1 >= static_cast<int>(alpha_store.size()))
            throw OutOfRange("alpha index " + std::to_string(n) + " not stored");
        return alpha_store[static_cast<std::size_t>(n + 1)];
    }
    int alpha_max() const { return static_cast<int>(alpha_store.size()) - 2; }
};

namespace detail {

template <class R>
void read_off_coefficients(OpucSequence<R>& seq) {
    using C = complex_t<R>;
    seq.gamma_n.clear();
    seq.beta_n.clear();
    for (int n = 0; n < static_cast<int>(seq.phi.size()); ++n) {
        seq.gamma_n.push_back(n >= 1 ? seq.phi[static_cast<std::size_t>(n)].coeff(n - 1) : C(0));
        seq.beta_n.push_back(n >= 1 ? seq.phi[static_cast<std::size_t>(n)].coeff(1) : C(0));
    }
}

}  // namespace detail

// Verblunsky extraction by the orthogonality ratio
// conj(alpha_n) = <z Phi_n, 1> / <Phi_n*, 1>, then Phi_{n+1} by the Szego step.
// Requires T.N >= n_max + 1.
template <class R>
OpucSequence<R> szego_sequence(const MomentTable<R>& T, int n_max) {
    using C = complex_t<R>;
    if (T.N < n_max + 1)
        throw MomentRangeExceeded("szego_sequence needs N >= n_max + 1");

    const R margin = num_traits<R>::breakdown_margin();
    OpucSequence<R> seq;
    seq.n_max = n_max;
    seq.phi.push_back(ComplexPoly<R>{C(1)});
    seq.alpha_store.push_back(C(-1));  // alpha_{-1}

    for (int n = 0; n <= n_max; ++n) {
        const ComplexPoly<R>& p = seq.phi.back();
        ComplexPoly<R> zp = p.shift_z(1);
        ComplexPoly<R> ps = p.reciprocal(n);
        C abar = inner_product(T, zp, ComplexPoly<R>{C(1)}) /
                 inner_product(T, ps, ComplexPoly<R>{C(1)});
        C alpha = cconj(abar);
        using std::isfinite;
        R mag = cabs(alpha);
        if (!isfinite(mag) || mag >= R(1) - margin)
            throw NumericalBreakdown("|alpha_" + std::to_string(n) + "| = " +
                                     num_traits<R>::str(mag));
        seq.alpha_store.push_back(alpha);
        if (n < n_max) seq.phi.push_back(zp - abar * ps);
    }

    detail::read_off_coefficients(seq);
    for (const auto& p : seq.phi) seq.norm_sq.push_back(inner_product(T, p, p).real());
    return seq;
}

// Rebuilds the polynomial sequence from given alpha_0..alpha_m via the Szego
// recurrence (no moments); norms from mu0 and the kappa-ratio identity.
template <class R>
OpucSequence<R> sequence_from_alphas(const std::vector<complex_t<R>>& alphas, int n_max,
                                     const R& mu0 = R(1)) {
    using C = complex_t<R>;
    if (static_cast<int>(alphas.size()) < n_max)
        throw InvalidParameter("sequence_from_alphas: not enough alphas");

    OpucSequence<R> seq;
    seq.n_max = n_max;
    seq.phi.push_back(ComplexPoly<R>{C(1)});
    seq.alpha_store.push_back(C(-1));
    seq.norm_sq.push_back(mu0);
    for (int n = 0; n < n_max; ++n) {
        const C& a = alphas[static_cast<std::size_t>(n)];
        seq.alpha_store.push_back(a);
        const ComplexPoly<R>& p = seq.phi.back();
        seq.phi.push_back(p.shift_z(1) - cconj(a) * p.reciprocal(n));
        seq.norm_sq.push_back(seq.norm_sq.back() * (R(1) - static_cast<R>(cnorm(a))));
    }
    if (static_cast<int>(alphas.size()) > n_max)
        seq.alpha_store.push_back(alphas[static_cast<std::size_t>(n_max)]);
    detail::read_off_coefficients(seq);
    return seq;
}

// alpha_n in closed form:
//   sin^(2 lambda) weight:  alpha_n = -(b)_{n+1} / (conj(b)+1)_{n+1}
//   rotated cosine weight:  alpha_n = (-1)^n (c)_{n+1} / (conj(c)+1)_{n+1}
//   Jacobi weight:          alpha_n = -(lambda + (-1)^{n+1} beta) / (n+1+lambda+beta)
template <class R>
std::vector<complex_t<R>> verblunsky_closed_form(const WeightContext<R>& ctx, int n_max) {
    using C = complex_t<R>;
    std::vector<C> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    switch (ctx.family) {
        case Family::lebesgue:
            out.assign(static_cast<std::size_t>(n_max) + 1, C(0));
            break;
        case Family::circular_jacobi:
        case Family::sri_ranga: {
            C num(1), den(1);
            for (int n = 0; n <= n_max; ++n) {
                num *= ctx.b + C(R(n));
                den *= cconj(ctx.b) + C(R(n + 1));
                out.push_back(-num / den);
            }
            break;
        }
        case Family::rotated_cos: {
            C num(1), den(1);
            R sign(1);
            for (int n = 0; n <= n_max; ++n) {
                num *= ctx.c + C(R(n));
                den *= cconj(ctx.c) + C(R(n + 1));
                out.push_back(sign * num / den);
                sign = -sign;
            }
            break;
        }
        case Family::jacobi: {
            R s = ctx.lambda + ctx.beta;
            for (int n = 0; n <= n_max; ++n) {
                R signed_beta = (n % 2 == 0) ? -ctx.beta : ctx.beta;  // (-1)^{n+1} beta
                out.push_back(C(-(ctx.lambda + signed_beta) / (R(n + 1) + s)));
            }
            break;
        }
        default:
            throw NoClosedForm(std::string(family_name(ctx.family)) +
                               " has no closed-form Verblunsky coefficients");
    }
    return out;
}

// Phi_n(z) via the terminating hypergeometric representation (sin^(2 lambda)
// and rotated cosine families).
template <class R>
complex_t<R> mopuc_closed_form(const WeightContext<R>& ctx, int n, const complex_t<R>& z) {
    using C = complex_t<R>;
    if (n < 0) throw InvalidParameter("mopuc_closed_form: n >= 0");
    switch (ctx.family) {
        case Family::circular_jacobi:
        case Family::sri_ranga: {
            C b = ctx.b, s = b + cconj(b) + C(1);
            C pref = pochhammer<R>(s, n) / pochhammer<R>(b + C(1), n);
            return pref * hyp2f1_terminating<R>(n, b + C(1), s, C(1) - z);
        }
        case Family::rotated_cos: {
            C c = ctx.c, s = c + cconj(c) + C(1);
            C pref = pochhammer<R>(s, n) / pochhammer<R>(c + C(1), n);
            R sign = (n % 2 == 0) ? R(1) : R(-1);
            return sign * pref * hyp2f1_terminating<R>(n, c + C(1), s, C(1) + z);
        }
        default:
            throw NoClosedForm(std::string(family_name(ctx.family)) +
                               " has no hypergeometric representation here");
    }
}

// | <Phi_{n-1}, z^n> + conj(gamma_n) ||Phi_{n-1}||^2 |
template <class R>
R fato1_check(const OpucSequence<R>& seq, const MomentTable<R>& T, int n) {
    using C = complex_t<R>;
    if (n < 1 || n > seq.n_max) throw OutOfRange("fato1_check: 1 <= n <= n_max");
    const ComplexPoly<R>& pm1 = seq.phi[static_cast<std::size_t>(n - 1)];
    C lhs = inner_product(T, pm1, ComplexPoly<R>::monomial(n));
    C nrm = inner_product(T, pm1, pm1);
    return cabs(lhs + cconj(seq.gamma_n[static_cast<std::size_t>(n)]) * nrm);
}

}  // namespace opuc

#endif
