// Non-linear difference equations for the Verblunsky coefficients: the two
// general equations plus the displayed specializations, with residual
// checking (stable) and forward propagation (diagnostic).
#ifndef OPUC_DIFFERENCES_HPP
#define OPUC_DIFFERENCES_HPP

#include <optional>

#include "opuc/mopuc.hpp"
#include "opuc/weights.hpp"

namespace opuc {

enum class DiffId {
    general_primary,
    general_secondary,
    sinw_step_down,
    sinw_two_term,
    sinw_split_re,
    sinw_split_im,
    sinw_closed_sum,
    sinw_closed_diff,
    sinw_modulus,
    dpii,
    complex_dpii,
    halfplane_pair,
    genjacobi_pair,
    jacobi_pair,
};

const char* diff_name(DiffId id);
DiffId diff_from_name(const std::string& name);
std::vector<DiffId> applicable_differences(Family f);

template <class R>
struct DifferenceEq {
    using C = complex_t<R>;
    DiffId id;
    C b{};                        // sin^(2 lambda) weight parameter
    C u{};                        // complex dPII / half-plane parameter
    C d{};                        // lambda + beta + i eta
    C r{};                        // half-plane root
    R t{};                        // dPII parameter
    R lambda_plus_beta{};
    R lambda_minus_beta{};
    std::optional<PearsonPair<R>> pair;  // general equations
};

template <class R>
DifferenceEq<R> make_difference_eq(DiffId id, const WeightContext<R>& ctx,
                                   std::optional<PearsonPair<R>> pair = {}) {
    DifferenceEq<R> eq;
    eq.id = id;
    eq.b = ctx.b;
    eq.u = ctx.u;
    eq.d = complex_t<R>(ctx.lambda + ctx.beta, ctx.eta);
    eq.r = ctx.r;
    eq.t = ctx.t;
    eq.lambda_plus_beta = ctx.lambda + ctx.beta;
    eq.lambda_minus_beta = ctx.lambda - ctx.beta;
    eq.pair = std::move(pair);
    if ((id == DiffId::general_primary || id == DiffId::general_secondary) && !eq.pair)
        throw InvalidParameter("general difference equations need a Pearson pair");
    return eq;
}

template <class R>
DifferenceEq<R> make_difference_eq(DiffId id, const WeightContext<R>& ctx,
                                   const PearsonPair<R>& pair) {
    return make_difference_eq(id, ctx, std::optional<PearsonPair<R>>(pair));
}

constexpr double kUnitGuard = 1e-10;  // 1 - |alpha|^2 below this: not evaluable

namespace detail {

template <class R>
std::optional<R> guard_weight(const complex_t<R>& a) {
    R w = R(1) - static_cast<R>(cnorm(a));
    if (w < R(kUnitGuard)) return std::nullopt;
    return w;
}

}  // namespace detail

// |LHS - RHS| of the equation at index n; nullopt when a 1 - |alpha|^2
// denominator is below the guard.
template <class R>
std::optional<R> difference_residual(const DifferenceEq<R>& eq, const OpucSequence<R>& seq,
                                     int n) {
    using C = complex_t<R>;
    const C I(0, 1);

    auto need = [&](int lo) {
        if (n < lo || n > seq.alpha_max())
            throw OutOfRange(std::string(diff_name(eq.id)) + " needs " + std::to_string(lo) +
                             " <= n <= " + std::to_string(seq.alpha_max()));
    };

    switch (eq.id) {
        case DiffId::general_primary: {
            need(2);
            const auto& A = eq.pair->A;
            const auto& B = eq.pair->B;
            C a0 = cconj(A.coeff(0)), a1 = cconj(A.coeff(1)), a2 = cconj(A.coeff(2));
            C b0 = cconj(B.coeff(0)), b2 = cconj(B.coeff(2));
            auto w = detail::guard_weight<R>(seq.alpha(n - 1));
            if (!w) return std::nullopt;
            C gn = seq.gamma_n[static_cast<std::size_t>(n)];
            C lhs = (C(R(n - 1)) * a2 + I * b2) * seq.alpha(n) +
                    (C(R(n - 1)) * a0 - I * b0) * seq.alpha(n - 2);
            C rhs = -(C(R(n)) * a1 - gn * a0 - cconj(gn) * a2) * seq.alpha(n - 1) / C(*w);
            return cabs(lhs - rhs);
        }
        case DiffId::general_secondary: {
            need(2);
            const auto& A = eq.pair->A;
            const auto& B = eq.pair->B;
            C a0 = cconj(A.coeff(0)), a1 = cconj(A.coeff(1)), a2 = cconj(A.coeff(2));
            C b0 = cconj(B.coeff(0)), b1 = cconj(B.coeff(1)), b2 = cconj(B.coeff(2));
            auto w = detail::guard_weight<R>(seq.alpha(n - 1));
            if (!w) return std::nullopt;
            C gn = seq.gamma_n[static_cast<std::size_t>(n)];
            C lhs = (C(R(n - 1)) * a2 + I * b2) * seq.alpha(n) / C(*w) +
                    (C(R(n - 1)) * a0 - I * b0) * seq.alpha(n - 2);
            C brace = (I * b0 - C(R(n + 1)) * a0) * seq.alpha(n - 1) * cconj(seq.alpha(n)) -
                      I * b1 + C(R(n + 1)) * a1 - C(2) * gn * a0;
            C rhs = -brace * seq.alpha(n - 1) / C(*w);
            return cabs(lhs - rhs);
        }
        case DiffId::sinw_step_down: {
            if (n < 0 || n + 1 > seq.alpha_max())
                throw OutOfRange("sinw_step_down needs 0 <= n <= alpha_max - 1");
            auto w = detail::guard_weight<R>(seq.alpha(n + 1));
            if (!w) return std::nullopt;
            C lhs = (eq.b + C(R(n + 1))) * seq.alpha(n);
            C rhs = (C(R(n + 2)) + cconj(eq.b) -
                     (eq.b + C(R(n + 1))) * cconj(seq.alpha(n + 1)) * seq.alpha(n)) *
                    seq.alpha(n + 1) / C(*w);
            return cabs(lhs - rhs);
        }
        case DiffId::sinw_two_term: {
            need(1);
            return cabs((cconj(eq.b) + C(R(n + 1))) * seq.alpha(n) -
                        (eq.b + C(R(n))) * seq.alpha(n - 1));
        }
        case DiffId::sinw_split_re: {
            need(2);
            auto w = detail::guard_weight<R>(seq.alpha(n - 1));
            if (!w) return std::nullopt;
            C gn = seq.gamma_n[static_cast<std::size_t>(n)];
            C lhs = (cconj(eq.b) + C(R(n + 1))) * seq.alpha(n) +
                    (eq.b + C(R(n - 1))) * seq.alpha(n - 2);
            C rhs = C(R(2) * (static_cast<R>(gn.real()) + R(n))) * seq.alpha(n - 1) / C(*w);
            return cabs(lhs - rhs);
        }
        case DiffId::sinw_split_im: {
            need(2);
            auto w = detail::guard_weight<R>(seq.alpha(n - 1));
            if (!w) return std::nullopt;
            C gn = seq.gamma_n[static_cast<std::size_t>(n)];
            C lhs = (cconj(eq.b) + C(R(n + 1))) * seq.alpha(n) -
                    (eq.b + C(R(n - 1))) * seq.alpha(n - 2);
            C rhs = -C(0, R(2)) * C(static_cast<R>(gn.imag())) * seq.alpha(n - 1) / C(*w);
            return cabs(lhs - rhs);
        }
        case DiffId::sinw_closed_sum: {
            need(2);
            auto w = detail::guard_weight<R>(seq.alpha(n - 1));
            if (!w) return std::nullopt;
            C gcf = C(R(n)) * cconj(eq.b) / (eq.b + C(R(n)));  // closed-form gamma_n
            C lhs = (cconj(eq.b) + C(R(n + 1))) * seq.alpha(n) +
                    (eq.b + C(R(n - 1))) * C(*w) * seq.alpha(n - 2);
            C rhs = (gcf + eq.b + C(R(2 * n))) * seq.alpha(n - 1);
            return cabs(lhs - rhs);
        }
        case DiffId::sinw_closed_diff: {
            need(2);
            auto w = detail::guard_weight<R>(seq.alpha(n - 1));
            if (!w) return std::nullopt;
            C gcf = C(R(n)) * cconj(eq.b) / (eq.b + C(R(n)));
            C lhs = (cconj(eq.b) + C(R(n + 1))) * seq.alpha(n) -
                    (eq.b + C(R(n - 1))) * C(*w) * seq.alpha(n - 2);
            C rhs = -(gcf - eq.b) * seq.alpha(n - 1);
            return cabs(lhs - rhs);
        }
        case DiffId::sinw_modulus: {
            need(1);
            C an = seq.alpha(n), an1 = seq.alpha(n - 1);
            C lhs = cconj(an) * (an1 + an);
            C rhs = (cconj(eq.b) + C(R(n))) *
                    C(static_cast<R>(cnorm(an1)) - static_cast<R>(cnorm(an)));
            return cabs(lhs - rhs);
        }
        case DiffId::dpii: {
            need(2);
            C an1 = seq.alpha(n - 1);
            C den = C(1) - an1 * an1;
            if (cabs(den) < R(kUnitGuard)) return std::nullopt;
            C lhs = seq.alpha(n) + seq.alpha(n - 2);
            C rhs = -C(R(2 * n) / eq.t) * an1 / den;
            return cabs(lhs - rhs);
        }
        case DiffId::complex_dpii: {
            need(2);
            auto w = detail::guard_weight<R>(seq.alpha(n - 1));
            if (!w) return std::nullopt;
            C lhs = cconj(I * eq.u) * seq.alpha(n) + I * eq.u * seq.alpha(n - 2);
            C rhs = C(R(n)) * seq.alpha(n - 1) / C(*w);
            return cabs(lhs - rhs);
        }
        case DiffId::halfplane_pair: {
            need(2);
            auto w = detail::guard_weight<R>(seq.alpha(n - 1));
            if (!w) return std::nullopt;
            C gn = seq.gamma_n[static_cast<std::size_t>(n)];
            C r = eq.r, rb = cconj(r), u = eq.u;
            R r2p1 = static_cast<R>(cnorm(r)) + R(1);
            C coefn = (C(R(n + 1)) * r - cconj(u) * I);
            C coefn2 = (C(R(n - 1)) * rb + u * I);
            C lhs1 = coefn * seq.alpha(n) + coefn2 * seq.alpha(n - 2);
            C rhs1 = (C(R(n)) * C(r2p1) + C(R(2) * static_cast<R>((r * cconj(gn)).real()))) *
                     seq.alpha(n - 1) / C(*w);
            R res1 = cabs(lhs1 - rhs1);
            C lhs2 = coefn * seq.alpha(n) + coefn2 * seq.alpha(n - 2) * C(*w);
            C rhs2 = (C(R(n)) * C(r2p1) + C(R(2) * static_cast<R>((u * r).real())) * I +
                      (C(R(n + 1)) * rb + u * I) * cconj(seq.alpha(n)) * seq.alpha(n - 1) +
                      C(2) * rb * gn) *
                     seq.alpha(n - 1);
            R res2 = cabs(lhs2 - rhs2);
            return std::max(res1, res2);
        }
        case DiffId::genjacobi_pair: {
            need(2);
            auto w = detail::guard_weight<R>(seq.alpha(n - 1));
            if (!w) return std::nullopt;
            C gn = seq.gamma_n[static_cast<std::size_t>(n)];
            C d = eq.d, db = cconj(d);
            C lhs1 = (db + C(R(n + 1))) * seq.alpha(n) - (d + C(R(n - 1))) * seq.alpha(n - 2);
            C rhs1 = -C(0, R(2)) * C(static_cast<R>(gn.imag())) * seq.alpha(n - 1) / C(*w);
            R res1 = cabs(lhs1 - rhs1);
            C lhs2 = (db + C(R(n + 1))) * seq.alpha(n) -
                     (d + C(R(n - 1))) * seq.alpha(n - 2) * C(*w);
            C rhs2 = -(C(2) * gn + (d + C(R(n + 1))) * cconj(seq.alpha(n)) * seq.alpha(n - 1) -
                       C(R(2) * eq.lambda_minus_beta)) *
                     seq.alpha(n - 1);
            R res2 = cabs(lhs2 - rhs2);
            return std::max(res1, res2);
        }
        case DiffId::jacobi_pair: {
            need(2);
            auto w = detail::guard_weight<R>(seq.alpha(n - 1));
            if (!w) return std::nullopt;
            C gn = seq.gamma_n[static_cast<std::size_t>(n)];
            R s = eq.lambda_plus_beta;
            C lhs1 = C(s + R(n + 1)) * seq.alpha(n) -
                     C(s + R(n - 1)) * seq.alpha(n - 2) * C(*w);
            C rhs1 = -(C(2) * gn + C(s + R(n + 1)) * seq.alpha(n) * seq.alpha(n - 1) -
                       C(R(2) * eq.lambda_minus_beta)) *
                     seq.alpha(n - 1);
            R res1 = cabs(lhs1 - rhs1);
            R res2 = cabs(C(s + R(n + 1)) * seq.alpha(n) - C(s + R(n - 1)) * seq.alpha(n - 2));
            return std::max(res1, res2);
        }
    }
    throw Error("unreachable difference id");
}

template <class R>
struct PropagationResult {
    std::vector<complex_t<R>> alpha;  // alpha_0 .. alpha_{n_max}
    int first_violation = -1;         // first n with |alpha_n| >= 1, or -1
};

// Forward (or, for sinw_step_down, backward) iteration of the explicitly solvable
// equations.  dPII-style iterations are numerically unstable; residual
// checking is the primary verification and this is a diagnostic.
template <class R>
PropagationResult<R> propagate(const DifferenceEq<R>& eq,
                               const std::vector<complex_t<R>>& seeds, int n_max) {
    using C = complex_t<R>;
    const C I(0, 1);
    PropagationResult<R> out;
    out.alpha.assign(static_cast<std::size_t>(n_max) + 1, C(0));

    auto violated = [&](int n) {
        if (out.first_violation < 0 && cabs(out.alpha[static_cast<std::size_t>(n)]) >= R(1)) {
            out.first_violation = n;
            return true;
        }
        return false;
    };

    switch (eq.id) {
        case DiffId::sinw_two_term: {
            C prev = seeds.empty() ? C(-1) : seeds[0];  // alpha_{-1}
            for (int n = 0; n <= n_max; ++n) {
                C denom = cconj(eq.b) + C(R(n + 1));
                if (is_zero<R>(denom)) throw UnsolvableStep("sinw_two_term at n=" + std::to_string(n));
                out.alpha[static_cast<std::size_t>(n)] = (eq.b + C(R(n))) * prev / denom;
                if (violated(n)) return out;
                prev = out.alpha[static_cast<std::size_t>(n)];
            }
            return out;
        }
        case DiffId::sinw_step_down: {
            // alpha_n = (conj(b)+n+2) alpha_{n+1} / (b+n+1), seeded at the top index
            if (seeds.empty()) throw InvalidParameter("sinw_step_down propagation needs a seed");
            out.alpha[static_cast<std::size_t>(n_max)] = seeds[0];
            for (int n = n_max - 1; n >= 0; --n) {
                C denom = eq.b + C(R(n + 1));
                if (is_zero<R>(denom)) throw UnsolvableStep("sinw_step_down at n=" + std::to_string(n));
                out.alpha[static_cast<std::size_t>(n)] =
                    (cconj(eq.b) + C(R(n + 2))) * out.alpha[static_cast<std::size_t>(n + 1)] / denom;
            }
            for (int n = 0; n <= n_max; ++n)
                if (violated(n)) return out;
            return out;
        }
        case DiffId::dpii: {
            if (seeds.size() < 2) throw InvalidParameter("dpii propagation needs alpha_0, alpha_1");
            out.alpha[0] = seeds[0];
            if (n_max >= 1) out.alpha[1] = seeds[1];
            for (int n = 2; n <= n_max; ++n) {
                C an1 = out.alpha[static_cast<std::size_t>(n - 1)];
                C den = C(1) - an1 * an1;
                if (cabs(den) < R(kUnitGuard))
                    throw UnsolvableStep("dpii: 1 - alpha^2 vanishes at n=" + std::to_string(n));
                out.alpha[static_cast<std::size_t>(n)] =
                    -out.alpha[static_cast<std::size_t>(n - 2)] - C(R(2 * n) / eq.t) * an1 / den;
                if (violated(n)) return out;
            }
            return out;
        }
        case DiffId::complex_dpii: {
            if (seeds.size() < 2)
                throw InvalidParameter("complex_dpii propagation needs alpha_0, alpha_1");
            if (is_zero<R>(eq.u)) throw UnsolvableStep("complex_dpii: u = 0");
            out.alpha[0] = seeds[0];
            if (n_max >= 1) out.alpha[1] = seeds[1];
            for (int n = 2; n <= n_max; ++n) {
                C an1 = out.alpha[static_cast<std::size_t>(n - 1)];
                R w = R(1) - static_cast<R>(cnorm(an1));
                if (w < R(kUnitGuard))
                    throw UnsolvableStep("complex_dpii: 1 - |alpha|^2 vanishes at n=" +
                                         std::to_string(n));
                C rhs = C(R(n)) * an1 / C(w) - I * eq.u * out.alpha[static_cast<std::size_t>(n - 2)];
                out.alpha[static_cast<std::size_t>(n)] = rhs / cconj(I * eq.u);
                if (violated(n)) return out;
            }
            return out;
        }
        case DiffId::general_primary: {
            if (seeds.size() < 2)
                throw InvalidParameter("general_primary propagation needs alpha_0, alpha_1");
            const auto& A = eq.pair->A;
            const auto& B = eq.pair->B;
            C a0 = cconj(A.coeff(0)), a1 = cconj(A.coeff(1)), a2 = cconj(A.coeff(2));
            C b0 = cconj(B.coeff(0)), b2 = cconj(B.coeff(2));
            out.alpha[0] = seeds[0];
            if (n_max >= 1) out.alpha[1] = seeds[1];
            C gamma = cconj(out.alpha[0]) * C(-1);  // gamma_1
            for (int n = 2; n <= n_max; ++n) {
                gamma += cconj(out.alpha[static_cast<std::size_t>(n - 1)]) *
                         out.alpha[static_cast<std::size_t>(n - 2)];  // gamma_n
                C lead = C(R(n - 1)) * a2 + I * b2;
                if (cabs(lead) < R(1e-14))
                    throw UnsolvableStep("general_primary: leading coefficient vanishes at n=" +
                                         std::to_string(n));
                C an1 = out.alpha[static_cast<std::size_t>(n - 1)];
                R w = R(1) - static_cast<R>(cnorm(an1));
                if (w < R(kUnitGuard))
                    throw UnsolvableStep("general_primary: 1 - |alpha|^2 vanishes at n=" +
                                         std::to_string(n));
                C rhs = -(C(R(n)) * a1 - gamma * a0 - cconj(gamma) * a2) * an1 / C(w) -
                        (C(R(n - 1)) * a0 - I * b0) * out.alpha[static_cast<std::size_t>(n - 2)];
                out.alpha[static_cast<std::size_t>(n)] = rhs / lead;
                if (violated(n)) return out;
            }
            return out;
        }
        default:
            throw UnsolvableStep(std::string(diff_name(eq.id)) +
                                 " is not explicitly solvable for its highest-index alpha");
    }
}

// modulus-difference residual: |conj(alpha_n)(alpha_{n-1}+alpha_n)
//                        - (conj(b)+n)(|alpha_{n-1}|^2 - |alpha_n|^2)|
template <class R>
R rd_caso1_check(const OpucSequence<R>& seq, const complex_t<R>& b, int n) {
    using C = complex_t<R>;
    if (n < 1) throw OutOfRange("rd_caso1_check: n >= 1");
    C an = seq.alpha(n), an1 = seq.alpha(n - 1);
    C lhs = cconj(an) * (an1 + an);
    C rhs = (cconj(b) + C(R(n))) * C(static_cast<R>(cnorm(an1)) - static_cast<R>(cnorm(an)));
    return cabs(lhs - rhs);
}

}  // namespace opuc

#endif
