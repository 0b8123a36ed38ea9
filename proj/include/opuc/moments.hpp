// Trigonometric moments mu_k = int e^{-ik theta} w(theta) dtheta and the
// moment-based sesquilinear form <f, g> = sum f_j conj(g_k) mu_{k-j}.
#ifndef OPUC_MOMENTS_HPP
#define OPUC_MOMENTS_HPP

#include <vector>

#include "opuc/weights.hpp"

namespace opuc {

template <class R>
struct MomentTable {
    using C = complex_t<R>;

    int N = 0;
    std::vector<C> data;  // index k + N for k in [-N, N]
    std::string precision;
    QuadratureMeta<R> meta;

    const C& mu(int k) const {
        if (k < -N || k > N)
            throw MomentRangeExceeded("moment index " + std::to_string(k) +
                                      " outside table range N = " + std::to_string(N));
        return data[static_cast<std::size_t>(k + N)];
    }
};

// mu_k for |k| <= N; only k >= 0 is integrated, negative k by conjugation.
template <class R>
MomentTable<R> compute_moments(const WeightContext<R>& ctx, int N) {
    using C = complex_t<R>;
    if (N < 0) throw InvalidParameter("compute_moments: N must be >= 0");

    const std::size_t m = static_cast<std::size_t>(N) + 1;
    const R target = num_traits<R>::quad_target();
    std::vector<C> acc(m, C(0)), cell_out;

    MomentTable<R> table;
    table.N = N;
    table.precision = num_traits<R>::name();

    for (std::size_t cell = 0; cell + 1 < ctx.cells.size(); ++cell) {
        const R a = ctx.cells[cell], b = ctx.cells[cell + 1];
        auto fill = [&](const R& theta, const R& dl, const R& dr, std::vector<C>& out) {
            R w = ctx.tau * detail::weight_raw_cell(ctx, cell, theta, dl, dr, false);
            C em = cconj(unit_circle<R>(theta));  // e^{-i theta}
            C ph(1);
            for (std::size_t k = 0; k < m; ++k) {
                out[k] = ph * w;
                ph *= em;
            }
        };
        QuadratureMeta<R> meta;
        if (ctx.smooth_periodic) {
            meta = trapezoid_periodic<R>(
                [&](const R& theta, std::vector<C>& out) { fill(theta, theta - a, b - theta, out); },
                a, b, m, target, cell_out);
        } else {
            meta = tanh_sinh_cell<R>(fill, a, b, m, target, cell_out);
        }
        if (!meta.converged)
            throw QuadratureFailure("moment quadrature did not converge for " +
                                    std::string(family_name(ctx.family)));
        using std::isfinite;
        for (std::size_t k = 0; k < m; ++k) {
            if (!isfinite(cell_out[k].real()) || !isfinite(cell_out[k].imag()))
                throw QuadratureFailure("non-finite moment for " +
                                        std::string(family_name(ctx.family)));
            acc[k] += cell_out[k];
        }
        table.meta.rule = meta.rule;
        table.meta.levels = std::max(table.meta.levels, meta.levels);
        table.meta.nodes += meta.nodes;
        if (meta.est_error > table.meta.est_error) table.meta.est_error = meta.est_error;
    }
    table.meta.converged = true;

    table.data.assign(2 * static_cast<std::size_t>(N) + 1, C(0));
    for (int k = 0; k <= N; ++k) {
        table.data[static_cast<std::size_t>(k + N)] = acc[static_cast<std::size_t>(k)];
        table.data[static_cast<std::size_t>(N - k)] = cconj(acc[static_cast<std::size_t>(k)]);
    }
    return table;
}

template <class R>
MomentTable<R> compute_moments(const WeightSpec& spec, int N) {
    return compute_moments(make_context<R>(spec), N);
}

// <f, g> = sum_j sum_k f_j conj(g_k) mu_{k-j}
template <class R>
complex_t<R> inner_product(const MomentTable<R>& table, const ComplexPoly<R>& f,
                           const ComplexPoly<R>& g) {
    using C = complex_t<R>;
    C acc(0);
    for (int j = 0; j <= f.degree(); ++j) {
        const C fj = f.coeff(j);
        if (is_zero<R>(fj)) continue;
        for (int k = 0; k <= g.degree(); ++k) {
            const C gk = g.coeff(k);
            if (is_zero<R>(gk)) continue;
            acc += fj * cconj(gk) * table.mu(k - j);
        }
    }
    return acc;
}

}  // namespace opuc

#endif
