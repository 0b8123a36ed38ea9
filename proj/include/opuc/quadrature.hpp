// Two quadrature rules, both vector-valued with level reuse:
//  - periodic trapezoid with node doubling (spectral for periodic analytic
//    integrands);
//  - tanh-sinh on a cell, feeding the integrand exact distances to the cell
//    endpoints so algebraic endpoint singularities are evaluated stably.
#ifndef OPUC_QUADRATURE_HPP
#define OPUC_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "opuc/numeric.hpp"

namespace opuc {

template <class R>
struct QuadratureMeta {
    std::string rule;
    int levels = 0;
    long nodes = 0;
    R est_error{};
    bool converged = false;
};

namespace detail {

template <class R>
R vec_max_abs(const std::vector<complex_t<R>>& v) {
    R m(0);
    for (const auto& x : v) {
        R a = cabs(x);
        if (a > m) m = a;
    }
    return m;
}

template <class R>
R vec_max_diff(const std::vector<complex_t<R>>& a, const std::vector<complex_t<R>>& b) {
    R m(0);
    for (std::size_t k = 0; k < a.size(); ++k) {
        R d = cabs(a[k] - b[k]);
        if (d > m) m = d;
    }
    return m;
}

}  // namespace detail

// f(theta, values): fills m complex values at theta.
template <class R, class F>
QuadratureMeta<R> trapezoid_periodic(F&& f, const R& a, const R& b, std::size_t m,
                                     const R& target, std::vector<complex_t<R>>& out) {
    using C = complex_t<R>;
    QuadratureMeta<R> meta;
    meta.rule = "periodic-trapezoid";

    std::vector<C> prev(m, C(0)), cur(m, C(0)), vals(m);
    int n = 16;
    const int max_nodes = 1 << 16;
    while (true) {
        const R h = (b - a) / R(n);
        std::fill(cur.begin(), cur.end(), C(0));
        for (int j = 0; j < n; ++j) {
            R theta = a + (R(j) + R(0.5)) * h;
            f(theta, vals);
            for (std::size_t k = 0; k < m; ++k) cur[k] += vals[k];
        }
        for (std::size_t k = 0; k < m; ++k) cur[k] *= h;
        meta.nodes += n;
        ++meta.levels;

        if (meta.levels > 1) {
            meta.est_error = detail::vec_max_diff<R>(cur, prev);
            R scale = std::max(R(1), detail::vec_max_abs<R>(cur));
            if (meta.est_error <= target * scale) {
                meta.converged = true;
                break;
            }
        }
        if (2 * n > max_nodes) break;
        prev = cur;
        n *= 2;
    }
    out = cur;
    return meta;
}

// f(theta, dl, dr, values): dl = theta - a, dr = b - theta, both computed to
// full relative accuracy.
template <class R, class F>
QuadratureMeta<R> tanh_sinh_cell(F&& f, const R& a, const R& b, std::size_t m,
                                 const R& target, std::vector<complex_t<R>>& out) {
    using C = complex_t<R>;
    using std::cosh;
    using std::exp;
    using std::sinh;

    QuadratureMeta<R> meta;
    meta.rule = "tanh-sinh";

    const R pi_half = num_traits<R>::pi() / R(2);
    const R tmax = num_traits<R>::tanh_sinh_tmax();
    const int max_level = num_traits<R>::tanh_sinh_max_level();
    const R half_width = (b - a) / R(2);
    const R mid = (a + b) / R(2);

    std::vector<C> vals(m);
    R tail(0);  // magnitude of the outermost weighted samples: truncation floor
    // contribution of the node at t (weighted f), accumulated into sum
    auto add_node = [&](const R& t, std::vector<C>& sum) {
        R u = pi_half * sinh(t);
        R ch = cosh(u);
        R dxdt = pi_half * cosh(t) / (ch * ch);
        // distances of x = tanh(u) from the endpoints +-1: 1 -+ x = e^{-+u}/cosh(u)
        R d_right = exp(-u) / ch;  // 1 - x
        R d_left = exp(u) / ch;    // 1 + x
        R dl = half_width * d_left;
        R dr = half_width * d_right;
        R theta = (dl <= dr) ? (a + dl) : (b - dr);
        f(theta, dl, dr, vals);
        for (std::size_t k = 0; k < m; ++k) sum[k] += vals[k] * dxdt;
        ++meta.nodes;
        if (t == tmax || t == -tmax) {
            R mag = detail::vec_max_abs<R>(vals) * dxdt * half_width;
            if (mag > tail) tail = mag;
        }
    };

    R h = tmax / R(4);
    std::vector<C> weighted(m, C(0));
    // level 0: all multiples of h
    add_node(R(0), weighted);
    for (int k = 1; R(k) * h <= tmax; ++k) {
        add_node(R(k) * h, weighted);
        add_node(R(-k) * h, weighted);
    }
    std::vector<C> prev(m, C(0)), cur(m);
    for (std::size_t k = 0; k < m; ++k) cur[k] = weighted[k] * h * half_width;
    meta.levels = 1;

    for (int level = 1; level <= max_level; ++level) {
        h /= R(2);
        // new nodes: odd multiples of the refined h
        for (int k = 1; R(k) * h <= tmax; k += 2) {
            add_node(R(k) * h, weighted);
            add_node(R(-k) * h, weighted);
        }
        prev = cur;
        for (std::size_t k = 0; k < m; ++k) cur[k] = weighted[k] * h * half_width;
        ++meta.levels;

        meta.est_error = std::max(detail::vec_max_diff<R>(cur, prev), tail);
        R scale = std::max(R(1), detail::vec_max_abs<R>(cur));
        if (level >= 3 && meta.est_error <= target * scale) {
            meta.converged = true;
            break;
        }
    }
    out = cur;
    return meta;
}

}  // namespace opuc

#endif
