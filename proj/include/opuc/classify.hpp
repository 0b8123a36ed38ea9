// The 5x6 positivity systems that determine all semi-classical B's for a
// given zero configuration of A, with a rank-revealing complete-pivot solver
// and membership tests for catalog pairs.
#ifndef OPUC_CLASSIFY_HPP
#define OPUC_CLASSIFY_HPP

#include <array>
#include <vector>

#include "opuc/quadrature.hpp"
#include "opuc/weights.hpp"

namespace opuc {

template <class R>
struct PositivitySystem {
    int degree = 1;  // of A
    complex_t<R> r1{}, r2{};
    std::array<std::array<R, 6>, 5> F{};
    std::array<R, 5> g{};
    // deg 1 unknowns: (Re b2, Im b2, Re b1, Im b1, Re b0, Im b0)
    // deg 2 unknowns: (Im b0, Re b0, Im b1, Re b1, Im b2, Re b2)
};

template <class R>
PositivitySystem<R> build_system_deg1(const complex_t<R>& r) {
    PositivitySystem<R> s;
    s.degree = 1;
    s.r1 = r;
    const R a = r.real(), b = r.imag();
    s.F = {{{-a, -b, 0, 0, 0, 0},
            {b, -a, 0, 0, 0, 0},
            {0, 0, 0, 1, b, -a},
            {1, 0, -a, -b, -1, 0},
            {0, 1, b, -a, 0, 1}}};
    s.g = {R(0), R(0), R(1), -b, -a};
    return s;
}

template <class R>
PositivitySystem<R> build_system_deg2(const complex_t<R>& r1, const complex_t<R>& r2) {
    PositivitySystem<R> s;
    s.degree = 2;
    s.r1 = r1;
    s.r2 = r2;
    const complex_t<R> p = r1 * r2, q = r1 + r2;
    const R pr = p.real(), pi = p.imag(), qr = q.real(), qi = q.imag();
    s.F = {{{1, 0, 0, 0, pr, -pi},
            {0, -1, 0, 0, pi, pr},
            {pr, -pi, -qr, qi, 1, 0},
            {-qr, qi, pr + 1, -pi, -qr, qi},
            {qi, qr, pi, pr - 1, -qi, -qr}}};
    const R m1 = static_cast<R>(cnorm(r1)), m2 = static_cast<R>(cnorm(r2));
    s.g = {R(2) * pr, R(2) * pi, R(2) + static_cast<R>(cnorm(q)),
           R(-3) * qr - m1 * r2.real() - m2 * r1.real(),
           R(-3) * qi - m1 * r2.imag() - m2 * r1.imag()};
    return s;
}

template <class R>
struct SolutionSpace {
    std::array<R, 6> particular{};  // minimum-norm solution
    std::vector<std::array<R, 6>> nullspace;
    int rank = 0;
};

namespace detail {

// Complete-pivoting elimination on an m x 6 system.  Rank tolerance is
// 1e-10 * max|F| per the solver contract; throws Infeasible on an
// inconsistent system.
template <class R>
SolutionSpace<R> solve_rows(std::vector<std::array<R, 6>> F, std::vector<R> g) {
    using std::abs;
    const int m = static_cast<int>(F.size());
    const int ncol = 6;

    R norm(0);
    for (const auto& row : F)
        for (const R& v : row)
            if (abs(v) > norm) norm = abs(v);
    const R tol = std::max(norm, R(1)) * R(1e-10);

    std::array<int, 6> colmap{};  // position -> original column
    for (int j = 0; j < ncol; ++j) colmap[static_cast<std::size_t>(j)] = j;

    int rank = 0;
    for (int step = 0; step < std::min(m, ncol); ++step) {
        int pi = step, pj = step;
        R best(0);
        for (int i = step; i < m; ++i)
            for (int j = step; j < ncol; ++j)
                if (abs(F[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) > best) {
                    best = abs(F[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                    pi = i;
                    pj = j;
                }
        if (best <= tol) break;
        std::swap(F[static_cast<std::size_t>(step)], F[static_cast<std::size_t>(pi)]);
        std::swap(g[static_cast<std::size_t>(step)], g[static_cast<std::size_t>(pi)]);
        for (auto& row : F)
            std::swap(row[static_cast<std::size_t>(step)], row[static_cast<std::size_t>(pj)]);
        std::swap(colmap[static_cast<std::size_t>(step)], colmap[static_cast<std::size_t>(pj)]);

        const R piv = F[static_cast<std::size_t>(step)][static_cast<std::size_t>(step)];
        for (int i = step + 1; i < m; ++i) {
            R f = F[static_cast<std::size_t>(i)][static_cast<std::size_t>(step)] / piv;
            if (f == R(0)) continue;
            for (int j = step; j < ncol; ++j)
                F[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * F[static_cast<std::size_t>(step)][static_cast<std::size_t>(j)];
            g[static_cast<std::size_t>(i)] -= f * g[static_cast<std::size_t>(step)];
        }
        ++rank;
    }

    R gnorm(0);
    for (const R& v : g)
        if (abs(v) > gnorm) gnorm = abs(v);
    for (int i = rank; i < m; ++i)
        if (abs(g[static_cast<std::size_t>(i)]) > std::max(norm, gnorm) * R(1e-9))
            throw Infeasible("positivity system has no solution");

    auto back_substitute = [&](const std::array<R, 6>& free_vals, const std::vector<R>& rhs) {
        std::array<R, 6> xp{};  // in permuted coordinates
        for (int j = rank; j < ncol; ++j)
            xp[static_cast<std::size_t>(j)] = free_vals[static_cast<std::size_t>(j)];
        for (int i = rank - 1; i >= 0; --i) {
            R acc = rhs[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < ncol; ++j)
                acc -= F[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                       xp[static_cast<std::size_t>(j)];
            xp[static_cast<std::size_t>(i)] =
                acc / F[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        }
        std::array<R, 6> x{};
        for (int j = 0; j < ncol; ++j)
            x[static_cast<std::size_t>(colmap[static_cast<std::size_t>(j)])] =
                xp[static_cast<std::size_t>(j)];
        return x;
    };

    SolutionSpace<R> sol;
    sol.rank = rank;
    std::array<R, 6> zeros{};
    sol.particular = back_substitute(zeros, g);

    std::vector<R> zero_rhs(static_cast<std::size_t>(m), R(0));
    for (int f = rank; f < ncol; ++f) {
        std::array<R, 6> fv{};
        fv[static_cast<std::size_t>(f)] = R(1);
        sol.nullspace.push_back(back_substitute(fv, zero_rhs));
    }

    // minimum-norm particular: subtract the nullspace projection
    const int k = static_cast<int>(sol.nullspace.size());
    if (k > 0) {
        std::vector<std::vector<R>> gram(static_cast<std::size_t>(k),
                                         std::vector<R>(static_cast<std::size_t>(k), R(0)));
        std::vector<R> rhs(static_cast<std::size_t>(k), R(0));
        for (int a = 0; a < k; ++a) {
            for (int b2 = 0; b2 < k; ++b2)
                for (int j = 0; j < ncol; ++j)
                    gram[static_cast<std::size_t>(a)][static_cast<std::size_t>(b2)] +=
                        sol.nullspace[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] *
                        sol.nullspace[static_cast<std::size_t>(b2)][static_cast<std::size_t>(j)];
            for (int j = 0; j < ncol; ++j)
                rhs[static_cast<std::size_t>(a)] +=
                    sol.nullspace[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] *
                    sol.particular[static_cast<std::size_t>(j)];
        }
        // small SPD solve by Gaussian elimination with partial pivoting
        for (int c = 0; c < k; ++c) {
            int p = c;
            for (int i = c + 1; i < k; ++i)
                if (abs(gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) >
                    abs(gram[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)]))
                    p = i;
            std::swap(gram[static_cast<std::size_t>(c)], gram[static_cast<std::size_t>(p)]);
            std::swap(rhs[static_cast<std::size_t>(c)], rhs[static_cast<std::size_t>(p)]);
            for (int i = c + 1; i < k; ++i) {
                R f = gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] /
                      gram[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
                for (int j = c; j < k; ++j)
                    gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                        f * gram[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
                rhs[static_cast<std::size_t>(i)] -= f * rhs[static_cast<std::size_t>(c)];
            }
        }
        std::vector<R> y(static_cast<std::size_t>(k), R(0));
        for (int i = k - 1; i >= 0; --i) {
            R acc = rhs[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                acc -= gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                       y[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] =
                acc / gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        }
        for (int a = 0; a < k; ++a)
            for (int j = 0; j < ncol; ++j)
                sol.particular[static_cast<std::size_t>(j)] -=
                    y[static_cast<std::size_t>(a)] *
                    sol.nullspace[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)];
    }
    return sol;
}

}  // namespace detail

template <class R>
SolutionSpace<R> solve_system(const PositivitySystem<R>& sys) {
    std::vector<std::array<R, 6>> F(sys.F.begin(), sys.F.end());
    std::vector<R> g(sys.g.begin(), sys.g.end());
    return detail::solve_rows<R>(std::move(F), std::move(g));
}

// Stacks B's components in the system's unknown order.
template <class R>
std::array<R, 6> stack_b(const PositivitySystem<R>& sys, const ComplexPoly<R>& B) {
    using C = complex_t<R>;
    const C b0 = B.coeff(0), b1 = B.coeff(1), b2 = B.coeff(2);
    if (sys.degree == 1)
        return {b2.real(), b2.imag(), b1.real(), b1.imag(), b0.real(), b0.imag()};
    return {b0.imag(), b0.real(), b1.imag(), b1.real(), b2.imag(), b2.real()};
}

template <class R>
R system_residual(const PositivitySystem<R>& sys, const std::array<R, 6>& x) {
    using std::abs;
    R worst(0);
    for (int i = 0; i < 5; ++i) {
        R acc = -sys.g[static_cast<std::size_t>(i)];
        for (int j = 0; j < 6; ++j)
            acc += sys.F[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                   x[static_cast<std::size_t>(j)];
        if (abs(acc) > worst) worst = abs(acc);
    }
    return worst;
}

template <class R>
bool membership_check(const PearsonPair<R>& pair, const PositivitySystem<R>& sys,
                      const R& tolerance = R(1e-10)) {
    if (pair.A.degree() != sys.degree) throw InvalidParameter("membership_check: degree mismatch");
    R scale(1);
    for (const R& v : stack_b(sys, pair.B)) {
        using std::abs;
        if (abs(v) > scale) scale = abs(v);
    }
    return system_residual(sys, stack_b(sys, pair.B)) <= tolerance * scale;
}

// The boundary condition ln w(2pi) - ln w(0) = int Re[(B - i z A')/A] dtheta = 0
// as a linear row over B's components (A without zeros on the circle).
template <class R>
struct BoundaryRow {
    std::array<R, 6> row{};
    R rhs{};
};

template <class R>
BoundaryRow<R> boundary_row(const PositivitySystem<R>& sys, const ComplexPoly<R>& A) {
    using C = complex_t<R>;
    const C I(0, 1);
    ComplexPoly<R> Ad = A.derivative();
    const R two_pi = R(2) * num_traits<R>::pi();

    {  // A must not vanish on the circle; inspect its roots directly
        using std::abs;
        using std::sqrt;
        std::vector<C> roots;
        if (A.degree() == 1) {
            roots.push_back(-A.coeff(0) / A.coeff(1));
        } else if (A.degree() == 2) {
            C p = A.coeff(1) / A.coeff(2), q = A.coeff(0) / A.coeff(2);
            C disc = sqrt(p * p - C(4) * q);
            roots.push_back((-p + disc) / C(2));
            roots.push_back((-p - disc) / C(2));
        }
        for (const C& root : roots)
            if (abs(cabs(root) - R(1)) < R(1e-6))
                throw GridOnSingularity("boundary_row: A has a root on the unit circle");
    }

    // component i of the system's unknown order contributes int Re[m_i(z)/A] dtheta
    auto monomial_of_component = [&](int comp) -> ComplexPoly<R> {
        int power;
        bool imag_part;
        if (sys.degree == 1) {  // (Re b2, Im b2, Re b1, Im b1, Re b0, Im b0)
            power = 2 - comp / 2;
            imag_part = (comp % 2) == 1;
        } else {  // (Im b0, Re b0, Im b1, Re b1, Im b2, Re b2)
            power = comp / 2;
            imag_part = (comp % 2) == 0;
        }
        return ComplexPoly<R>::monomial(power, imag_part ? I : C(1));
    };

    std::vector<complex_t<R>> vals;
    BoundaryRow<R> out;
    auto integrand = [&](const R& theta, std::vector<C>& v) {
        C z = unit_circle<R>(theta);
        C Az = A(z);
        for (int comp = 0; comp < 6; ++comp) {
            C m = monomial_of_component(comp)(z);
            v[static_cast<std::size_t>(comp)] = C((m / Az).real());
        }
        v[6] = C((I * z * Ad(z) / Az).real());
    };
    auto meta = trapezoid_periodic<R>(integrand, R(0), two_pi, 7, num_traits<R>::quad_target(),
                                      vals);
    if (!meta.converged) throw QuadratureFailure("boundary_row integral did not converge");
    for (int comp = 0; comp < 6; ++comp)
        out.row[static_cast<std::size_t>(comp)] = vals[static_cast<std::size_t>(comp)].real();
    out.rhs = vals[6].real();
    return out;
}

// Solves the 5x6 system together with extra affine rows (boundary condition).
template <class R>
SolutionSpace<R> solve_with_rows(const PositivitySystem<R>& sys,
                                 const std::vector<BoundaryRow<R>>& extra) {
    std::vector<std::array<R, 6>> F(sys.F.begin(), sys.F.end());
    std::vector<R> g(sys.g.begin(), sys.g.end());
    for (const auto& row : extra) {
        F.push_back(row.row);
        g.push_back(row.rhs);
    }
    return detail::solve_rows<R>(std::move(F), std::move(g));
}

// sup over an offset grid of |Im[(B - i z A')/A]| -- the realness the
// positivity system encodes.
template <class R>
R pearson_rhs_imag_sup(const ComplexPoly<R>& A, const ComplexPoly<R>& B, int grid_size) {
    using C = complex_t<R>;
    const C I(0, 1);
    ComplexPoly<R> Ad = A.derivative();
    const R two_pi = R(2) * num_traits<R>::pi();
    R sup(0);
    using std::abs;
    for (int j = 0; j < grid_size; ++j) {
        C z = unit_circle<R>((R(j) + R(0.5)) * two_pi / R(grid_size));
        C Az = A(z);
        if (cabs(Az) < R(1e-12)) throw GridOnSingularity("grid point at a zero of A");
        R im = ((B(z) - I * z * Ad(z)) / Az).imag();
        if (abs(im) > sup) sup = abs(im);
    }
    return sup;
}

// B(x) for a stacked unknown vector in the system's order.
template <class R>
ComplexPoly<R> unstack_b(const PositivitySystem<R>& sys, const std::array<R, 6>& x) {
    using C = complex_t<R>;
    if (sys.degree == 1)
        return ComplexPoly<R>{C(x[4], x[5]), C(x[2], x[3]), C(x[0], x[1])};
    return ComplexPoly<R>{C(x[1], x[0]), C(x[3], x[2]), C(x[5], x[4])};
}

}  // namespace opuc

#endif
