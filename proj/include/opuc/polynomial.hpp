// Dense complex polynomials c0 + c1 z + ... + cd z^d.  Degrees stay small
// (a few dozen), so the quadratic algorithms below are the right tool.
#ifndef OPUC_POLYNOMIAL_HPP
#define OPUC_POLYNOMIAL_HPP

#include <initializer_list>
#include <vector>

#include "opuc/numeric.hpp"

namespace opuc {

template <class R>
class ComplexPoly {
public:
    using C = complex_t<R>;

    ComplexPoly() : c_{C(0)} {}
    ComplexPoly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }
    explicit ComplexPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

    static ComplexPoly constant(C v) { return ComplexPoly{v}; }

    // c * z^k
    static ComplexPoly monomial(int k, C c = C(1)) {
        std::vector<C> v(static_cast<std::size_t>(k) + 1, C(0));
        v.back() = c;
        return ComplexPoly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<C>& coeffs() const { return c_; }

    C coeff(int k) const {
        if (k < 0 || k > degree()) return C(0);
        return c_[static_cast<std::size_t>(k)];
    }

    bool is_zero() const { return c_.size() == 1 && opuc::is_zero<R>(c_[0]); }

    C operator()(const C& z) const {
        C acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
        return acc;
    }

    ComplexPoly derivative() const {
        if (degree() == 0) return ComplexPoly();
        std::vector<C> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = C(R(k)) * c_[k];
        return ComplexPoly(std::move(d));
    }

    // Phi*(z) = z^n conj(Phi(1/conj(z))): coefficient k becomes conj(c_{n-k})
    ComplexPoly reciprocal(int n) const {
        if (degree() > n)
            throw DegreeMismatch("reciprocal: degree " + std::to_string(degree()) +
                                 " exceeds n = " + std::to_string(n));
        std::vector<C> v(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) v[static_cast<std::size_t>(k)] = cconj(coeff(n - k));
        return ComplexPoly(std::move(v));
    }

    ComplexPoly shift_z(int k) const {  // multiply by z^k
        if (is_zero()) return ComplexPoly();
        std::vector<C> v(c_.size() + static_cast<std::size_t>(k), C(0));
        for (std::size_t j = 0; j < c_.size(); ++j) v[j + static_cast<std::size_t>(k)] = c_[j];
        return ComplexPoly(std::move(v));
    }

    friend ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) {
        std::vector<C> v(std::max(a.c_.size(), b.c_.size()), C(0));
        for (std::size_t k = 0; k < v.size(); ++k)
            v[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
        return ComplexPoly(std::move(v));
    }

    friend ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) {
        std::vector<C> v(std::max(a.c_.size(), b.c_.size()), C(0));
        for (std::size_t k = 0; k < v.size(); ++k)
            v[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
        return ComplexPoly(std::move(v));
    }

    friend ComplexPoly operator*(const C& s, const ComplexPoly& p) {
        std::vector<C> v = p.c_;
        for (auto& x : v) x *= s;
        return ComplexPoly(std::move(v));
    }

    friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
        if (a.is_zero() || b.is_zero()) return ComplexPoly();
        std::vector<C> v(a.c_.size() + b.c_.size() - 1, C(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return ComplexPoly(std::move(v));
    }

    friend bool operator==(const ComplexPoly& a, const ComplexPoly& b) {
        return a.c_ == b.c_;
    }

private:
    void trim() {
        if (c_.empty()) c_.push_back(C(0));
        while (c_.size() > 1 && opuc::is_zero<R>(c_.back())) c_.pop_back();
    }

    std::vector<C> c_;
};

}  // namespace opuc

#endif
