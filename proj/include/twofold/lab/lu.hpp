/* lu.hpp
 * Dense LU solver with row pivoting, generic over the lab number kinds.
 */
#pragma once
#include "twofold/lab/kinds.hpp"

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace twofold::lab {

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Square row-major matrix.
template <typename N>
class Matrix {
public:
    explicit Matrix(std::size_t n) : n_(n), a_(n * n, Num<N>::from_double(0)) {}
    std::size_t size() const { return n_; }
    N& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const N& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

private:
    std::size_t n_;
    std::vector<N> a_;
};

/**
 * Solve A x = f. Factorizes A = P L U with partial pivoting, then forward
 * and back substitution. The pivot is the first row with the largest |a_ik|
 * under the kind's own ordering (twofolds compare value lanes only, so the
 * pivot sequence matches the plain run). Throws SingularMatrixError when
 * the best pivot is zero, std::invalid_argument on a size mismatch.
 */
template <typename N>
std::vector<N> lu_solve(Matrix<N> a, const std::vector<N>& f) {
    using K = Num<N>;
    const std::size_t n = a.size();
    if (f.size() != n) throw std::invalid_argument("lu_solve: right-hand side has wrong length");

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        N best = K::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const N c = K::abs(a(i, k));
            if (K::less(best, c)) {
                best = c;
                p = i;
            }
        }
        if (K::is_zero(best))
            throw SingularMatrixError("lu_solve: zero pivot in column " + std::to_string(k + 1));
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            std::swap(perm[p], perm[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const N m = a(i, k) / a(k, k);
            a(i, k) = m;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = a(i, j) - m * a(k, j);
        }
    }

    std::vector<N> y(n, K::from_double(0));
    for (std::size_t i = 0; i < n; ++i) {
        N s = f[perm[i]];
        for (std::size_t j = 0; j < i; ++j) s = s - a(i, j) * y[j];
        y[i] = s;
    }
    std::vector<N> x(n, K::from_double(0));
    for (std::size_t i = n; i-- > 0;) {
        N s = y[i];
        for (std::size_t j = i + 1; j < n; ++j) s = s - a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

}  // namespace twofold::lab
