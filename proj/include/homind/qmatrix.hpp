#pragma once

#include <cstddef>
#include <vector>

#include "homind/qpoly.hpp"
#include "homind/rational.hpp"

namespace homind {

// Dense rational matrix, row-major. Zero-dimensional shapes (0 x n, n x 0)
// are legal everywhere; they show up naturally as the transition matrices of
// the zero automaton and must flow through every operation below.
struct QMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Rational> a;

    QMatrix() = default;
    QMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}

    Rational& at(size_t r, size_t c) { return a[r * cols + c]; }
    const Rational& at(size_t r, size_t c) const { return a[r * cols + c]; }

    bool operator==(const QMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
    bool operator!=(const QMatrix& o) const { return !(*this == o); }

    bool is_square() const { return rows == cols; }
    bool is_zero() const;

    static QMatrix identity(size_t n);
};

QMatrix mat_add(const QMatrix& A, const QMatrix& B);
QMatrix mat_sub(const QMatrix& A, const QMatrix& B);
QMatrix mat_mul(const QMatrix& A, const QMatrix& B);
QMatrix mat_scale(const Rational& s, const QMatrix& A);
QMatrix mat_transpose(const QMatrix& A);
Rational mat_trace(const QMatrix& A);

// Kronecker product with row-major index pairing:
// (A kron B)[i*Br + r][j*Bc + c] = A[i][j] * B[r][c].
QMatrix kron(const QMatrix& A, const QMatrix& B);

// Block-diagonal [[A,0],[0,B]]; for vectors this is concatenation.
QMatrix direct_sum(const QMatrix& A, const QMatrix& B);

// Rank via fraction-free (Bareiss) elimination: rows are first scaled to
// integers, which leaves the rank unchanged and bounds intermediate growth.
size_t mat_rank(const QMatrix& A);

// Characteristic polynomial det(xI - A), monic of degree n.
// Default route is Faddeev-LeVerrier over exact rationals; integer matrices
// above a size threshold take a modular evaluate/interpolate route with CRT
// reconstruction (identical result, needed once matrices reach ~100 rows).
QPoly char_poly(const QMatrix& A);
QPoly char_poly_faddeev(const QMatrix& A);
// Requires all entries integral; exact via CRT over 31-bit primes.
QPoly char_poly_modular(const QMatrix& A);

// Companion matrix of a monic polynomial q (deg n >= 0): subdiagonal ones,
// last column -q_0..-q_{n-1}. char_poly(companion(q)) == q.
QMatrix companion(const QPoly& q);

// Power traces tr(A^1), ..., tr(A^m).
std::vector<Rational> power_traces(const QMatrix& A, size_t m);

// Newton's-identities criterion: square A, B of equal size n have equal
// characteristic polynomials iff tr(A^k) = tr(B^k) for k = 1..n.
bool newton_charpoly_equal(const QMatrix& A, const QMatrix& B);

bool mat_is_integral(const QMatrix& A);

}  // namespace homind
