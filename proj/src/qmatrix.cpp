#include "homind/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace homind {

bool QMatrix::is_zero() const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

QMatrix QMatrix::identity(size_t n) {
    QMatrix I(n, n);
    for (size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

static void check_same_shape(const QMatrix& A, const QMatrix& B, const char* op) {
    if (A.rows != B.rows || A.cols != B.cols)
        throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

QMatrix mat_add(const QMatrix& A, const QMatrix& B) {
    check_same_shape(A, B, "mat_add");
    QMatrix C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] += B.a[i];
    return C;
}

QMatrix mat_sub(const QMatrix& A, const QMatrix& B) {
    check_same_shape(A, B, "mat_sub");
    QMatrix C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] -= B.a[i];
    return C;
}

QMatrix mat_mul(const QMatrix& A, const QMatrix& B) {
    if (A.cols != B.rows) throw std::invalid_argument("mat_mul: inner dimension mismatch");
    QMatrix C(A.rows, B.cols);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t k = 0; k < A.cols; ++k) {
            const Rational& aik = A.at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < B.cols; ++j) {
                const Rational& bkj = B.at(k, j);
                if (bkj != 0) C.at(i, j) += aik * bkj;
            }
        }
    return C;
}

QMatrix mat_scale(const Rational& s, const QMatrix& A) {
    QMatrix C = A;
    for (auto& x : C.a) x *= s;
    return C;
}

QMatrix mat_transpose(const QMatrix& A) {
    QMatrix T(A.cols, A.rows);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

Rational mat_trace(const QMatrix& A) {
    if (!A.is_square()) throw std::invalid_argument("mat_trace: matrix not square");
    Rational t(0);
    for (size_t i = 0; i < A.rows; ++i) t += A.at(i, i);
    return t;
}

QMatrix kron(const QMatrix& A, const QMatrix& B) {
    QMatrix C(A.rows * B.rows, A.cols * B.cols);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t j = 0; j < A.cols; ++j) {
            const Rational& aij = A.at(i, j);
            if (aij == 0) continue;
            for (size_t r = 0; r < B.rows; ++r)
                for (size_t c = 0; c < B.cols; ++c) {
                    const Rational& brc = B.at(r, c);
                    if (brc != 0) C.at(i * B.rows + r, j * B.cols + c) = aij * brc;
                }
        }
    return C;
}

QMatrix direct_sum(const QMatrix& A, const QMatrix& B) {
    QMatrix C(A.rows + B.rows, A.cols + B.cols);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (size_t i = 0; i < B.rows; ++i)
        for (size_t j = 0; j < B.cols; ++j) C.at(A.rows + i, A.cols + j) = B.at(i, j);
    return C;
}

bool mat_is_integral(const QMatrix& A) {
    for (const auto& x : A.a)
        if (boost::multiprecision::denominator(x) != 1) return false;
    return true;
}

// ---------------------------------------------------------------------------
// rank

size_t mat_rank(const QMatrix& A) {
    const size_t m = A.rows, n = A.cols;
    if (m == 0 || n == 0) return 0;

    // scale each row to integers (rank-preserving)
    std::vector<std::vector<Integer>> M(m, std::vector<Integer>(n));
    for (size_t i = 0; i < m; ++i) {
        Integer l(1);
        for (size_t j = 0; j < n; ++j)
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(A.at(i, j)));
        for (size_t j = 0; j < n; ++j) {
            const Rational& x = A.at(i, j);
            M[i][j] = boost::multiprecision::numerator(x) *
                      (l / boost::multiprecision::denominator(x));
        }
    }

    size_t rank = 0;
    Integer prev(1);
    for (size_t col = 0; col < n && rank < m; ++col) {
        size_t piv = rank;
        while (piv < m && M[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(M[piv], M[rank]);
        const Integer p = M[rank][col];
        for (size_t i = rank + 1; i < m; ++i) {
            for (size_t j = col + 1; j < n; ++j)
                M[i][j] = (M[i][j] * p - M[i][col] * M[rank][j]) / prev;
            M[i][col] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// characteristic polynomial

QPoly char_poly_faddeev(const QMatrix& A) {
    if (!A.is_square()) throw std::invalid_argument("char_poly: matrix not square");
    const size_t n = A.rows;
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    if (n == 0) return QPoly(std::move(c));

    QMatrix M = A;  // M_1
    c[n - 1] = -mat_trace(M);
    for (size_t k = 2; k <= n; ++k) {
        for (size_t i = 0; i < n; ++i) M.at(i, i) += c[n - k + 1];
        M = mat_mul(A, M);
        c[n - k] = -mat_trace(M) / Rational(k);
    }
    return QPoly(std::move(c));
}

namespace {

// 31-bit primes for CRT; generated on demand by trial division.
std::vector<uint64_t> primes_for_bits(double bits) {
    std::vector<uint64_t> ps;
    double have = 0;
    for (uint64_t cand = (1u << 31) - 1; have <= bits + 1; --cand) {
        bool prime = cand > 1;
        for (uint64_t d = 2; d * d <= cand && prime; ++d)
            if (cand % d == 0) prime = false;
        if (prime) {
            ps.push_back(cand);
            have += 31.0;
        }
    }
    return ps;
}

// det(x I - A) mod p by evaluating the determinant at x = 0..n and
// interpolating; the result is monic of degree n so n+1 points suffice.
std::vector<uint64_t> charpoly_mod_p(const std::vector<std::vector<uint64_t>>& A, uint64_t p) {
    const size_t n = A.size();
    std::vector<uint64_t> xs(n + 1), ys(n + 1);
    for (size_t t = 0; t <= n; ++t) {
        uint64_t x = t % p;
        std::vector<std::vector<uint64_t>> M(n, std::vector<uint64_t>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                uint64_t v = (p - A[i][j]) % p;
                if (i == j) v = (v + x) % p;
                M[i][j] = v;
            }
        // gaussian elimination determinant
        uint64_t det = 1;
        bool zero = false;
        for (size_t col = 0; col < n && !zero; ++col) {
            size_t piv = col;
            while (piv < n && M[piv][col] == 0) ++piv;
            if (piv == n) {
                zero = true;
                break;
            }
            if (piv != col) {
                std::swap(M[piv], M[col]);
                det = p - det;
                if (det == p) det = 0;
            }
            det = (unsigned __int128)det * M[col][col] % p;
            // modular inverse of pivot via fermat
            uint64_t inv = 1, base = M[col][col], e = p - 2;
            while (e) {
                if (e & 1) inv = (unsigned __int128)inv * base % p;
                base = (unsigned __int128)base * base % p;
                e >>= 1;
            }
            for (size_t i = col + 1; i < n; ++i) {
                if (M[i][col] == 0) continue;
                uint64_t f = (unsigned __int128)M[i][col] * inv % p;
                for (size_t j = col; j < n; ++j) {
                    uint64_t sub = (unsigned __int128)f * M[col][j] % p;
                    M[i][j] = (M[i][j] + p - sub) % p;
                }
            }
        }
        xs[t] = x;
        ys[t] = zero ? 0 : det;
    }
    // Lagrange interpolation (Newton's divided differences, then expand)
    const size_t m = n + 1;
    std::vector<uint64_t> dd(ys);
    auto inv_mod = [p](uint64_t v) {
        uint64_t inv = 1, base = v % p, e = p - 2;
        while (e) {
            if (e & 1) inv = (unsigned __int128)inv * base % p;
            base = (unsigned __int128)base * base % p;
            e >>= 1;
        }
        return inv;
    };
    for (size_t k = 1; k < m; ++k)
        for (size_t i = m - 1; i >= k; --i) {
            uint64_t num = (dd[i] + p - dd[i - 1]) % p;
            uint64_t den = (xs[i] + p - xs[i - k]) % p;
            dd[i] = (unsigned __int128)num * inv_mod(den) % p;
            if (i == k) break;
        }
    // expand newton form dd[0] + dd[1](x-x0) + dd[2](x-x0)(x-x1) + ...
    std::vector<uint64_t> coeff(m, 0), basis(m, 0);
    basis[0] = 1;
    size_t basis_deg = 0;
    for (size_t k = 0; k < m; ++k) {
        for (size_t j = 0; j <= basis_deg; ++j)
            coeff[j] = (coeff[j] + (unsigned __int128)dd[k] * basis[j]) % p;
        if (k + 1 < m) {
            // basis *= (x - xs[k]); descending order keeps old values intact
            uint64_t neg = (p - xs[k]) % p;
            basis[basis_deg + 1] = basis[basis_deg];
            for (size_t j = basis_deg + 1; j-- > 0;) {
                uint64_t shifted = j > 0 ? basis[j - 1] : 0;
                basis[j] = (shifted + (unsigned __int128)basis[j] * neg) % p;
            }
            ++basis_deg;
        }
    }
    return coeff;
}

}  // namespace

QPoly char_poly_modular(const QMatrix& A) {
    if (!A.is_square()) throw std::invalid_argument("char_poly: matrix not square");
    if (!mat_is_integral(A)) throw std::invalid_argument("char_poly_modular: entries not integral");
    const size_t n = A.rows;
    if (n == 0) return QPoly({Rational(1)});

    // Hadamard-style bound on |coefficients| of det(xI - A):
    // each coefficient is a sum of C(n,k) k x k principal minors, so
    // log2|c| <= log2 C(n,k) + (k/2) log2(k * maxentry^2) <= n + (n/2)log2(n maxsq).
    Integer maxabs(1);
    for (const auto& x : A.a) {
        Integer v = boost::multiprecision::numerator(x);
        if (v < 0) v = -v;
        if (v > maxabs) maxabs = v;
    }
    double logmax = 0;
    for (Integer t = maxabs; t > 1; t >>= 1) logmax += 1.0;
    double bits = n + (n / 2.0) * (std::max(1.0, std::log2((double)n)) + 2 * logmax + 1) + 4;

    auto primes = primes_for_bits(bits);
    std::vector<std::vector<uint64_t>> coeffs_mod;
    for (uint64_t p : primes) {
        std::vector<std::vector<uint64_t>> M(n, std::vector<uint64_t>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Integer v = boost::multiprecision::numerator(A.at(i, j)) % (long long)p;
                if (v < 0) v += (long long)p;
                M[i][j] = v.convert_to<uint64_t>();
            }
        coeffs_mod.push_back(charpoly_mod_p(M, p));
    }

    // CRT combine, then centre into (-P/2, P/2]
    Integer P(1);
    for (uint64_t p : primes) P *= p;
    std::vector<Rational> out(n + 1);
    for (size_t k = 0; k <= n; ++k) {
        Integer acc(0), mod(1);
        for (size_t t = 0; t < primes.size(); ++t) {
            Integer p(primes[t]);
            Integer r(coeffs_mod[t][k]);
            // solve acc' = acc (mod mod), acc' = r (mod p)
            Integer diff = (r - acc) % p;
            if (diff < 0) diff += p;
            // inverse of mod modulo p
            Integer minv = boost::multiprecision::powm(mod % p, p - 2, p);
            acc += mod * ((diff * minv) % p);
            mod *= p;
        }
        if (acc * 2 > P) acc -= P;
        out[k] = Rational(acc);
    }
    return QPoly(std::move(out));
}

QPoly char_poly(const QMatrix& A) {
    if (A.rows >= 24 && mat_is_integral(A)) return char_poly_modular(A);
    return char_poly_faddeev(A);
}

QMatrix companion(const QPoly& q) {
    if (!q.is_monic()) throw std::invalid_argument("companion: polynomial must be monic");
    const size_t n = static_cast<size_t>(q.degree());
    QMatrix C(n, n);
    for (size_t i = 0; i + 1 < n; ++i) C.at(i + 1, i) = 1;
    for (size_t i = 0; i < n; ++i) C.at(i, n - 1) = -q.c[i];
    return C;
}

std::vector<Rational> power_traces(const QMatrix& A, size_t m) {
    if (!A.is_square()) throw std::invalid_argument("power_traces: matrix not square");
    std::vector<Rational> out;
    out.reserve(m);
    QMatrix P = A;
    for (size_t k = 1; k <= m; ++k) {
        if (k > 1) P = mat_mul(P, A);
        out.push_back(mat_trace(P));
    }
    return out;
}

bool newton_charpoly_equal(const QMatrix& A, const QMatrix& B) {
    if (!A.is_square() || !B.is_square())
        throw std::invalid_argument("newton_charpoly_equal: matrices not square");
    if (A.rows != B.rows)
        throw std::invalid_argument("newton_charpoly_equal: sizes differ (pad first)");
    return power_traces(A, A.rows) == power_traces(B, B.rows);
}

}  // namespace homind
