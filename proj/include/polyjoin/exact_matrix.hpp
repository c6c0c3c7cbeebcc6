#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ring.hpp"

namespace polyjoin {

/// Dense row-major matrix over an exact element type.
template <typename T>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    template <typename U>
    Mat<U> cast() const {
        Mat<U> m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                m(i, j) = static_cast<U>((*this)(i, j));
        return m;
    }

    Mat mul(const Mat& o) const {
        Mat out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& v = (*this)(i, k);
                if (v == T{}) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    out(i, j) += v * o(k, j);
            }
        return out;
    }

    bool is_zero() const {
        for (const T& v : a_)
            if (!(v == T{})) return false;
        return true;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

// ---------------------------------------------------------------------------
// Field abstractions for exact elimination.

/// Rational field operations.
struct QOps {
    using Elem = Rational;
    Elem from_int(long long v) const { return Rational(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return Rational(1) / a; }
    bool is_zero(const Elem& a) const { return a == 0; }
};

/// Prime field operations; elements are canonical residues in [0, p).
struct FpOps {
    std::uint64_t p = 2;
    using Elem = std::uint64_t;

    explicit FpOps(std::uint64_t prime = 2) : p(prime) {}

    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return static_cast<Elem>(r);
    }
    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p ? s - p : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
    }
    Elem neg(Elem a) const { return a ? p - a : 0; }
    Elem inv(Elem a) const {
        // extended Euclid
        long long t = 0, nt = 1;
        long long r = static_cast<long long>(p), nr = static_cast<long long>(a % p);
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (r != 1) throw invalid_input_error("not invertible mod p");
        if (t < 0) t += static_cast<long long>(p);
        return static_cast<Elem>(t);
    }
    bool is_zero(Elem a) const { return a % p == 0; }
};

/// Row echelon reduction over a field; returns pivot column indices.
/// The matrix is reduced in place to (non-normalized) row echelon form.
template <typename F>
inline std::vector<std::size_t> echelon(const F& f, Mat<typename F::Elem>& A) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < A.cols() && row < A.rows(); ++col) {
        std::size_t sel = row;
        while (sel < A.rows() && f.is_zero(A(sel, col))) ++sel;
        if (sel == A.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A(row, j), A(sel, j));
        typename F::Elem piv_inv = f.inv(A(row, col));
        for (std::size_t i = 0; i < A.rows(); ++i) {
            if (i == row || f.is_zero(A(i, col))) continue;
            typename F::Elem factor = f.mul(A(i, col), piv_inv);
            for (std::size_t j = col; j < A.cols(); ++j)
                A(i, j) = f.sub(A(i, j), f.mul(factor, A(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <typename F>
inline std::size_t field_rank(const F& f, Mat<typename F::Elem> A) {
    return echelon(f, A).size();
}

/// Basis of the kernel, one column per free column, deterministic
/// (pivot choice scans columns left to right).
template <typename F>
inline Mat<typename F::Elem> kernel_basis(const F& f, Mat<typename F::Elem> A) {
    const std::size_t n = A.cols();
    std::vector<std::size_t> pivots = echelon(f, A);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Mat<typename F::Elem> K(n, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t fc = free_cols[j];
        K(fc, j) = f.from_int(1);
        // back-substitute pivot rows
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            std::size_t pc = pivots[r];
            if (f.is_zero(A(r, fc))) continue;
            K(pc, j) = f.neg(f.mul(A(r, fc), f.inv(A(r, pc))));
        }
    }
    return K;
}

/// Solves A x = b over a field; returns std::nullopt when inconsistent.
template <typename F>
inline std::optional<std::vector<typename F::Elem>> field_solve(const F& f, Mat<typename F::Elem> A,
                                                                std::vector<typename F::Elem> b) {
    const std::size_t n = A.cols();
    Mat<typename F::Elem> Ab(A.rows(), n + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) Ab(i, j) = A(i, j);
        Ab(i, n) = b[i];
    }
    std::vector<std::size_t> pivots = echelon(f, Ab);
    for (std::size_t c : pivots)
        if (c == n) return std::nullopt; // pivot in the constant column
    std::vector<typename F::Elem> x(n, f.from_int(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = f.mul(Ab(r, n), f.inv(Ab(r, pivots[r])));
    return x;
}

// ---------------------------------------------------------------------------
// Dense Smith normal form with unimodular transforms (small matrices).

/// D = U * A * V with U, V unimodular; diagonal entries of D are the
/// elementary divisors (nonnegative, each dividing the next).
struct SmithTransforms {
    Mat<BigInt> D, U, V;
    int rank = 0;
    std::vector<BigInt> divisors; ///< all nonzero diagonal entries, in chain order
};

namespace detail {

inline void smith_fix_chain(std::vector<BigInt>& d) {
    // pairwise gcd/lcm passes until each entry divides the next
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            if (d[i + 1] % d[i] == 0) continue;
            BigInt g = boost::multiprecision::gcd(d[i], d[i + 1]);
            BigInt l = d[i] / g * d[i + 1];
            d[i] = g;
            d[i + 1] = l;
            changed = true;
        }
    }
}

} // namespace detail

inline SmithTransforms smith_with_transforms(Mat<BigInt> A) {
    const std::size_t m = A.rows(), n = A.cols();
    SmithTransforms out;
    out.U = Mat<BigInt>::identity(m);
    out.V = Mat<BigInt>::identity(n);

    auto row_op = [&](std::size_t i, std::size_t j, const BigInt& c) {
        // row_i -= c * row_j, mirrored on U
        for (std::size_t k = 0; k < n; ++k) A(i, k) -= c * A(j, k);
        for (std::size_t k = 0; k < m; ++k) out.U(i, k) -= c * out.U(j, k);
    };
    auto col_op = [&](std::size_t i, std::size_t j, const BigInt& c) {
        // col_i -= c * col_j, mirrored on V
        for (std::size_t k = 0; k < m; ++k) A(k, i) -= c * A(k, j);
        for (std::size_t k = 0; k < n; ++k) out.V(k, i) -= c * out.V(k, j);
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n; ++k) std::swap(A(i, k), A(j, k));
        for (std::size_t k = 0; k < m; ++k) std::swap(out.U(i, k), out.U(j, k));
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < m; ++k) std::swap(A(k, i), A(k, j));
        for (std::size_t k = 0; k < n; ++k) std::swap(out.V(k, i), out.V(k, j));
    };
    auto row_negate = [&](std::size_t i) {
        for (std::size_t k = 0; k < n; ++k) A(i, k) = -A(i, k);
        for (std::size_t k = 0; k < m; ++k) out.U(i, k) = -out.U(i, k);
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        // pick the nonzero entry of smallest magnitude in the trailing block
        std::size_t pi = t, pj = t;
        BigInt best = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (A(i, j) == 0) continue;
                BigInt mag = abs(A(i, j));
                if (best == 0 || mag < best) { best = mag; pi = i; pj = j; }
            }
        if (best == 0) break;
        row_swap(t, pi);
        col_swap(t, pj);
        if (A(t, t) < 0) row_negate(t);

        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
            if (A(i, t) == 0) continue;
            BigInt q = A(i, t) / A(t, t); // floor toward zero is fine: remainder shrinks
            row_op(i, t, q);
            if (A(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (A(t, j) == 0) continue;
            BigInt q = A(t, j) / A(t, t);
            col_op(j, t, q);
            if (A(t, j) != 0) clean = false;
        }
        if (!clean) continue; // smaller remainders exist; re-pivot

        // ensure the pivot divides the rest of the block
        bool divides = true;
        for (std::size_t i = t + 1; i < m && divides; ++i)
            for (std::size_t j = t + 1; j < n; ++j)
                if (A(i, j) % A(t, t) != 0) {
                    row_op(t, i, BigInt(-1)); // add row i to row t, creating a smaller remainder
                    divides = false;
                    break;
                }
        if (!divides) continue;
        ++t;
    }

    out.rank = static_cast<int>(t);
    std::vector<BigInt> diag;
    for (std::size_t i = 0; i < t; ++i) diag.push_back(A(i, i));
    if (!diag.empty()) detail::smith_fix_chain(diag);
    for (std::size_t i = 0; i < t; ++i) A(i, i) = diag[i];
    out.divisors = diag;
    out.D = std::move(A);
    return out;
}

/// Divisors greater than one, in divisibility order.
inline std::vector<BigInt> torsion_divisors(const SmithTransforms& s) {
    std::vector<BigInt> out;
    for (const BigInt& d : s.divisors)
        if (d > 1) out.push_back(d);
    return out;
}

} // namespace polyjoin
