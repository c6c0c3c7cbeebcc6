#pragma once

#include <algorithm>
#include <cstddef>
#include <tuple>
#include <vector>

#include "exact_matrix.hpp"
#include "ring.hpp"

namespace polyjoin {

/// Column-major sparse integer matrix; each column holds (row, value) pairs
/// sorted by row with nonzero values.
struct SparseIntMat {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, BigInt>>> col;

    static SparseIntMat from_triplets(int rows, int cols,
                                      const std::vector<std::tuple<int, int, long long>>& trip) {
        SparseIntMat A;
        A.rows = rows;
        A.cols = cols;
        A.col.resize(cols);
        for (auto& [r, c, v] : trip)
            if (v != 0) A.col[c].emplace_back(r, BigInt(v));
        for (auto& c : A.col)
            std::sort(c.begin(), c.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        return A;
    }

    Mat<BigInt> to_dense() const {
        Mat<BigInt> D(rows, cols);
        for (int c = 0; c < cols; ++c)
            for (auto& [r, v] : col[c]) D(r, c) = v;
        return D;
    }
};

/// Exact rank and elementary divisors.
struct SnfSummary {
    int rank = 0;
    std::vector<BigInt> divisors; ///< entries > 1 only, in divisibility order

    bool operator==(const SnfSummary& o) const { return rank == o.rank && divisors == o.divisors; }
};

namespace detail {

/// dst = a * dst + c * src on sorted sparse columns.
template <typename V, typename MulAdd>
inline void linear_combine(std::vector<std::pair<int, V>>& dst,
                           const std::vector<std::pair<int, V>>& src, MulAdd&& combine) {
    std::vector<std::pair<int, V>> out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        int ri = i < dst.size() ? dst[i].first : INT32_MAX;
        int rj = j < src.size() ? src[j].first : INT32_MAX;
        int r = std::min(ri, rj);
        V v = combine(ri == r ? &dst[i].second : nullptr, rj == r ? &src[j].second : nullptr);
        if (ri == r) ++i;
        if (rj == r) ++j;
        if (!(v == V{})) out.emplace_back(r, std::move(v));
    }
    dst = std::move(out);
}

} // namespace detail

/**
 * Rank of a sparse integer matrix over the rationals, via fraction-free
 * column reduction against stored pivot columns (content-stripped to keep
 * entries small). Exact: no modular shortcuts.
 */
inline int rank_over_Q(const SparseIntMat& A) {
    std::vector<int> low_to_col(A.rows, -1);
    std::vector<std::vector<std::pair<int, BigInt>>> stored;
    int rank = 0;
    for (int c = 0; c < A.cols; ++c) {
        std::vector<std::pair<int, BigInt>> cur = A.col[c];
        while (!cur.empty()) {
            int low = cur.back().first;
            int j = low_to_col[low];
            if (j < 0) {
                low_to_col[low] = static_cast<int>(stored.size());
                stored.push_back(std::move(cur));
                ++rank;
                break;
            }
            const auto& pv = stored[j];
            BigInt a = pv.back().second, b = cur.back().second;
            BigInt g = boost::multiprecision::gcd(a, b);
            BigInt ca = a / g, cb = b / g;
            // cur = ca * cur - cb * pv   (kills the low entry, keeps rank)
            detail::linear_combine(cur, pv, [&](const BigInt* x, const BigInt* y) {
                BigInt v = 0;
                if (x) v += ca * *x;
                if (y) v -= cb * *y;
                return v;
            });
            if (!cur.empty()) {
                BigInt content = 0;
                for (auto& [r, v] : cur) (void)r, content = boost::multiprecision::gcd(content, v);
                if (content > 1)
                    for (auto& [r, v] : cur) (void)r, v /= content;
            }
        }
    }
    return rank;
}

/// Rank of a sparse integer matrix reduced mod p (column reduction).
inline int rank_mod_p(const SparseIntMat& A, std::uint64_t p) {
    FpOps f(p);
    std::vector<int> low_to_col(A.rows, -1);
    std::vector<std::vector<std::pair<int, std::uint64_t>>> stored;
    int rank = 0;
    for (int c = 0; c < A.cols; ++c) {
        std::vector<std::pair<int, std::uint64_t>> cur;
        for (auto& [r, v] : A.col[c]) {
            BigInt red = v % static_cast<long long>(p);
            long long rv = red.convert_to<long long>();
            if (rv < 0) rv += static_cast<long long>(p);
            if (rv) cur.emplace_back(r, static_cast<std::uint64_t>(rv));
        }
        while (!cur.empty()) {
            int low = cur.back().first;
            int j = low_to_col[low];
            if (j < 0) {
                low_to_col[low] = static_cast<int>(stored.size());
                stored.push_back(std::move(cur));
                ++rank;
                break;
            }
            const auto& pv = stored[j];
            std::uint64_t factor = f.mul(cur.back().second, f.inv(pv.back().second));
            detail::linear_combine(cur, pv, [&](const std::uint64_t* x, const std::uint64_t* y) {
                std::uint64_t v = x ? *x : 0;
                if (y) v = f.sub(v, f.mul(factor, *y));
                return v;
            });
        }
    }
    return rank;
}

/**
 * Exact Smith summary (rank + torsion divisors). Unit entries are eliminated
 * first with fill-aware pivoting (no coefficient growth); the surviving block
 * is handed to the dense big-integer Smith reduction with magnitude pivoting.
 */
inline SnfSummary snf_summary(SparseIntMat A) {
    SnfSummary out;
    std::vector<bool> row_done(A.rows, false), col_done(A.cols, false);
    std::vector<int> row_count(A.rows, 0);
    for (int c = 0; c < A.cols; ++c)
        for (auto& [r, v] : A.col[c]) (void)v, ++row_count[r];

    while (true) {
        int best_c = -1, best_r = -1;
        long long best_score = -1;
        for (int c = 0; c < A.cols && best_score != 0; ++c) {
            if (col_done[c]) continue;
            for (auto& [r, v] : A.col[c]) {
                if (row_done[r]) continue;
                if (v != 1 && v != -1) continue;
                long long score =
                    static_cast<long long>(A.col[c].size() - 1) * (row_count[r] - 1);
                if (best_score < 0 || score < best_score) {
                    best_score = score;
                    best_c = c;
                    best_r = r;
                }
                if (best_score == 0) break;
            }
        }
        if (best_c < 0) break;

        auto& pcol = A.col[best_c];
        pcol.erase(std::remove_if(pcol.begin(), pcol.end(),
                                  [&](const auto& e) { return row_done[e.first]; }),
                   pcol.end());
        BigInt pivot = 0;
        for (auto& [r, v] : pcol)
            if (r == best_r) pivot = v;

        for (int c = 0; c < A.cols; ++c) {
            if (c == best_c || col_done[c]) continue;
            auto& cc = A.col[c];
            BigInt entry = 0;
            for (auto& [r, v] : cc)
                if (r == best_r) { entry = v; break; }
            if (entry == 0) continue;
            for (auto& [r, v] : cc) (void)v, --row_count[r];
            BigInt factor = -entry * pivot; // pivot is +-1, so this is -entry/pivot
            detail::linear_combine(cc, pcol, [&](const BigInt* x, const BigInt* y) {
                BigInt v = 0;
                if (x) v += *x;
                if (y) v += factor * *y;
                return v;
            });
            cc.erase(std::remove_if(cc.begin(), cc.end(),
                                    [&](const auto& e) { return row_done[e.first]; }),
                     cc.end());
            for (auto& [r, v] : cc) (void)v, ++row_count[r];
        }
        for (auto& [r, v] : pcol) (void)v, --row_count[r];
        col_done[best_c] = true;
        row_done[best_r] = true;
        ++out.rank; // unit pivot: divisor 1
    }

    // Dense fallback for whatever is left.
    std::vector<int> live_rows, live_cols;
    std::vector<int> row_index(A.rows, -1);
    for (int c = 0; c < A.cols; ++c) {
        if (col_done[c]) continue;
        bool any = false;
        for (auto& [r, v] : A.col[c])
            if (!row_done[r] && v != 0) {
                any = true;
                if (row_index[r] < 0) {
                    row_index[r] = static_cast<int>(live_rows.size());
                    live_rows.push_back(r);
                }
            }
        if (any) live_cols.push_back(c);
    }
    if (!live_cols.empty()) {
        Mat<BigInt> dense(live_rows.size(), live_cols.size());
        for (std::size_t j = 0; j < live_cols.size(); ++j)
            for (auto& [r, v] : A.col[live_cols[j]])
                if (!row_done[r]) dense(row_index[r], j) = v;
        SmithTransforms s = smith_with_transforms(std::move(dense));
        out.rank += s.rank;
        for (const BigInt& d : s.divisors)
            if (d > 1) out.divisors.push_back(d);
    }
    return out;
}

} // namespace polyjoin
