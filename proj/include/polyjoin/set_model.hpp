#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "identities.hpp"
#include "simplicial_complex.hpp"

namespace polyjoin {

constexpr std::size_t kDefaultTupleCap = 1'000'000;

/// Finite set pair (X, A) with A a subset of X; elements are atom ids.
struct FiniteSetPair {
    std::vector<int> X;
    std::vector<int> A;

    FiniteSetPair() = default;
    FiniteSetPair(std::vector<int> x, std::vector<int> a) : X(std::move(x)), A(std::move(a)) {
        std::sort(X.begin(), X.end());
        X.erase(std::unique(X.begin(), X.end()), X.end());
        std::sort(A.begin(), A.end());
        A.erase(std::unique(A.begin(), A.end()), A.end());
        for (int e : A)
            if (!std::binary_search(X.begin(), X.end(), e))
                throw invalid_input_error("A must be a subset of X");
    }

    bool in_A(int e) const { return std::binary_search(A.begin(), A.end(), e); }
    bool in_X(int e) const { return std::binary_search(X.begin(), X.end(), e); }

    /// Complement pair (X, X minus A).
    FiniteSetPair complement() const {
        std::vector<int> c;
        for (int e : X)
            if (!in_A(e)) c.push_back(e);
        return FiniteSetPair(X, c);
    }
};

/// Explicit set of m-tuples of atoms.
struct TupleSet {
    int arity = 0;
    std::set<std::vector<int>> tuples;

    bool operator==(const TupleSet& o) const { return arity == o.arity && tuples == o.tuples; }
};

namespace detail {

/// Calls fn on every tuple of the full product of the X components.
template <typename Fn>
inline void for_each_product_tuple(const std::vector<FiniteSetPair>& pairs, std::size_t cap, Fn&& fn) {
    std::size_t total = 1;
    for (const auto& p : pairs) {
        total *= p.X.size();
        if (total > cap) throw resource_limit_error("tuple enumeration exceeds cap");
        if (total == 0) return;
    }
    const int m = static_cast<int>(pairs.size());
    std::vector<int> idx(m, 0);
    std::vector<int> tuple(m);
    while (true) {
        for (int k = 0; k < m; ++k) tuple[k] = pairs[k].X[idx[k]];
        fn(tuple);
        int k = m - 1;
        while (k >= 0) {
            if (++idx[k] < static_cast<int>(pairs[k].X.size())) break;
            idx[k] = 0;
            --k;
        }
        if (k < 0) break;
    }
}

} // namespace detail

/// Full product of the X components as a tuple set.
inline TupleSet full_product(const std::vector<FiniteSetPair>& pairs, std::size_t cap = kDefaultTupleCap) {
    TupleSet out;
    out.arity = static_cast<int>(pairs.size());
    detail::for_each_product_tuple(pairs, cap, [&](const std::vector<int>& t) { out.tuples.insert(t); });
    return out;
}

/**
 * Polyhedral product of finite set pairs over K: the union over faces tau of K
 * of the products whose k-th factor is X_k for k in tau and A_k otherwise.
 * A tuple belongs to the union iff its deviation set { k : t_k not in A_k }
 * is a face of K; the void complex yields the empty set.
 */
inline TupleSet pp_points(const SimplicialComplex& K, const std::vector<FiniteSetPair>& pairs,
                          std::size_t cap = kDefaultTupleCap) {
    if (static_cast<int>(pairs.size()) != K.ground().size())
        throw invalid_input_error("pp_points needs one pair per ground vertex of K");
    TupleSet out;
    out.arity = static_cast<int>(pairs.size());
    if (K.is_void()) return out;
    detail::for_each_product_tuple(pairs, cap, [&](const std::vector<int>& t) {
        Mask dev = 0;
        for (std::size_t k = 0; k < t.size(); ++k)
            if (!pairs[k].in_A(t[k])) dev |= bit(static_cast<int>(k));
        if (K.contains(dev)) out.tuples.insert(t);
    });
    return out;
}

/**
 * Complement law: the complement of the polyhedral product inside the full
 * product equals the polyhedral product of the dual complex with complemented
 * pairs. Both sides are enumerated independently.
 */
inline CheckResult verify_complement(const SimplicialComplex& K, const std::vector<FiniteSetPair>& pairs,
                                     std::size_t cap = kDefaultTupleCap) {
    TupleSet inside = pp_points(K, pairs, cap);
    TupleSet full = full_product(pairs, cap);
    TupleSet lhs;
    lhs.arity = full.arity;
    for (const auto& t : full.tuples)
        if (!inside.tuples.count(t)) lhs.tuples.insert(t);

    std::vector<FiniteSetPair> comp;
    comp.reserve(pairs.size());
    for (const auto& p : pairs) comp.push_back(p.complement());
    TupleSet rhs = pp_points(dual(K), comp, cap);
    if (!(lhs == rhs))
        return CheckResult::fail("complement of polyhedral product differs from dual product");
    return CheckResult::ok();
}

/**
 * Substitution law: composing polyhedral products (outer complex K on m
 * vertices, simplicial pairs on the blocks, finite set pairs on the block
 * vertices) agrees with the single polyhedral product over the polyhedral
 * join. The left side is enumerated from the definition, the right side goes
 * through polyhedral_join.
 */
inline CheckResult verify_substitution(const SimplicialComplex& K,
                                       const std::vector<SimplicialPair>& pairs,
                                       const std::vector<FiniteSetPair>& inner,
                                       std::size_t cap = kDefaultTupleCap) {
    if (static_cast<int>(pairs.size()) != K.ground().size())
        throw invalid_input_error("substitution needs one simplicial pair per vertex of K");
    const int m = K.ground().size();
    std::vector<int> offset(m + 1, 0);
    for (int k = 0; k < m; ++k) offset[k + 1] = offset[k] + pairs[k].total.ground().size();
    if (offset[m] != static_cast<int>(inner.size()))
        throw invalid_input_error("substitution needs one finite pair per block vertex");

    // Left side: t is in Z(K; Z(X_k), Z(A_k)) iff every block lands in Z(X_k)
    // and the set of blocks missing Z(A_k) is a face of K.
    std::vector<TupleSet> Y(m), B(m);
    for (int k = 0; k < m; ++k) {
        std::vector<FiniteSetPair> blk(inner.begin() + offset[k], inner.begin() + offset[k + 1]);
        Y[k] = pp_points(pairs[k].total, blk, cap);
        B[k] = pp_points(pairs[k].sub, blk, cap);
    }
    TupleSet lhs;
    lhs.arity = offset[m];
    if (!K.is_void()) {
        detail::for_each_product_tuple(inner, cap, [&](const std::vector<int>& t) {
            Mask dev = 0;
            for (int k = 0; k < m; ++k) {
                std::vector<int> block(t.begin() + offset[k], t.begin() + offset[k + 1]);
                if (!Y[k].tuples.count(block)) return;
                if (!B[k].tuples.count(block)) dev |= bit(k);
            }
            if (K.contains(dev)) lhs.tuples.insert(t);
        });
    }

    TupleSet rhs = pp_points(polyhedral_join(K, pairs), inner, cap);
    if (!(lhs == rhs))
        return CheckResult::fail("substitution law failed");
    return CheckResult::ok();
}

/// Result of factoring out the degenerate (A_k empty) coordinates.
struct Normalization {
    SimplicialComplex reduced;              ///< link of K at the degenerate set
    std::vector<FiniteSetPair> pairs;       ///< pairs at the remaining coordinates
    std::vector<int> factored_positions;    ///< 0-based positions with A_k empty
    std::vector<std::vector<int>> factored_sets; ///< the full factors X_k at those positions
};

/**
 * Factors the polyhedral product along the coordinates whose A_k is empty:
 * with S that coordinate set, the product equals Z(link_K S; remaining pairs)
 * times the product of the X_k for k in S (the empty set when S is not a
 * face). The reproduction is asserted tuplewise.
 */
inline Normalization normalize(const SimplicialComplex& K, const std::vector<FiniteSetPair>& pairs,
                               std::size_t cap = kDefaultTupleCap) {
    if (static_cast<int>(pairs.size()) != K.ground().size())
        throw invalid_input_error("normalize needs one pair per ground vertex of K");
    const int m = K.ground().size();
    Normalization out;
    Mask S = 0;
    for (int k = 0; k < m; ++k) {
        if (pairs[k].A.empty()) {
            S |= bit(k);
            out.factored_positions.push_back(k);
            out.factored_sets.push_back(pairs[k].X);
        } else {
            out.pairs.push_back(pairs[k]);
        }
    }
    out.reduced = link(K, S); // void complexes restrict to void links

    // Reproduction: membership in the original product is equivalent to the
    // non-factored projection lying in the reduced product.
    TupleSet original = pp_points(K, pairs, cap);
    TupleSet reduced_pts = pp_points(out.reduced, out.pairs, cap);
    CheckResult check = CheckResult::ok();
    detail::for_each_product_tuple(pairs, cap, [&](const std::vector<int>& t) {
        std::vector<int> proj;
        for (int k = 0; k < m; ++k)
            if (!(S & bit(k))) proj.push_back(t[k]);
        bool in_orig = original.tuples.count(t) > 0;
        bool in_reduced = reduced_pts.tuples.count(proj) > 0;
        if (in_orig != in_reduced && check.pass)
            check = CheckResult::fail("normalization does not reproduce the product");
    });
    if (!check.pass) throw invalid_input_error(check.detail);
    return out;
}

} // namespace polyjoin
