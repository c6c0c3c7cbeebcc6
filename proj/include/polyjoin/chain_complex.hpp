#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ring.hpp"
#include "simplicial_complex.hpp"
#include "sparse_linalg.hpp"

namespace polyjoin {

/// Graded ranks with optional torsion divisors per degree; zero entries are
/// never stored, so map equality is semantic equality.
struct GradedRanks {
    std::map<int, long long> rank;
    std::map<int, std::vector<BigInt>> torsion;

    void add_rank(int degree, long long r) {
        if (r == 0) return;
        auto it = rank.find(degree);
        if (it == rank.end()) rank[degree] = r;
        else if ((it->second += r) == 0) rank.erase(it);
    }

    void add_torsion(int degree, const BigInt& divisor, long long copies = 1) {
        if (divisor <= 1 || copies == 0) return;
        auto& v = torsion[degree];
        for (long long i = 0; i < copies; ++i) v.push_back(divisor);
        // canonical invariant-factor chain, so multiset equality is group equality
        detail::smith_fix_chain(v);
        v.erase(std::remove_if(v.begin(), v.end(), [](const BigInt& d) { return d <= 1; }), v.end());
    }

    long long rank_at(int degree) const {
        auto it = rank.find(degree);
        return it == rank.end() ? 0 : it->second;
    }

    const std::vector<BigInt>& torsion_at(int degree) const {
        static const std::vector<BigInt> none;
        auto it = torsion.find(degree);
        return it == torsion.end() ? none : it->second;
    }

    bool is_zero() const { return rank.empty() && torsion.empty(); }

    /// Same ranks with every degree shifted by s.
    GradedRanks shifted(int s) const {
        GradedRanks out;
        for (auto& [d, r] : rank) out.rank[d + s] = r;
        for (auto& [d, t] : torsion) out.torsion[d + s] = t;
        return out;
    }

    bool operator==(const GradedRanks& o) const { return rank == o.rank && torsion == o.torsion; }
    bool operator!=(const GradedRanks& o) const { return !(*this == o); }

    std::string str() const {
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (auto& [d, r] : rank) {
            os << (first ? "" : ", ") << d << ":" << r;
            first = false;
        }
        for (auto& [d, t] : torsion) {
            os << (first ? "" : ", ") << d << ":torsion[";
            first = false;
            for (std::size_t i = 0; i < t.size(); ++i) os << (i ? " " : "") << t[i];
            os << "]";
        }
        os << "}";
        return os.str();
    }
};

/// Degreewise sum (direct sum of graded groups).
inline GradedRanks graded_sum(const GradedRanks& a, const GradedRanks& b) {
    GradedRanks out = a;
    for (auto& [d, r] : b.rank) out.add_rank(d, r);
    for (auto& [d, t] : b.torsion)
        for (const BigInt& v : t) out.add_torsion(d, v);
    return out;
}

/**
 * Graded tensor product of ranks. Free parts convolve; a torsion divisor
 * tensored with a free summand of rank r contributes r copies of itself.
 * (Tor terms are intentionally absent: callers invoke this only when one side
 * is free, which the certified comparison paths guarantee.)
 */
inline GradedRanks graded_tensor(const GradedRanks& a, const GradedRanks& b) {
    GradedRanks out;
    for (auto& [da, ra] : a.rank)
        for (auto& [db, rb] : b.rank) out.add_rank(da + db, ra * rb);
    for (auto& [da, ta] : a.torsion)
        for (const BigInt& v : ta)
            for (auto& [db, rb] : b.rank) out.add_torsion(da + db, v, rb);
    for (auto& [db, tb] : b.torsion)
        for (const BigInt& v : tb)
            for (auto& [da, ra] : a.rank) out.add_torsion(da + db, v, ra);
    return out;
}

/**
 * Chain complex with explicit, ordered, labeled bases. Degrees run from
 * min_degree upward; boundary(i) maps degree min_degree + i to the degree
 * below (the lowest boundary matrix has zero rows). All boundary entries are
 * integers; the ring tag decides how homology interprets them.
 */
class BasedChainComplex {
public:
    BasedChainComplex() = default;

    BasedChainComplex(RingSpec ring, int min_degree, std::vector<std::vector<std::string>> bases,
                      std::vector<Mat<long long>> boundaries)
        : ring_(ring), min_degree_(min_degree), bases_(std::move(bases)),
          boundaries_(std::move(boundaries)) {
        validate();
    }

    static BasedChainComplex zero(RingSpec ring) { return BasedChainComplex(ring, 0, {}, {}); }

    const RingSpec& ring() const { return ring_; }
    int min_degree() const { return min_degree_; }
    int max_degree() const { return min_degree_ + static_cast<int>(bases_.size()) - 1; }
    int degree_count() const { return static_cast<int>(bases_.size()); }
    bool is_zero_complex() const { return bases_.empty(); }

    long long dim_at(int degree) const {
        int i = degree - min_degree_;
        if (i < 0 || i >= degree_count()) return 0;
        return static_cast<long long>(bases_[i].size());
    }

    const std::vector<std::string>& basis_at(int degree) const {
        static const std::vector<std::string> none;
        int i = degree - min_degree_;
        if (i < 0 || i >= degree_count()) return none;
        return bases_[i];
    }

    /// Boundary out of `degree` (zero-row matrix at the bottom degree).
    const Mat<long long>& boundary_from(int degree) const {
        static const Mat<long long> none;
        int i = degree - min_degree_;
        if (i < 0 || i >= degree_count()) return none;
        return boundaries_[i];
    }

    BasedChainComplex shifted(int s) const {
        BasedChainComplex out = *this;
        out.min_degree_ += s;
        return out;
    }

    BasedChainComplex with_ring(RingSpec ring) const {
        BasedChainComplex out = *this;
        out.ring_ = ring;
        return out;
    }

    void validate() const {
        if (bases_.size() != boundaries_.size())
            throw invalid_input_error("chain complex needs one boundary per degree");
        for (int i = 0; i < degree_count(); ++i) {
            std::size_t below = i == 0 ? 0 : bases_[i - 1].size();
            if (boundaries_[i].rows() != below || boundaries_[i].cols() != bases_[i].size())
                throw invalid_input_error("boundary matrix shape mismatch");
        }
        for (int i = 1; i < degree_count(); ++i) {
            const Mat<long long>& B1 = boundaries_[i];
            const Mat<long long>& B0 = boundaries_[i - 1];
            if (B0.rows() == 0) continue;
            std::vector<long long> acc(B0.rows());
            for (std::size_t j = 0; j < B1.cols(); ++j) {
                std::fill(acc.begin(), acc.end(), 0);
                for (std::size_t r = 0; r < B1.rows(); ++r) {
                    long long v = B1(r, j);
                    if (!v) continue;
                    for (std::size_t s = 0; s < B0.rows(); ++s) acc[s] += B0(s, r) * v;
                }
                for (long long a : acc)
                    if (a != 0) throw invalid_input_error("boundary squared is nonzero");
            }
        }
    }

private:
    RingSpec ring_ = RingSpec::Z();
    int min_degree_ = 0;
    std::vector<std::vector<std::string>> bases_;
    std::vector<Mat<long long>> boundaries_;
};

/// Canonical label "(i j k)" for a face given by ground-set ids.
inline std::string face_label(const GroundSet& g, Mask f) {
    std::string s = "(";
    bool first = true;
    for (int i = 0; i < g.size(); ++i)
        if (f & bit(i)) {
            if (!first) s += " ";
            first = false;
            s += std::to_string(g.universe()[i]);
        }
    return s + ")";
}

/**
 * Simplicial chain complex of K. Reduced complexes put the empty face at
 * degree -1 (so a vertex has boundary the empty face); unreduced complexes
 * drop the empty face entirely. The void complex yields the zero complex.
 * Faces within a degree are ordered by ascending position mask.
 */
inline BasedChainComplex simplicial_chains(const SimplicialComplex& K, RingSpec ring, bool reduced) {
    if (K.is_void()) return BasedChainComplex::zero(ring);
    int min_deg = reduced ? -1 : 0;
    int top = K.dim();
    std::vector<std::vector<Mask>> by_degree;
    for (int d = min_deg; d <= std::max(top, min_deg); ++d) by_degree.emplace_back();
    for (Mask f : K.faces()) {
        int d = mask_size(f) - 1;
        if (d < min_deg) continue;
        by_degree[d - min_deg].push_back(f);
    }
    while (!by_degree.empty() && by_degree.back().empty()) by_degree.pop_back();
    // faces() is mask-sorted, which is not the position-lexicographic order;
    // sort each degree by the vertex-position sequence for determinism.
    for (auto& v : by_degree)
        std::sort(v.begin(), v.end(), [&](Mask a, Mask b) {
            return K.ground().ids_of(a) < K.ground().ids_of(b);
        });

    std::vector<std::vector<std::string>> bases;
    std::vector<Mat<long long>> boundaries;
    std::map<Mask, int> below_index;
    for (std::size_t i = 0; i < by_degree.size(); ++i) {
        std::vector<std::string> labels;
        labels.reserve(by_degree[i].size());
        for (Mask f : by_degree[i]) labels.push_back(face_label(K.ground(), f));
        bases.push_back(std::move(labels));

        std::size_t rows = i == 0 ? 0 : by_degree[i - 1].size();
        Mat<long long> B(rows, by_degree[i].size());
        if (i > 0) {
            for (std::size_t j = 0; j < by_degree[i].size(); ++j) {
                Mask f = by_degree[i][j];
                int sign = 1;
                for (int pos = 0; pos < K.ground().size(); ++pos) {
                    if (!(f & bit(pos))) continue;
                    Mask sub = f ^ bit(pos);
                    auto it = below_index.find(sub);
                    if (it != below_index.end()) B(it->second, j) = sign;
                    sign = -sign;
                }
            }
        }
        boundaries.push_back(std::move(B));
        below_index.clear();
        for (std::size_t j = 0; j < by_degree[i].size(); ++j) below_index[by_degree[i][j]] = static_cast<int>(j);
    }
    return BasedChainComplex(ring, min_deg, std::move(bases), std::move(boundaries));
}

inline BasedChainComplex reduced_chains(const SimplicialComplex& K, RingSpec ring) {
    return simplicial_chains(K, ring, true);
}

inline SparseIntMat to_sparse(const Mat<long long>& M) {
    std::vector<std::tuple<int, int, long long>> trip;
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            if (M(i, j) != 0) trip.emplace_back(static_cast<int>(i), static_cast<int>(j), M(i, j));
    return SparseIntMat::from_triplets(static_cast<int>(M.rows()), static_cast<int>(M.cols()), trip);
}

/**
 * Homology of a based complex over its ring. Over a field, the rank at degree
 * d is dim C_d - rank(boundary out) - rank(boundary in). Over the integers the
 * same formula gives the free rank, and the elementary divisors of the
 * incoming boundary contribute the torsion at degree d. An Euler
 * characteristic identity is asserted on every call.
 */
inline GradedRanks homology(const BasedChainComplex& C) {
    GradedRanks out;
    const int n = C.degree_count();
    if (n == 0) return out;

    std::vector<int> rank_out(n + 1, 0);
    std::vector<std::vector<BigInt>> tors(n + 1);
    for (int i = 0; i < n; ++i) {
        int degree = C.min_degree() + i;
        SparseIntMat S = to_sparse(C.boundary_from(degree));
        switch (C.ring().tag) {
        case RingSpec::Tag::Z: {
            SnfSummary s = snf_summary(std::move(S));
            rank_out[i] = s.rank;
            tors[i] = s.divisors;
            break;
        }
        case RingSpec::Tag::Q:
            rank_out[i] = rank_over_Q(S);
            break;
        case RingSpec::Tag::Fp:
            rank_out[i] = rank_mod_p(S, C.ring().p);
            break;
        }
    }

    long long euler_chain = 0, euler_homology = 0;
    for (int i = 0; i < n; ++i) {
        int degree = C.min_degree() + i;
        long long dim = C.dim_at(degree);
        long long beta = dim - rank_out[i] - (i + 1 < n ? rank_out[i + 1] : 0);
        out.add_rank(degree, beta);
        if (i + 1 < n)
            for (const BigInt& d : tors[i + 1]) out.add_torsion(degree, d);
        long long sign = (degree % 2 == 0) ? 1 : -1;
        euler_chain += sign * dim;
        euler_homology += sign * beta;
    }
    if (euler_chain != euler_homology)
        throw invalid_input_error("internal error: Euler characteristic mismatch in homology");
    return out;
}

/// Reduced homology ranks of a complex over a ring (void complex: all zero).
inline GradedRanks reduced_homology(const SimplicialComplex& K, RingSpec ring) {
    return homology(simplicial_chains(K, ring, true));
}

/// Unreduced homology ranks (the homology of the underlying space).
inline GradedRanks unreduced_homology(const SimplicialComplex& K, RingSpec ring) {
    return homology(simplicial_chains(K, ring, false));
}

/**
 * Graded tensor product of based complexes with Koszul signs, then a degree
 * shift. Basis tuples are ordered lexicographically by factor bases (degree
 * first); labels join factor labels with "*".
 */
inline BasedChainComplex tensor_suspend(const std::vector<BasedChainComplex>& factors, int shift) {
    if (factors.empty()) throw invalid_input_error("tensor of zero factors");
    RingSpec ring = factors[0].ring();
    for (const auto& f : factors) {
        if (f.ring() != ring) throw invalid_input_error("tensor factors over different rings");
        if (f.is_zero_complex()) return BasedChainComplex::zero(ring);
    }

    const int m = static_cast<int>(factors.size());
    // flat enumeration of each factor's basis: (degree, index within degree)
    struct Entry { int degree; int index; };
    std::vector<std::vector<Entry>> flat(m);
    for (int k = 0; k < m; ++k)
        for (int d = factors[k].min_degree(); d <= factors[k].max_degree(); ++d)
            for (int j = 0; j < factors[k].dim_at(d); ++j) flat[k].push_back({d, j});

    int min_deg = 0, max_deg = 0;
    for (int k = 0; k < m; ++k) {
        min_deg += factors[k].min_degree();
        max_deg += factors[k].max_degree();
    }

    // enumerate tuples grouped by total degree, in mixed-radix order
    std::vector<std::vector<std::vector<int>>> tuples(max_deg - min_deg + 1);
    std::vector<int> idx(m, 0);
    while (true) {
        int total = 0;
        std::vector<int> t(m);
        for (int k = 0; k < m; ++k) {
            t[k] = idx[k];
            total += flat[k][idx[k]].degree;
        }
        tuples[total - min_deg].push_back(std::move(t));
        int k = m - 1;
        while (k >= 0) {
            if (++idx[k] < static_cast<int>(flat[k].size())) break;
            idx[k] = 0;
            --k;
        }
        if (k < 0) break;
    }

    std::vector<std::map<std::vector<int>, int>> index_of(tuples.size());
    for (std::size_t d = 0; d < tuples.size(); ++d)
        for (std::size_t j = 0; j < tuples[d].size(); ++j) index_of[d][tuples[d][j]] = static_cast<int>(j);

    std::vector<std::vector<std::string>> bases(tuples.size());
    std::vector<Mat<long long>> boundaries(tuples.size());
    for (std::size_t di = 0; di < tuples.size(); ++di) {
        for (const auto& t : tuples[di]) {
            std::string label;
            for (int k = 0; k < m; ++k) {
                if (k) label += "*";
                const Entry& e = flat[k][t[k]];
                label += factors[k].basis_at(e.degree)[e.index];
            }
            bases[di].push_back(std::move(label));
        }
        std::size_t rows = di == 0 ? 0 : tuples[di - 1].size();
        Mat<long long> B(rows, tuples[di].size());
        if (di > 0) {
            for (std::size_t j = 0; j < tuples[di].size(); ++j) {
                const auto& t = tuples[di][j];
                int koszul = 1;
                for (int k = 0; k < m; ++k) {
                    const Entry& e = flat[k][t[k]];
                    const Mat<long long>& Bk = factors[k].boundary_from(e.degree);
                    if (Bk.rows() > 0) {
                        // boundary entries of factor k's basis element
                        // target flat index: same factor, degree-1, row index
                        int base_below = 0;
                        for (int dd = factors[k].min_degree(); dd < e.degree - 1; ++dd)
                            base_below += static_cast<int>(factors[k].dim_at(dd));
                        for (std::size_t r = 0; r < Bk.rows(); ++r) {
                            long long v = Bk(r, e.index);
                            if (!v) continue;
                            std::vector<int> t2 = t;
                            t2[k] = base_below + static_cast<int>(r);
                            auto it = index_of[di - 1].find(t2);
                            if (it == index_of[di - 1].end())
                                throw invalid_input_error("internal error: tensor boundary misses a tuple");
                            B(it->second, j) += koszul * v;
                        }
                    }
                    if (((e.degree % 2) + 2) % 2 == 1) koszul = -koszul;
                }
            }
        }
        boundaries[di] = std::move(B);
    }
    BasedChainComplex out(ring, min_deg, std::move(bases), std::move(boundaries));
    return out.shifted(shift);
}

/// Suspension: the same complex regraded one degree up.
inline BasedChainComplex suspend(const BasedChainComplex& C) { return C.shifted(1); }

} // namespace polyjoin
