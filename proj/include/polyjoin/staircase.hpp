#pragma once

// Product triangulations ("staircase" complexes) and their sub-complexes cut
// out by a deviation-support rule.  Given simplicial complexes L_1,...,L_m,
// the product triangulation lives on tuples of vertices; its faces are chains
// of pairwise-distinct tuples that increase coordinatewise and whose
// per-coordinate projections are faces of the factors.  In the pruned variant
// a chain survives only when the set of coordinates where its projection
// escapes the designated sub-complex is itself a face of a control complex.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyjoin/chain_complex.hpp"
#include "polyjoin/errors.hpp"
#include "polyjoin/simplicial_complex.hpp"

namespace polyjoin {

inline constexpr std::size_t kDefaultStaircaseFaceCap = 2'000'000;

// A vertex of the product triangulation: one vertex id per factor.
using TupleVertex = std::vector<int>;

// A face: a strictly increasing (lexicographically) chain of tuples.
struct StaircaseComplex {
    std::vector<SimplicialComplex> factors;
    // faces[d] lists the d-dimensional faces (chains of d+1 tuples).
    // Only non-void; void is represented by an empty optional at call sites.
    std::vector<std::vector<std::vector<TupleVertex>>> faces_by_dim;
    bool is_void = false;

    std::size_t face_count() const {
        std::size_t n = 0;
        for (const auto& level : faces_by_dim) n += level.size();
        return n;
    }
};

namespace detail {

// Coordinatewise order on tuples: t <= u iff every coordinate satisfies
// position(t_k) <= position(u_k) within factor k's universe order, and t != u
// for the strict version.  We compare by the index of the id inside each
// factor's universe so the order is independent from raw id values.
struct TupleOrder {
    std::vector<std::map<int, int>> position;  // per factor: id -> index

    explicit TupleOrder(const std::vector<SimplicialComplex>& factors) {
        position.resize(factors.size());
        for (std::size_t k = 0; k < factors.size(); ++k) {
            const auto& uni = factors[k].ground().universe();
            for (std::size_t i = 0; i < uni.size(); ++i)
                position[k][uni[i]] = static_cast<int>(i);
        }
    }

    bool leq(const TupleVertex& a, const TupleVertex& b) const {
        for (std::size_t k = 0; k < a.size(); ++k)
            if (position[k].at(a[k]) > position[k].at(b[k])) return false;
        return true;
    }
};

}  // namespace detail

// Enumerate the faces of the product triangulation of `factors`, optionally
// pruned: when `control` and `sub` are provided, a chain is kept only if the
// set of factor indices k where its k-projection is NOT a face of sub[k]
// forms a face of `control`.  Passing no control keeps every chain.
//
// Throws resource_limit_error when more than `max_faces` faces would be
// produced.  Void factors (or a void control) give a void result.
inline StaircaseComplex staircase_product(
    const std::vector<SimplicialComplex>& factors,
    const SimplicialComplex* control = nullptr,
    const std::vector<SimplicialComplex>* sub = nullptr,
    std::size_t max_faces = kDefaultStaircaseFaceCap) {
    if (factors.empty()) throw invalid_input_error("staircase_product: no factors");
    if (control != nullptr) {
        if (sub == nullptr || sub->size() != factors.size())
            throw invalid_input_error("staircase_product: control requires one sub-complex per factor");
        if (static_cast<std::size_t>(control->ground().size()) != factors.size())
            throw invalid_input_error("staircase_product: control ground must index the factors");
        for (std::size_t k = 0; k < factors.size(); ++k) {
            if (!((*sub)[k].ground() == factors[k].ground()))
                throw invalid_input_error("staircase_product: sub-complex ground mismatch");
        }
    }

    StaircaseComplex out;
    out.factors = factors;
    for (const auto& f : factors)
        if (f.is_void()) {
            out.is_void = true;
            return out;
        }
    if (control != nullptr && control->is_void()) {
        out.is_void = true;
        return out;
    }

    const std::size_t m = factors.size();
    detail::TupleOrder order(factors);

    // All candidate tuples: products of single vertices, where each projection
    // {v_k} must be a face of factor k.  Factors may have ghost vertices.
    std::vector<std::vector<int>> usable(m);
    for (std::size_t k = 0; k < m; ++k) {
        for (int id : factors[k].ground().universe()) {
            if (factors[k].contains_ids({id})) usable[k].push_back(id);
        }
    }
    std::vector<TupleVertex> tuples;
    {
        TupleVertex cur(m);
        std::vector<std::size_t> idx(m, 0);
        bool any_empty = false;
        for (std::size_t k = 0; k < m; ++k)
            if (usable[k].empty()) any_empty = true;
        if (!any_empty) {
            while (true) {
                for (std::size_t k = 0; k < m; ++k) cur[k] = usable[k][idx[k]];
                tuples.push_back(cur);
                std::size_t k = 0;
                while (k < m && ++idx[k] == usable[k].size()) {
                    idx[k] = 0;
                    ++k;
                }
                if (k == m) break;
            }
        }
    }
    // Sort by position vectors so the coordinatewise partial order embeds in
    // the enumeration order: every chain is then visited exactly once, in
    // sorted order.  (Raw-id lex order would not do when a factor's universe
    // is not listed ascending.)
    std::sort(tuples.begin(), tuples.end(), [&](const TupleVertex& a, const TupleVertex& b) {
        for (std::size_t k = 0; k < m; ++k) {
            int pa = order.position[k].at(a[k]);
            int pb = order.position[k].at(b[k]);
            if (pa != pb) return pa < pb;
        }
        return false;
    });

    // The control ground indexes factors: vertex id at index k controls
    // factor k.  Map factor index -> control ground bit.
    std::vector<Mask> factor_bit(m, 0);
    if (control != nullptr) {
        for (std::size_t k = 0; k < m; ++k) factor_bit[k] = bit(static_cast<int>(k));
    }

    // Membership test for a chain, incremental per extension:
    //  - projections must be faces of the factors,
    //  - with control: deviation support must be a control face.
    // We carry the projected vertex masks per factor and the deviation mask.
    struct Frame {
        std::vector<Mask> proj;  // per factor: mask of projected vertices
        Mask devi = 0;           // factor indices whose projection leaves sub
    };

    out.faces_by_dim.emplace_back();  // dimension 0
    std::size_t face_budget = max_faces;
    auto spend = [&face_budget]() {
        if (face_budget == 0) throw resource_limit_error("staircase_product: face cap exceeded");
        --face_budget;
    };

    // DFS over chains; chain extended only by lexicographically later tuples
    // that dominate the last tuple coordinatewise.
    std::vector<TupleVertex> chain;
    std::vector<Frame> frames;

    auto project_ok = [&](const Frame& parent, const TupleVertex& t, Frame& child) -> bool {
        child.proj = parent.proj;
        child.devi = parent.devi;
        for (std::size_t k = 0; k < m; ++k) {
            Mask vbit = bit(factors[k].ground().index_of(t[k]));
            child.proj[k] |= vbit;
            if (!factors[k].contains(child.proj[k])) return false;
        }
        if (control != nullptr) {
            for (std::size_t k = 0; k < m; ++k) {
                if ((child.devi & factor_bit[k]) != 0) continue;
                if (!(*sub)[k].contains(child.proj[k])) child.devi |= factor_bit[k];
            }
            if (!control->contains(child.devi)) return false;
        }
        return true;
    };

    // Record the current chain as a face of dimension chain.size()-1.
    auto record = [&]() {
        std::size_t d = chain.size() - 1;
        while (out.faces_by_dim.size() <= d) out.faces_by_dim.emplace_back();
        spend();
        out.faces_by_dim[d].push_back(chain);
    };

    std::vector<std::size_t> start_stack;
    for (std::size_t s = 0; s < tuples.size(); ++s) {
        Frame root;
        root.proj.assign(m, 0);
        Frame f0;
        if (!project_ok(root, tuples[s], f0)) continue;
        chain.assign(1, tuples[s]);
        frames.assign(1, f0);
        record();
        start_stack.assign(1, s + 1);
        while (!chain.empty()) {
            std::size_t& next = start_stack.back();
            bool extended = false;
            while (next < tuples.size()) {
                std::size_t cand = next++;
                if (!order.leq(chain.back(), tuples[cand])) continue;
                Frame child;
                if (!project_ok(frames.back(), tuples[cand], child)) continue;
                chain.push_back(tuples[cand]);
                frames.push_back(std::move(child));
                record();
                start_stack.push_back(cand + 1);
                extended = true;
                break;
            }
            if (!extended) {
                chain.pop_back();
                frames.pop_back();
                start_stack.pop_back();
            }
        }
    }

    // A non-void staircase product always has at least the empty chain's
    // closure; with aggressive pruning every vertex may die, leaving {empty}.
    return out;
}

// Chain complex of a staircase complex over `ring`.  Reduced chains include
// the empty face in degree -1 (unless the complex is void, which yields the
// zero complex).
inline BasedChainComplex staircase_chains(const StaircaseComplex& S, const RingSpec& ring,
                                          bool reduced = true) {
    if (S.is_void) return BasedChainComplex::zero(ring);

    auto tuple_str = [](const TupleVertex& t) {
        std::string s = "<";
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(t[k]);
        }
        s += ">";
        return s;
    };
    auto face_str = [&](const std::vector<TupleVertex>& f) {
        std::string s = "(";
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) s += " ";
            s += tuple_str(f[i]);
        }
        s += ")";
        return s;
    };

    int min_deg = reduced ? -1 : 0;
    std::vector<std::vector<std::string>> bases;
    std::vector<Mat<long long>> boundaries;

    // Sorted copies per dimension, with index lookup for boundary assembly.
    std::vector<std::vector<std::vector<TupleVertex>>> sorted = S.faces_by_dim;
    for (auto& level : sorted) std::sort(level.begin(), level.end());

    std::vector<std::map<std::vector<TupleVertex>, int>> index(sorted.size());
    for (std::size_t d = 0; d < sorted.size(); ++d)
        for (std::size_t i = 0; i < sorted[d].size(); ++i)
            index[d][sorted[d][i]] = static_cast<int>(i);

    if (reduced) bases.push_back({"()"});
    for (std::size_t d = 0; d < sorted.size(); ++d) {
        std::vector<std::string> lbl;
        lbl.reserve(sorted[d].size());
        for (const auto& f : sorted[d]) lbl.push_back(face_str(f));
        bases.push_back(std::move(lbl));
    }

    // Lowest boundary: zero rows.
    boundaries.emplace_back(0, bases.empty() ? 0 : bases[0].size());
    std::size_t first_pos = 1;  // bases index of dimension-0 when reduced
    if (!reduced) first_pos = 0;

    for (std::size_t d = 0; d < sorted.size(); ++d) {
        std::size_t pos = first_pos + d;  // index into `bases` for dimension d
        if (pos == 0) continue;           // unreduced dimension 0: rows below are absent
        std::size_t below_rows = bases[pos - 1].size();
        Mat<long long> B(below_rows, bases[pos].size());
        for (std::size_t j = 0; j < sorted[d].size(); ++j) {
            const auto& f = sorted[d][j];
            if (d == 0) {
                if (reduced) B(0, j) = 1;  // vertex -> empty face
                continue;
            }
            for (std::size_t i = 0; i < f.size(); ++i) {
                std::vector<TupleVertex> sub = f;
                sub.erase(sub.begin() + static_cast<long>(i));
                auto it = index[d - 1].find(sub);
                if (it == index[d - 1].end())
                    throw invalid_input_error("staircase_chains: boundary face missing");
                long long sign = (i % 2 == 0) ? 1 : -1;
                B(it->second, j) += sign;
            }
        }
        boundaries.push_back(std::move(B));
    }

    if (bases.empty()) return BasedChainComplex::zero(ring);
    return BasedChainComplex(ring, min_deg, std::move(bases), std::move(boundaries));
}

// Convenience: homology of a product triangulation, pruned or not.
inline GradedRanks staircase_homology(const StaircaseComplex& S, const RingSpec& ring,
                                      bool reduced = true) {
    return homology(staircase_chains(S, ring, reduced));
}

}  // namespace polyjoin
