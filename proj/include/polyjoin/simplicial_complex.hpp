#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "ground_set.hpp"

namespace polyjoin {

/// Enumeration budget for subset scans (dual, simplex construction).
constexpr int kMaxEnumeratedGround = 24;

/**
 * Abstract simplicial complex on an explicit ground set.
 *
 * The two degenerate complexes are kept distinct on purpose:
 *   - the void complex has no faces at all (is_void() == true),
 *   - the empty complex {voidface} has exactly the empty face.
 * Ghost vertices (ground ids that appear in no face) are allowed everywhere.
 * Faces are stored eagerly (full downward closure), sorted by position masks.
 */
class SimplicialComplex {
public:
    /// Void complex on an empty ground set.
    SimplicialComplex() : void_(true) {}

    static SimplicialComplex make_void(GroundSet g) {
        SimplicialComplex K;
        K.ground_ = std::move(g);
        K.void_ = true;
        return K;
    }

    /// Complex from an explicit, already downward-closed face list.
    static SimplicialComplex from_faces(GroundSet g, std::vector<Mask> faces) {
        SimplicialComplex K;
        K.ground_ = std::move(g);
        std::sort(faces.begin(), faces.end());
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        K.faces_ = std::move(faces);
        K.void_ = K.faces_.empty();
        K.validate();
        return K;
    }

    /// Downward closure of generator faces (always contains the empty face).
    static SimplicialComplex closure_of(GroundSet g, const std::vector<Mask>& generators) {
        std::set<Mask> out;
        out.insert(0);
        std::vector<Mask> stack(generators.begin(), generators.end());
        while (!stack.empty()) {
            Mask f = stack.back();
            stack.pop_back();
            if (!out.insert(f).second) continue;
            Mask rest = f;
            while (rest) {
                Mask b = rest & (~rest + 1);
                rest ^= b;
                if (!out.count(f ^ b)) stack.push_back(f ^ b);
            }
        }
        return from_faces(std::move(g), std::vector<Mask>(out.begin(), out.end()));
    }

    const GroundSet& ground() const { return ground_; }
    bool is_void() const { return void_; }

    /// All faces, ascending by mask; empty exactly when void.
    const std::vector<Mask>& faces() const { return faces_; }

    bool contains(Mask f) const {
        return std::binary_search(faces_.begin(), faces_.end(), f);
    }

    bool contains_ids(const std::vector<int>& ids) const {
        for (int id : ids)
            if (!ground_.contains_id(id)) return false;
        return contains(ground_.mask_of(ids));
    }

    std::size_t face_count() const { return faces_.size(); }

    /// Maximal faces (a face is maximal iff no one-vertex extension is a face).
    std::vector<Mask> facets() const {
        std::vector<Mask> out;
        Mask full = ground_.full_mask();
        for (Mask f : faces_) {
            Mask rest = full & ~f;
            bool maximal = true;
            while (rest) {
                Mask b = rest & (~rest + 1);
                rest ^= b;
                if (contains(f | b)) { maximal = false; break; }
            }
            if (maximal) out.push_back(f);
        }
        return out;
    }

    /// Dimension: -1 for the empty complex, -2 as a sentinel for void.
    int dim() const {
        if (void_) return -2;
        int d = -1;
        for (Mask f : faces_) d = std::max(d, mask_size(f) - 1);
        return d;
    }

    /// Positions of non-ghost vertices.
    Mask vertex_mask() const {
        Mask m = 0;
        for (Mask f : faces_) m |= f;
        return m;
    }

    bool operator==(const SimplicialComplex& o) const {
        return void_ == o.void_ && ground_ == o.ground_ && faces_ == o.faces_;
    }
    bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

    /// Downward closure + void-flag consistency; throws on violation.
    void validate() const {
        if (void_ != faces_.empty())
            throw invalid_input_error("void flag inconsistent with face list");
        Mask full = ground_.full_mask();
        for (Mask f : faces_) {
            if (f & ~full)
                throw invalid_input_error("face outside ground set");
            Mask rest = f;
            while (rest) {
                Mask b = rest & (~rest + 1);
                rest ^= b;
                if (!contains(f ^ b))
                    throw invalid_input_error("face list is not downward closed");
            }
        }
        if (!void_ && !contains(0))
            throw invalid_input_error("non-void complex is missing the empty face");
    }

    std::string str() const {
        if (void_) return "void on " + ground_.str();
        std::string s = "{";
        bool first = true;
        for (Mask f : faces_) {
            if (!first) s += ", ";
            first = false;
            s += "{";
            auto ids = ground_.ids_of(f);
            for (std::size_t i = 0; i < ids.size(); ++i)
                s += (i ? " " : "") + std::to_string(ids[i]);
            s += "}";
        }
        return s + "} on " + ground_.str();
    }

private:
    GroundSet ground_;
    std::vector<Mask> faces_;
    bool void_ = true;
};

/// Disjoint (sigma, omega) pair of vertex-id sets, the index of a restriction.
struct IndexPair {
    std::vector<int> sigma;
    std::vector<int> omega;

    IndexPair() = default;
    IndexPair(std::vector<int> s, std::vector<int> o) : sigma(std::move(s)), omega(std::move(o)) {
        std::sort(sigma.begin(), sigma.end());
        std::sort(omega.begin(), omega.end());
    }

    bool operator<(const IndexPair& o) const {
        if (sigma != o.sigma) return sigma < o.sigma;
        return omega < o.omega;
    }
    bool operator==(const IndexPair& o) const { return sigma == o.sigma && omega == o.omega; }
};

/// Render a sorted id vector as "1-3-7" (empty vector renders as "").
inline std::string join_ids(const std::vector<int>& ids, const char* sep = "-") {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(ids[i]);
    }
    return s;
}

enum class ComplexKind { facets, simplex, boundary, empty, void_complex };

/// Constructors keyed by kind; `facet_ids` is used only for ComplexKind::facets.
inline SimplicialComplex build(ComplexKind kind, const GroundSet& ground,
                               const std::vector<std::vector<int>>& facet_ids = {}) {
    switch (kind) {
    case ComplexKind::void_complex:
        return SimplicialComplex::make_void(ground);
    case ComplexKind::empty:
        return SimplicialComplex::from_faces(ground, {Mask{0}});
    case ComplexKind::facets: {
        std::vector<Mask> gens;
        gens.reserve(facet_ids.size());
        for (const auto& ids : facet_ids) gens.push_back(ground.mask_of(ids));
        return SimplicialComplex::closure_of(ground, gens);
    }
    case ComplexKind::simplex:
    case ComplexKind::boundary: {
        int n = ground.size();
        if (n > kMaxEnumeratedGround)
            throw resource_limit_error("simplex construction above enumeration budget");
        std::vector<Mask> faces;
        Mask full = ground.full_mask();
        for (Mask f = 0; ; ++f) {
            if (kind == ComplexKind::simplex || f != full) faces.push_back(f);
            if (f == full) break;
        }
        // boundary of the (-1)-simplex (empty ground) is the void complex
        return SimplicialComplex::from_faces(ground, std::move(faces));
    }
    }
    throw invalid_input_error("unknown complex kind");
}

inline SimplicialComplex full_simplex(const GroundSet& g) { return build(ComplexKind::simplex, g); }
inline SimplicialComplex boundary_complex(const GroundSet& g) { return build(ComplexKind::boundary, g); }
inline SimplicialComplex empty_complex(const GroundSet& g) { return build(ComplexKind::empty, g); }

/**
 * Combinatorial Alexander dual on the complex's own ground set S:
 * the faces of the dual are the complements of the non-faces of K.
 * Requires a nonempty ground set.
 */
inline SimplicialComplex dual(const SimplicialComplex& K) {
    int n = K.ground().size();
    if (n == 0) throw invalid_input_error("dual requires a nonempty ground set");
    if (n > kMaxEnumeratedGround) throw resource_limit_error("dual above enumeration budget");
    Mask full = K.ground().full_mask();
    std::vector<Mask> faces;
    for (Mask f = 0; ; ++f) {
        if (!K.contains(f)) faces.push_back(full & ~f);
        if (f == full) break;
    }
    return SimplicialComplex::from_faces(K.ground(), std::move(faces));
}

/// Face-set union of two complexes on one ground set (void is the unit).
inline SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.ground() != b.ground()) throw invalid_input_error("union on mismatched ground sets");
    std::vector<Mask> faces = a.faces();
    faces.insert(faces.end(), b.faces().begin(), b.faces().end());
    return SimplicialComplex::from_faces(a.ground(), std::move(faces));
}

/// Face-set intersection of two complexes on one ground set.
inline SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.ground() != b.ground()) throw invalid_input_error("intersection on mismatched ground sets");
    std::vector<Mask> faces;
    for (Mask f : a.faces())
        if (b.contains(f)) faces.push_back(f);
    return SimplicialComplex::from_faces(a.ground(), std::move(faces));
}

/**
 * Restriction K_(sigma, omega) = { tau subset of omega : sigma union tau in K },
 * a complex on ground set omega. Void when K is void or sigma is not a face.
 */
inline SimplicialComplex restriction(const SimplicialComplex& K, Mask sigma, Mask omega) {
    if (sigma & omega) throw invalid_input_error("sigma and omega must be disjoint");
    Mask full = K.ground().full_mask();
    if ((sigma | omega) & ~full) throw invalid_input_error("index pair outside ground set");
    GroundSet g = K.ground().subset(omega);
    if (K.is_void() || !K.contains(sigma)) return SimplicialComplex::make_void(g);
    std::vector<Mask> faces;
    for (Mask f : K.faces()) {
        if ((f & sigma) != sigma) continue;
        Mask tau = f & ~sigma;
        if (tau & ~omega) continue;
        // re-index tau into omega positions
        Mask packed = 0;
        int j = 0;
        for (int i = 0; i < K.ground().size(); ++i) {
            if (!(omega & bit(i))) continue;
            if (tau & bit(i)) packed |= bit(j);
            ++j;
        }
        faces.push_back(packed);
    }
    return SimplicialComplex::from_faces(std::move(g), std::move(faces));
}

inline SimplicialComplex restriction(const SimplicialComplex& K, const IndexPair& p) {
    return restriction(K, K.ground().mask_of(p.sigma), K.ground().mask_of(p.omega));
}

/// link_K(sigma) = K_(sigma, universe minus sigma).
inline SimplicialComplex link(const SimplicialComplex& K, Mask sigma) {
    Mask full = K.ground().full_mask();
    if (sigma & ~full) throw invalid_input_error("sigma outside ground set");
    return restriction(K, sigma, full & ~sigma);
}

inline SimplicialComplex link(const SimplicialComplex& K, const std::vector<int>& sigma_ids) {
    return link(K, K.ground().mask_of(sigma_ids));
}

/**
 * Join of complexes on pairwise-disjoint ground sets: faces are the unions of
 * one face per part. The result ground set is the concatenation, with one
 * block per part; void if any part is void.
 */
inline SimplicialComplex join(const std::vector<SimplicialComplex>& parts,
                              std::size_t max_faces = std::size_t{1} << 22) {
    GroundSet g;
    std::vector<int> sizes;
    for (const auto& p : parts) {
        g = g.concatenated_with(p.ground());
        sizes.push_back(p.ground().size());
    }
    g = GroundSet(g.universe(), sizes);
    for (const auto& p : parts)
        if (p.is_void()) return SimplicialComplex::make_void(g);

    std::vector<Mask> faces{0};
    int offset = 0;
    for (const auto& p : parts) {
        std::vector<Mask> next;
        if (faces.size() * p.faces().size() > max_faces)
            throw resource_limit_error("join exceeds face budget");
        next.reserve(faces.size() * p.faces().size());
        for (Mask a : faces)
            for (Mask b : p.faces())
                next.push_back(a | (b << offset));
        faces = std::move(next);
        offset += p.ground().size();
    }
    return SimplicialComplex::from_faces(std::move(g), std::move(faces));
}

/// Order-preserving relabeling of a complex onto a new ground set of equal size.
inline SimplicialComplex relabel(const SimplicialComplex& K, const GroundSet& g) {
    if (g.size() != K.ground().size())
        throw invalid_input_error("relabel requires equal ground sizes");
    if (K.is_void()) return SimplicialComplex::make_void(g);
    return SimplicialComplex::from_faces(g, K.faces());
}

/// Join of parts relabeled canonically onto the blocks of a blocked ground set.
inline SimplicialComplex join_on(const GroundSet& blocked, const std::vector<SimplicialComplex>& parts) {
    if (!blocked.has_blocks() || blocked.block_count() != static_cast<int>(parts.size()))
        throw invalid_input_error("join_on requires one block per part");
    std::vector<SimplicialComplex> relabeled;
    relabeled.reserve(parts.size());
    for (int k = 0; k < blocked.block_count(); ++k)
        relabeled.push_back(relabel(parts[k], GroundSet(blocked.block_ids(k))));
    SimplicialComplex J = join(relabeled);
    return SimplicialComplex::from_faces(GroundSet(blocked.universe(), blocked.block_sizes()), J.faces());
}

/**
 * Pair (total, sub) of complexes on one ground set with sub a subcomplex of
 * total. Sub may be void.
 */
struct SimplicialPair {
    SimplicialComplex total;
    SimplicialComplex sub;

    SimplicialPair() = default;
    SimplicialPair(SimplicialComplex X, SimplicialComplex A)
        : total(std::move(X)), sub(std::move(A)) {
        if (total.ground() != sub.ground())
            throw invalid_input_error("pair members live on different ground sets");
        for (Mask f : sub.faces())
            if (!total.contains(f))
                throw invalid_input_error("sub is not a subcomplex of total");
    }

    bool operator==(const SimplicialPair& o) const { return total == o.total && sub == o.sub; }
};

/**
 * Polyhedral join S(K; X, A): the union over faces tau of K of the joins whose
 * k-th part is X_k for k in tau and A_k otherwise. Pairs live on pairwise
 * disjoint ground sets; the result lives on their concatenation (one block per
 * pair). S(void; X, A) is void.
 */
inline SimplicialComplex polyhedral_join(const SimplicialComplex& K,
                                         const std::vector<SimplicialPair>& pairs) {
    if (static_cast<int>(pairs.size()) != K.ground().size())
        throw invalid_input_error("polyhedral join needs one pair per ground vertex of K");
    GroundSet g;
    std::vector<int> sizes;
    for (const auto& p : pairs) {
        g = g.concatenated_with(p.total.ground());
        sizes.push_back(p.total.ground().size());
    }
    g = GroundSet(g.universe(), sizes);
    if (K.is_void()) return SimplicialComplex::make_void(g);

    const int m = K.ground().size();
    // offsets of each block inside the concatenated ground set
    std::vector<int> offset(m + 1, 0);
    for (int k = 0; k < m; ++k) offset[k + 1] = offset[k] + pairs[k].total.ground().size();

    // A face f belongs to S(K;X,A) iff every block part is a face of X_k and
    // the set { k : block part not a face of A_k } is a face of K. This is the
    // union over tau in K of the blockwise joins, evaluated facewise.
    std::set<Mask> out;
    for (Mask tau : K.faces()) {
        std::vector<Mask> partial{0};
        for (int k = 0; k < m; ++k) {
            const SimplicialComplex& part = (tau & bit(k)) ? pairs[k].total : pairs[k].sub;
            if (part.is_void()) { partial.clear(); break; }
            std::vector<Mask> next;
            next.reserve(partial.size() * part.faces().size());
            for (Mask a : partial)
                for (Mask b : part.faces())
                    next.push_back(a | (b << offset[k]));
            partial = std::move(next);
        }
        out.insert(partial.begin(), partial.end());
    }
    if (out.empty()) return SimplicialComplex::make_void(g);
    return SimplicialComplex::from_faces(std::move(g), std::vector<Mask>(out.begin(), out.end()));
}

/**
 * Composition complex S(K; L_1, ..., L_m): the polyhedral join with pairs
 * (full simplex on L_k's ground, L_k).
 */
inline SimplicialComplex compose(const SimplicialComplex& K,
                                 const std::vector<SimplicialComplex>& parts) {
    std::vector<SimplicialPair> pairs;
    pairs.reserve(parts.size());
    for (const auto& L : parts)
        pairs.emplace_back(full_simplex(L.ground()), L);
    return polyhedral_join(K, pairs);
}

/// Blockwise restriction of a pair list by (sigma, omega) on the joined ground set.
inline std::vector<SimplicialPair> restrict_pairs(const std::vector<SimplicialPair>& pairs,
                                                  Mask sigma, Mask omega) {
    std::vector<SimplicialPair> out;
    out.reserve(pairs.size());
    int offset = 0;
    for (const auto& p : pairs) {
        int nk = p.total.ground().size();
        Mask blk = ((nk == kMaxGroundSize) ? ~Mask{0} : (bit(nk) - 1));
        Mask sk = (sigma >> offset) & blk;
        Mask ok = (omega >> offset) & blk;
        SimplicialPair q;
        q.total = restriction(p.total, sk, ok);
        q.sub = restriction(p.sub, sk, ok);
        out.push_back(std::move(q));
        offset += nk;
    }
    return out;
}

/// Blockwise link of a pair list at sigma on the joined ground set.
inline std::vector<SimplicialPair> link_pairs(const std::vector<SimplicialPair>& pairs, Mask sigma) {
    std::vector<SimplicialPair> out;
    out.reserve(pairs.size());
    int offset = 0;
    for (const auto& p : pairs) {
        int nk = p.total.ground().size();
        Mask blk = ((nk == kMaxGroundSize) ? ~Mask{0} : (bit(nk) - 1));
        Mask sk = (sigma >> offset) & blk;
        SimplicialPair q;
        q.total = link(p.total, sk);
        q.sub = link(p.sub, sk);
        out.push_back(std::move(q));
        offset += nk;
    }
    return out;
}

} // namespace polyjoin
