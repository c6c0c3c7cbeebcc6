#pragma once

// Deviation-filtered tensor complexes ("inclusion complexes") and the
// closed-form homology predictions they satisfy.
//
// Given a complex K on m vertices and, for each vertex, a based inclusion of
// chain complexes (a sub-basis closed under the boundary), the inclusion
// complex is the span of those tensor basis tuples whose deviation support —
// the set of factors where the tuple leaves the sub-basis — is a face of K.
// Its homology decomposes as a sum over disjoint (sigma, omega) pairs of the
// K-table entry tensored with per-factor character ranks (cokernel for
// sigma-factors, kernel for omega-factors, image otherwise).

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polyjoin/chain_complex.hpp"
#include "polyjoin/errors.hpp"
#include "polyjoin/hochster.hpp"
#include "polyjoin/induced_map.hpp"
#include "polyjoin/ring.hpp"
#include "polyjoin/simplicial_complex.hpp"

namespace polyjoin {

inline constexpr std::size_t kDefaultTensorCap = 1u << 21;

// A based inclusion: the sub complex's basis labels embed, degree by degree,
// into the total complex's, and the embedding commutes with boundaries.
struct BasedInclusion {
    BasedChainComplex total;
    BasedChainComplex sub;

    BasedInclusion(BasedChainComplex total_, BasedChainComplex sub_)
        : total(std::move(total_)), sub(std::move(sub_)) {
        ChainMap cm = chain_map_from_labels(sub, total);  // throws when not based
        verify_chain_map(cm);
    }

    // Suspended reduced simplicial chains of a pair: the empty face sits at
    // degree 0, vertices at degree 1, and so on.
    static BasedInclusion from_pair(const SimplicialPair& pair, const RingSpec& ring) {
        return BasedInclusion(suspend(simplicial_chains(pair.total, ring, /*reduced=*/true)),
                              suspend(simplicial_chains(pair.sub, ring, /*reduced=*/true)));
    }

    static BasedInclusion identity(const BasedChainComplex& C) { return BasedInclusion(C, C); }

    // Character ranks (coker/ker/im) of the map induced on homology by this
    // inclusion, at the degrees of the complexes as given.
    CharacterRanks characters() const {
        ChainMap cm = chain_map_from_labels(sub, total);
        InducedRanks r = induced_homology_ranks(cm);
        return CharacterRanks{r.coker, r.kernel, r.image};
    }

    // Integer split verdict of the induced map (complexes must be over Z).
    SplitReport split() const { return split_analysis(chain_map_from_labels(sub, total)); }
};

// The sub-complex of C spanned by the basis elements `keep` accepts.  Throws
// when the kept span is not closed under the boundary.
inline BasedChainComplex filtered_subcomplex(
    const BasedChainComplex& C, const std::function<bool(int, const std::string&)>& keep) {
    int lo = C.min_degree();
    int n = C.degree_count();
    std::vector<std::vector<std::size_t>> kept(n);
    std::vector<std::vector<std::string>> bases(n);
    for (int i = 0; i < n; ++i) {
        const auto& labels = C.basis_at(lo + i);
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if (keep(lo + i, labels[j])) {
                kept[i].push_back(j);
                bases[i].push_back(labels[j]);
            }
        }
    }
    std::vector<Mat<long long>> boundaries;
    for (int i = 0; i < n; ++i) {
        const Mat<long long>& B = C.boundary_from(lo + i);
        std::size_t rows = (i == 0) ? 0 : kept[i - 1].size();
        Mat<long long> R(rows, kept[i].size());
        if (i > 0) {
            std::vector<long long> row_of(C.dim_at(lo + i - 1), -1);
            for (std::size_t r = 0; r < kept[i - 1].size(); ++r) row_of[kept[i - 1][r]] = static_cast<long long>(r);
            for (std::size_t c = 0; c < kept[i].size(); ++c) {
                std::size_t col = kept[i][c];
                for (std::size_t r = 0; r < B.rows(); ++r) {
                    long long v = B(r, col);
                    if (v == 0) continue;
                    if (row_of[r] < 0)
                        throw invalid_input_error(
                            "filtered_subcomplex: kept span is not boundary-closed");
                    R(static_cast<std::size_t>(row_of[r]), c) = v;
                }
            }
        }
        boundaries.push_back(std::move(R));
    }
    return BasedChainComplex(C.ring(), lo, std::move(bases), std::move(boundaries));
}

namespace detail {

inline std::vector<std::string> split_tensor_label(const std::string& label, std::size_t m) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : label) {
        if (ch == '*') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() != m)
        throw invalid_input_error("split_tensor_label: expected " + std::to_string(m) +
                                  " factors in '" + label + "'");
    return parts;
}

}  // namespace detail

// The deviation-filtered tensor of the totals: a tensor basis tuple is kept
// iff the set of factor indices where its component lies outside the sub
// basis is a face of K.  K with no faces at all gives the zero complex.
inline BasedChainComplex build_inclusion_complex(const SimplicialComplex& K,
                                                 const std::vector<BasedInclusion>& fam,
                                                 std::size_t max_tuples = kDefaultTensorCap) {
    std::size_t m = fam.size();
    if (m == 0) throw invalid_input_error("build_inclusion_complex: empty family");
    if (static_cast<std::size_t>(K.ground().size()) != m)
        throw invalid_input_error("build_inclusion_complex: K must have one vertex per factor");
    RingSpec ring = fam[0].total.ring();
    for (const auto& bi : fam)
        if (!(bi.total.ring() == ring))
            throw invalid_input_error("build_inclusion_complex: factor ring mismatch");
    if (K.is_void()) return BasedChainComplex::zero(ring);

    std::size_t tuple_count = 1;
    std::vector<const BasedChainComplex*> totals;
    for (const auto& bi : fam) {
        std::size_t dim = 0;
        for (int d = bi.total.min_degree();
             d < bi.total.min_degree() + bi.total.degree_count(); ++d)
            dim += bi.total.dim_at(d);
        if (dim == 0) return BasedChainComplex::zero(ring);
        if (tuple_count > max_tuples / dim)
            throw resource_limit_error("build_inclusion_complex: tensor exceeds cap");
        tuple_count *= dim;
        totals.push_back(&bi.total);
    }

    std::vector<BasedChainComplex> factor_complexes;
    factor_complexes.reserve(m);
    for (const auto& bi : fam) factor_complexes.push_back(bi.total);
    BasedChainComplex full = tensor_suspend(factor_complexes, 0);

    // Per factor: every label of the sub basis (labels are unique per factor).
    std::vector<std::set<std::string>> sub_labels(m);
    for (std::size_t k = 0; k < m; ++k)
        for (int d = fam[k].sub.min_degree();
             d < fam[k].sub.min_degree() + fam[k].sub.degree_count(); ++d)
            for (const std::string& s : fam[k].sub.basis_at(d)) sub_labels[k].insert(s);

    auto keep = [&](int, const std::string& label) {
        std::vector<std::string> parts = detail::split_tensor_label(label, m);
        Mask dev = 0;
        for (std::size_t k = 0; k < m; ++k)
            if (!sub_labels[k].count(parts[k])) dev |= bit(static_cast<int>(k));
        return K.contains(dev);
    };
    return filtered_subcomplex(full, keep);
}

// Simplicial-pair inclusion complex over `ring`: suspended reduced chains.
inline BasedChainComplex build_inclusion_complex(const SimplicialComplex& K,
                                                 const std::vector<SimplicialPair>& pairs,
                                                 const RingSpec& ring,
                                                 std::size_t max_tuples = kDefaultTensorCap) {
    std::vector<BasedInclusion> fam;
    fam.reserve(pairs.size());
    for (const auto& p : pairs) fam.push_back(BasedInclusion::from_pair(p, ring));
    return build_inclusion_complex(K, fam, max_tuples);
}

// ---------------------------------------------------------------------------
// Closed-form predictions.

// Core evaluator: sum over disjoint (sigma, omega) pairs of
//   table(sigma, omega)  (x)  (x)_k role_k shifted by `character_shift`,
// with role_k = alpha for k in sigma, gamma for k in omega, eta otherwise.
inline GradedRanks predicted_homology_from_table(const SigmaOmegaTable& table,
                                                 const std::vector<CharacterRanks>& chars,
                                                 const GroundSet& ground, int character_shift) {
    if (static_cast<std::size_t>(ground.size()) != chars.size())
        throw invalid_input_error("predicted_homology: one character table per vertex required");
    GradedRanks total;
    for (const auto& [pair, entry] : table.entries) {
        if (entry.is_zero()) continue;
        GradedRanks conv = entry;
        Mask sig = ground.mask_of(pair.sigma);
        Mask ome = ground.mask_of(pair.omega);
        bool dead = false;
        for (int k = 0; k < ground.size() && !dead; ++k) {
            const CharacterRanks& cr = chars[static_cast<std::size_t>(k)];
            const GradedRanks* role;
            if (sig & bit(k))
                role = &cr.alpha;
            else if (ome & bit(k))
                role = &cr.gamma;
            else
                role = &cr.eta;
            if (role->is_zero()) {
                dead = true;
                break;
            }
            conv = graded_tensor(conv, role->shifted(character_shift));
        }
        if (!dead) total = graded_sum(total, conv);
    }
    return total;
}

// Prediction for suspended-reduced-chain families: reduced-pair characters
// enter with a +1 suspension shift; the K-table entry at degree a is the
// restriction's reduced Betti number at a-1.
inline GradedRanks predicted_homology(const SimplicialComplex& K,
                                      const std::vector<CharacterRanks>& chars,
                                      const RingSpec& ring) {
    SigmaOmegaTable t = sigma_omega_table(K, ring, PairFamily::all_pairs);
    return predicted_homology_from_table(t, chars, K.ground(), /*character_shift=*/1);
}

// Prediction for arbitrary based families: characters of the complexes as
// given, no shift.
inline GradedRanks predicted_homology_general(const SimplicialComplex& K,
                                              const std::vector<CharacterRanks>& chars,
                                              const RingSpec& ring) {
    SigmaOmegaTable t = sigma_omega_table(K, ring, PairFamily::all_pairs);
    return predicted_homology_from_table(t, chars, K.ground(), /*character_shift=*/0);
}

// ---------------------------------------------------------------------------
// Comparators: direct homology of the built complex vs the prediction.

struct CompareReport {
    bool pass = false;
    GradedRanks direct;
    GradedRanks predicted;
    std::string detail;
};

// General based families, characters taken as given (no shift).
inline CompareReport compare_inclusion_general(const SimplicialComplex& K,
                                               const std::vector<BasedInclusion>& fam,
                                               std::size_t max_tuples = kDefaultTensorCap) {
    RingSpec ring = fam.empty() ? RingSpec::Q() : fam[0].total.ring();
    if (ring.tag == RingSpec::Tag::Z) {
        for (std::size_t k = 0; k < fam.size(); ++k) {
            SplitReport s = fam[k].split();
            if (s.verdict != SplitVerdict::split)
                throw invalid_input_error("compare_inclusion_general: factor " +
                                          std::to_string(k + 1) + " is " + to_string(s.verdict) +
                                          " over the integers");
        }
    }
    std::vector<CharacterRanks> chars;
    chars.reserve(fam.size());
    for (const auto& bi : fam) chars.push_back(bi.characters());

    CompareReport rep;
    rep.direct = homology(build_inclusion_complex(K, fam, max_tuples));
    rep.predicted = predicted_homology_general(K, chars, ring);
    rep.pass = (rep.direct == rep.predicted);
    if (!rep.pass)
        rep.detail = "direct " + rep.direct.str() + " vs predicted " + rep.predicted.str();
    return rep;
}

// Simplicial-pair families via suspended reduced chains (+1-shifted reduced
// characters).  Over Z every factor must be certified split.
inline CompareReport compare_inclusion_pairs(const SimplicialComplex& K,
                                             const std::vector<SimplicialPair>& pairs,
                                             const RingSpec& ring,
                                             std::size_t max_tuples = kDefaultTensorCap) {
    if (ring.tag == RingSpec::Tag::Z) {
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            SplitReport s = split_status(pairs[k]);
            if (s.verdict != SplitVerdict::split)
                throw invalid_input_error("compare_inclusion_pairs: factor " +
                                          std::to_string(k + 1) + " is " + to_string(s.verdict) +
                                          " over the integers");
        }
    }
    std::vector<CharacterRanks> chars;
    chars.reserve(pairs.size());
    for (const auto& p : pairs) chars.push_back(character_ranks(p, ring, /*reduced=*/true));

    CompareReport rep;
    rep.direct = homology(build_inclusion_complex(K, pairs, ring, max_tuples));
    rep.predicted = predicted_homology(K, chars, ring);
    rep.pass = (rep.direct == rep.predicted);
    if (!rep.pass)
        rep.detail = "direct " + rep.direct.str() + " vs predicted " + rep.predicted.str();
    return rep;
}

// ---------------------------------------------------------------------------
// Factored tables of composition complexes.

// Predicted table entry of compose(K, Ls) at (sigma, omega): decompose the
// pair blockwise as (sigma_k, omega_k); with
//   omega_hat = {k : omega_k nonempty},
//   sigma_hat = {k : omega_k empty and sigma_k not a face of L_k},
// the entry is  table_K(sigma_hat, omega_hat) (x) prod_{k in omega_hat}
// table_{L_k}(sigma_k, omega_k).
inline GradedRanks factored_table_entry(const SimplicialComplex& K,
                                        const std::vector<SimplicialComplex>& Ls,
                                        const IndexPair& pair, const RingSpec& ring) {
    std::size_t m = Ls.size();
    if (static_cast<std::size_t>(K.ground().size()) != m)
        throw invalid_input_error("factored_table_entry: one inner complex per K vertex");
    std::vector<std::vector<int>> sig_k(m), ome_k(m);
    auto classify = [&](const std::vector<int>& ids, std::vector<std::vector<int>>& out) {
        for (int id : ids) {
            bool found = false;
            for (std::size_t k = 0; k < m && !found; ++k) {
                if (Ls[k].ground().contains_id(id)) {
                    out[k].push_back(id);
                    found = true;
                }
            }
            if (!found)
                throw invalid_input_error("factored_table_entry: id " + std::to_string(id) +
                                          " not in any inner ground");
        }
    };
    classify(pair.sigma, sig_k);
    classify(pair.omega, ome_k);

    std::vector<int> sigma_hat, omega_hat;
    for (std::size_t k = 0; k < m; ++k) {
        int kid = K.ground().universe()[k];
        if (!ome_k[k].empty())
            omega_hat.push_back(kid);
        else if (!Ls[k].contains_ids(sig_k[k]))
            sigma_hat.push_back(kid);
    }

    GradedRanks entry = table_entry(K, IndexPair(sigma_hat, omega_hat), ring);
    for (std::size_t k = 0; k < m; ++k) {
        if (ome_k[k].empty()) continue;
        if (entry.is_zero()) break;
        entry = graded_tensor(entry, table_entry(Ls[k], IndexPair(sig_k[k], ome_k[k]), ring));
    }
    return entry;
}

// Compare the composition's directly computed table against the factored
// form, over the supplied pairs (all pairs of the composition ground when
// none are given; ground-size cap applies then).
inline CompareReport compare_composition_table(const SimplicialComplex& K,
                                               const std::vector<SimplicialComplex>& Ls,
                                               const RingSpec& ring,
                                               const std::vector<IndexPair>& pairs_in = {}) {
    SimplicialComplex C = compose(K, Ls);
    std::vector<IndexPair> pairs =
        pairs_in.empty() ? enumerate_index_pairs(C.ground(), PairFamily::all_pairs) : pairs_in;
    CompareReport rep;
    rep.pass = true;
    for (const IndexPair& ip : pairs) {
        GradedRanks direct = table_entry(C, ip, ring);
        GradedRanks predicted = factored_table_entry(K, Ls, ip, ring);
        if (!(direct == predicted)) {
            rep.pass = false;
            rep.direct = direct;
            rep.predicted = predicted;
            rep.detail = "mismatch at sigma={" + join_ids(ip.sigma) + "} omega={" +
                         join_ids(ip.omega) + "}: direct " + direct.str() + " vs factored " +
                         predicted.str();
            return rep;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Betti polynomials of compositions.

// The shifted Betti "polynomial" of X: coefficient at degree i+1 is the
// reduced Betti number at i.  Products of such polynomials are graded
// tensors of the rank tables.
inline GradedRanks betti_polynomial(const SimplicialComplex& X, const RingSpec& ring) {
    GradedRanks r = reduced_homology(X, ring).shifted(1);
    if (!r.torsion.empty())
        throw invalid_input_error(
            "betti_polynomial: torsion present; use a field or torsion-free input");
    return r;
}

struct BettiPolynomialReport {
    GradedRanks predicted;  // B_K * prod B_{L_k}
    GradedRanks direct;     // shifted reduced homology of the composition
    bool pass = false;
};

inline BettiPolynomialReport composition_betti_polynomial(const SimplicialComplex& K,
                                                          const std::vector<SimplicialComplex>& Ls,
                                                          const RingSpec& ring) {
    BettiPolynomialReport rep;
    rep.predicted = betti_polynomial(K, ring);
    for (const auto& L : Ls) rep.predicted = graded_tensor(rep.predicted, betti_polynomial(L, ring));
    rep.direct = reduced_homology(compose(K, Ls), ring).shifted(1);
    rep.pass = (rep.direct == rep.predicted);
    return rep;
}

// ---------------------------------------------------------------------------
// Homology spheres.

struct SphereCheck {
    bool spherical = false;           // one rank-1 reduced class, torsion-free
    bool homological_sphere = false;  // every link (including the whole) spherical
};

inline bool is_spherical(const SimplicialComplex& L) {
    if (L.is_void()) return false;
    GradedRanks h = reduced_homology(L, RingSpec::Z());
    if (!h.torsion.empty()) return false;
    long long total = 0;
    for (const auto& [d, v] : h.rank) total += v;
    return total == 1;
}

inline SphereCheck sphere_check(const SimplicialComplex& L) {
    SphereCheck out;
    out.spherical = is_spherical(L);
    if (L.is_void()) return out;
    out.homological_sphere = true;
    for (Mask f : L.faces()) {
        if (!is_spherical(link(L, f))) {
            out.homological_sphere = false;
            break;
        }
    }
    return out;
}

}  // namespace polyjoin
