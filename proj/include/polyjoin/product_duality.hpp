#pragma once

// Rank decompositions of polyhedral product spaces (unions of blockwise
// products over the faces of a control complex), the sphere-pair Betti
// calculator with its complementary table, the graded-rank duality check
// between the two, and the staircase-model oracle comparison.
//
// Conventions, deliberately distinct from the join-side engine: characters
// here are of the map induced on UNREDUCED homology and enter UNSHIFTED; the
// only shifted object is the control complex's table (entry degree a holds
// the restriction's reduced Betti number at a-1).

#include <string>
#include <utility>
#include <vector>

#include "polyjoin/chain_complex.hpp"
#include "polyjoin/errors.hpp"
#include "polyjoin/hochster.hpp"
#include "polyjoin/identities.hpp"
#include "polyjoin/inclusion.hpp"
#include "polyjoin/induced_map.hpp"
#include "polyjoin/ring.hpp"
#include "polyjoin/simplicial_complex.hpp"
#include "polyjoin/staircase.hpp"

namespace polyjoin {

// Characters (coker/ker/im per degree) of the map induced on unreduced
// homology by the inclusion pair.sub -> pair.total.
inline CharacterRanks character_ranks_unreduced(const SimplicialPair& pair, const RingSpec& ring) {
    BasedChainComplex src = simplicial_chains(pair.sub, ring, /*reduced=*/false);
    BasedChainComplex tgt = simplicial_chains(pair.total, ring, /*reduced=*/false);
    ChainMap cm = chain_map_from_labels(src, tgt);
    InducedRanks r = induced_homology_ranks(cm);
    return CharacterRanks{r.coker, r.kernel, r.image};
}

struct DecompositionRanks {
    GradedRanks hat;  // image part: one convolved character term per face of K
    GradedRanks bar;  // kernel part: table-weighted terms over pairs with omega nonempty
};

inline GradedRanks total_ranks(const DecompositionRanks& d) { return graded_sum(d.hat, d.bar); }

// The two-part rank decomposition of the polyhedral product space of
// (pair_k) over K: hat collects the (sigma, {}) terms (sigma a face of K),
// bar the (sigma, omega) terms with omega nonempty, each term being the
// K-table entry convolved with unshifted unreduced characters (coker for
// sigma-factors, ker for omega-factors, im otherwise).
inline DecompositionRanks decomposition_55(const SimplicialComplex& K,
                                           const std::vector<SimplicialPair>& pairs,
                                           const RingSpec& ring) {
    if (!ring.is_field())
        throw unsupported_ring_error("decomposition_55: field coefficients required");
    if (static_cast<std::size_t>(K.ground().size()) != pairs.size())
        throw invalid_input_error("decomposition_55: one pair per K vertex required");

    std::vector<CharacterRanks> chars;
    chars.reserve(pairs.size());
    for (const auto& p : pairs) chars.push_back(character_ranks_unreduced(p, ring));

    std::vector<IndexPair> hat_pairs, bar_pairs;
    for (const IndexPair& ip : enumerate_index_pairs(K.ground(), PairFamily::all_pairs)) {
        (ip.omega.empty() ? hat_pairs : bar_pairs).push_back(ip);
    }
    DecompositionRanks out;
    out.hat = predicted_homology_from_table(sigma_omega_table(K, ring, hat_pairs), chars,
                                            K.ground(), /*character_shift=*/0);
    out.bar = predicted_homology_from_table(sigma_omega_table(K, ring, bar_pairs), chars,
                                            K.ground(), /*character_shift=*/0);
    return out;
}

// ---------------------------------------------------------------------------
// Sphere pairs.

// One (r_k, q_k) entry per factor: the sphere pair (S^{r_k+1}, S^{q_k}).
struct SpherePairSpec {
    std::vector<std::pair<int, int>> rq;

    explicit SpherePairSpec(std::vector<std::pair<int, int>> entries) : rq(std::move(entries)) {
        for (const auto& [r, q] : rq)
            if (q < 0 || q > r)
                throw invalid_input_error("SpherePairSpec: need 0 <= q <= r per factor");
    }

    int ambient_dimension() const {  // r = sum of (r_k + 1)
        int r = 0;
        for (const auto& [rk, qk] : rq) r += rk + 1;
        return r;
    }

    SpherePairSpec complementary() const {  // q_k -> r_k - q_k
        std::vector<std::pair<int, int>> c;
        c.reserve(rq.size());
        for (const auto& [rk, qk] : rq) c.emplace_back(rk, rk - qk);
        return SpherePairSpec(std::move(c));
    }
};

namespace detail {

inline DecompositionRanks sphere_pair_side(const SimplicialComplex& K, const SpherePairSpec& spec) {
    const GroundSet& g = K.ground();
    if (static_cast<std::size_t>(g.size()) != spec.rq.size())
        throw invalid_input_error("sphere_pair_betti: one (r, q) entry per K vertex");
    RingSpec q_ring = RingSpec::Q();
    DecompositionRanks out;

    auto weight_sigma = [&](Mask sigma) {
        int t = 0;
        for (int k = 0; k < g.size(); ++k)
            if (sigma & bit(k)) t += spec.rq[static_cast<std::size_t>(k)].first + 1;
        return t;
    };
    auto weight_omega = [&](Mask omega) {
        int t = 0;
        for (int k = 0; k < g.size(); ++k)
            if (omega & bit(k)) t += spec.rq[static_cast<std::size_t>(k)].second;
        return t;
    };

    for (Mask f : K.faces()) out.hat.add_rank(weight_sigma(f), 1);

    for (const IndexPair& ip : enumerate_index_pairs(g, PairFamily::all_pairs)) {
        if (ip.omega.empty()) continue;
        Mask sigma = g.mask_of(ip.sigma);
        Mask omega = g.mask_of(ip.omega);
        int t = weight_sigma(sigma) + weight_omega(omega);
        GradedRanks h = reduced_homology(restriction(K, sigma, omega), q_ring);
        out.bar = graded_sum(out.bar, h.shifted(t + 1));
    }
    return out;
}

}  // namespace detail

// Closed-form rank tables for the polyhedral product space of sphere pairs
// over K (first component) and for its complement model: the dual complex
// with every q_k replaced by r_k - q_k (second component).
inline std::pair<DecompositionRanks, DecompositionRanks> sphere_pair_betti(
    const SimplicialComplex& K, const SpherePairSpec& spec) {
    return {detail::sphere_pair_side(K, spec),
            detail::sphere_pair_side(dual(K), spec.complementary())};
}

// Simplicial realization of the sphere pair (S^{r+1}, S^q): the boundary of
// the simplex on r+3 fresh ids (dimension r+1) containing the boundary of
// the simplex on the first q+2 of those ids (dimension q), on one universe.
inline SimplicialPair sphere_pair_realization(int r, int q, int first_id) {
    if (q < 0 || q > r) throw invalid_input_error("sphere_pair_realization: need 0 <= q <= r");
    std::vector<int> ids(static_cast<std::size_t>(r) + 3);
    for (int i = 0; i < r + 3; ++i) ids[static_cast<std::size_t>(i)] = first_id + i;
    GroundSet g(ids);
    SimplicialComplex total = boundary_complex(g);
    std::vector<int> inner(ids.begin(), ids.begin() + (q + 2));
    std::vector<std::vector<int>> facets;
    for (std::size_t drop = 0; drop < inner.size(); ++drop) {
        std::vector<int> f;
        for (std::size_t i = 0; i < inner.size(); ++i)
            if (i != drop) f.push_back(inner[i]);
        facets.push_back(std::move(f));
    }
    SimplicialComplex sub = build(ComplexKind::facets, g, facets);
    return SimplicialPair(total, sub);
}

// One realization per spec entry, on consecutive disjoint universes.
inline std::vector<SimplicialPair> sphere_pair_realizations(const SpherePairSpec& spec,
                                                            int first_id = 1) {
    std::vector<SimplicialPair> out;
    int next = first_id;
    for (const auto& [r, q] : spec.rq) {
        out.push_back(sphere_pair_realization(r, q, next));
        next += r + 3;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Duality between the sphere-pair table and its complement's.

inline CheckResult duality_check_56(const SimplicialComplex& K, const SpherePairSpec& spec) {
    const GroundSet& g = K.ground();
    int r = spec.ambient_dimension();
    auto [M, Mc] = sphere_pair_betti(K, spec);

    // bar_p(M) = bar_{r-p-1}(Mc), as whole tables.
    if (!(Mc.bar == mirrored(M.bar, r - 1)))
        return CheckResult::fail("bar tables are not mirror images: M " + M.bar.str() + ", Mc " +
                                 Mc.bar.str());

    // hat correspondence through complementation: a subset contributes weight
    // p to M's hat iff it is a face of K; its complement, of weight r - p,
    // contributes to Mc's hat iff it is NOT a face of the dual.  So per
    // weight w: hat_w(M) + hat_{r-w}(Mc) = #{subsets of weight w}.
    std::map<int, long long> subsets_by_weight;
    Mask full = g.full_mask();
    for (Mask s = 0;; s = (s - full) & full) {
        int w = 0;
        for (int k = 0; k < g.size(); ++k)
            if (s & bit(k)) w += spec.rq[static_cast<std::size_t>(k)].first + 1;
        ++subsets_by_weight[w];
        if (s == full) break;
    }
    for (const auto& [w, count] : subsets_by_weight) {
        long long lhs = M.hat.rank_at(w) + Mc.hat.rank_at(r - w);
        if (lhs != count)
            return CheckResult::fail("hat complementation fails at weight " + std::to_string(w) +
                                     ": " + std::to_string(lhs) + " != " + std::to_string(count));
    }

    // Term-by-term refinement: for every (sigma, omega) with omega nonempty,
    // the complementary weights satisfy t + t' = r - |omega| and the two
    // restriction homologies are degree-mirrored (the field duality).
    SimplicialComplex Kd = dual(K);
    SpherePairSpec cspec = spec.complementary();
    RingSpec q_ring = RingSpec::Q();
    for (const IndexPair& ip : enumerate_index_pairs(g, PairFamily::all_pairs)) {
        if (ip.omega.empty()) continue;
        Mask sigma = g.mask_of(ip.sigma);
        Mask omega = g.mask_of(ip.omega);
        Mask sigma_tilde = full & ~(sigma | omega);
        int t = 0, tp = 0;
        for (int k = 0; k < g.size(); ++k) {
            const auto& [rk, qk] = spec.rq[static_cast<std::size_t>(k)];
            if (sigma & bit(k)) t += rk + 1;
            if (omega & bit(k)) t += qk;
            if (sigma_tilde & bit(k)) tp += rk + 1;
            if (omega & bit(k)) tp += cspec.rq[static_cast<std::size_t>(k)].second;
        }
        int w = static_cast<int>(ip.omega.size());
        if (t + tp != r - w)
            return CheckResult::fail("weight identity t + t' = r - |omega| fails at sigma={" +
                                     join_ids(ip.sigma) + "} omega={" + join_ids(ip.omega) + "}");
        GradedRanks hK = reduced_homology(restriction(K, sigma, omega), q_ring);
        GradedRanks hD = reduced_homology(restriction(Kd, sigma_tilde, omega), q_ring);
        if (!(hD == mirrored(hK, w - 3)))
            return CheckResult::fail("restriction duality fails at sigma={" + join_ids(ip.sigma) +
                                     "} omega={" + join_ids(ip.omega) + "}");
    }
    return CheckResult::ok();
}

// ---------------------------------------------------------------------------
// Staircase oracle.

struct OracleReport {
    bool pass = false;
    GradedRanks direct;      // staircase-model homology
    GradedRanks decomposed;  // hat (+) bar
    std::string detail;
};

// Direct unreduced homology of the product-triangulation model of the
// polyhedral product space, against hat (+) bar of the decomposition.
inline OracleReport oracle_compare_55(const SimplicialComplex& K,
                                      const std::vector<SimplicialPair>& pairs,
                                      const RingSpec& ring,
                                      std::size_t max_faces = 100000) {
    std::vector<SimplicialComplex> totals, subs;
    for (const auto& p : pairs) {
        totals.push_back(p.total);
        subs.push_back(p.sub);
    }
    StaircaseComplex model = staircase_product(totals, &K, &subs, max_faces);
    OracleReport rep;
    rep.direct = staircase_homology(model, ring, /*reduced=*/false);
    rep.decomposed = total_ranks(decomposition_55(K, pairs, ring));
    rep.pass = (rep.direct == rep.decomposed);
    if (!rep.pass)
        rep.detail =
            "staircase " + rep.direct.str() + " vs decomposition " + rep.decomposed.str();
    return rep;
}

}  // namespace polyjoin
