#pragma once

// (sigma, omega)-indexed homology tables of a simplicial complex, character
// ranks of sub-complex inclusions, integer split verdicts, and the
// combinatorial duality sweep relating a complex's table to its dual's.
//
// Convention, used everywhere downstream: the table entry at (sigma, omega)
// holds, at degree p, the reduced Betti number in degree p-1 of the
// restriction complex K_{sigma,omega} (torsion recorded with the same shift).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyjoin/chain_complex.hpp"
#include "polyjoin/errors.hpp"
#include "polyjoin/identities.hpp"
#include "polyjoin/induced_map.hpp"
#include "polyjoin/ring.hpp"
#include "polyjoin/simplicial_complex.hpp"

namespace polyjoin {

inline constexpr int kMaxTableGround = 12;  // full pair enumeration is 3^n

enum class PairFamily {
    all_pairs,  // every disjoint (sigma, omega)
    omega_only  // sigma = {} only
};

inline std::string to_string(PairFamily f) {
    return f == PairFamily::all_pairs ? "X" : "R";
}

// Every admissible (sigma, omega) pair for the family, as sorted id vectors.
inline std::vector<IndexPair> enumerate_index_pairs(const GroundSet& g, PairFamily family) {
    int n = g.size();
    if (n > kMaxTableGround)
        throw resource_limit_error("enumerate_index_pairs: ground size " + std::to_string(n) +
                                   " exceeds cap " + std::to_string(kMaxTableGround));
    std::vector<IndexPair> out;
    Mask full = g.full_mask();
    for (Mask omega = 0;; omega = (omega - full) & full) {
        Mask rest = full & ~omega;
        if (family == PairFamily::omega_only) {
            out.push_back({{}, g.ids_of(omega)});
        } else {
            for (Mask sigma = 0;; sigma = (sigma - rest) & rest) {
                out.push_back({g.ids_of(sigma), g.ids_of(omega)});
                if (sigma == rest) break;
            }
        }
        if (omega == full) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// One table entry: reduced homology of the restriction, degrees shifted +1.
inline GradedRanks table_entry(const SimplicialComplex& K, const IndexPair& pair,
                               const RingSpec& ring) {
    return reduced_homology(restriction(K, pair), ring).shifted(1);
}

struct SigmaOmegaTable {
    RingSpec ring = RingSpec::Z();
    PairFamily family = PairFamily::all_pairs;
    std::map<IndexPair, GradedRanks> entries;

    const GradedRanks& at(const IndexPair& p) const {
        static const GradedRanks kZero{};
        auto it = entries.find(p);
        return it == entries.end() ? kZero : it->second;
    }
};

inline SigmaOmegaTable sigma_omega_table(const SimplicialComplex& K, const RingSpec& ring,
                                         const std::vector<IndexPair>& pairs,
                                         PairFamily family = PairFamily::all_pairs) {
    SigmaOmegaTable t;
    t.ring = ring;
    t.family = family;
    for (const IndexPair& p : pairs) {
        if (family == PairFamily::omega_only && !p.sigma.empty())
            throw invalid_input_error("sigma_omega_table: family R admits only sigma = {}");
        t.entries.emplace(p, table_entry(K, p, ring));
    }
    return t;
}

inline SigmaOmegaTable sigma_omega_table(const SimplicialComplex& K, const RingSpec& ring,
                                         PairFamily family = PairFamily::all_pairs) {
    return sigma_omega_table(K, ring, enumerate_index_pairs(K.ground(), family), family);
}

// ---------------------------------------------------------------------------
// Character ranks of the inclusion of a sub-complex.

struct CharacterRanks {
    GradedRanks alpha;  // cokernel ranks per degree
    GradedRanks gamma;  // kernel ranks per degree
    GradedRanks eta;    // image ranks per degree
};

// Ranks of coker/ker/im of the map induced on (reduced or unreduced)
// homology by the inclusion pair.sub -> pair.total.  Field rings compute
// directly; the integer ring is accepted and yields free-part ranks.
inline CharacterRanks character_ranks(const SimplicialPair& pair, const RingSpec& ring,
                                      bool reduced = true) {
    BasedChainComplex src = simplicial_chains(pair.sub, ring, reduced);
    BasedChainComplex tgt = simplicial_chains(pair.total, ring, reduced);
    ChainMap cm = chain_map_from_labels(src, tgt);
    InducedRanks r = induced_homology_ranks(cm);
    return CharacterRanks{r.coker, r.kernel, r.image};
}

// Integer split verdict for the inclusion pair.sub -> pair.total on reduced
// homology.
inline SplitReport split_status(const SimplicialPair& pair) {
    RingSpec z = RingSpec::Z();
    BasedChainComplex src = simplicial_chains(pair.sub, z, /*reduced=*/true);
    BasedChainComplex tgt = simplicial_chains(pair.total, z, /*reduced=*/true);
    ChainMap cm = chain_map_from_labels(src, tgt);
    return split_analysis(cm);
}

// Total-family verdicts: the split test applied to every restricted pair
// (total_{sigma,omega}, sub_{sigma,omega}).  Restrictions with a void total
// complex are trivially split and recorded as such.
inline std::map<IndexPair, SplitReport> split_status_total(const SimplicialPair& pair) {
    std::map<IndexPair, SplitReport> out;
    for (const IndexPair& ip : enumerate_index_pairs(pair.total.ground(), PairFamily::all_pairs)) {
        SimplicialComplex tot = restriction(pair.total, ip);
        SimplicialComplex sub = restriction(pair.sub, ip);
        if (tot.is_void()) {
            SplitReport r;
            r.verdict = SplitVerdict::split;
            out.emplace(ip, std::move(r));
            continue;
        }
        out.emplace(ip, split_status(SimplicialPair(tot, sub)));
    }
    return out;
}

inline SplitVerdict combined_verdict(const std::map<IndexPair, SplitReport>& reports) {
    bool undet = false;
    for (const auto& [ip, r] : reports) {
        if (r.verdict == SplitVerdict::not_split) return SplitVerdict::not_split;
        if (r.verdict == SplitVerdict::undetermined) undet = true;
    }
    return undet ? SplitVerdict::undetermined : SplitVerdict::split;
}

// ---------------------------------------------------------------------------
// Duality sweep.

// Ranks reflected through degree: result rank at c - d equals input rank at d.
inline GradedRanks mirrored(const GradedRanks& r, int c) {
    GradedRanks out;
    for (const auto& [d, v] : r.rank) out.add_rank(c - d, v);
    for (const auto& [d, tors] : r.torsion)
        for (const auto& t : tors) out.add_torsion(c - d, t);
    return out;
}

// For every disjoint (sigma, omega) with omega nonempty and every field in
// `rings`: the restriction's reduced Betti vector, read downward from degree
// |omega| - 3, must equal the dual complex's complementary restriction's.
inline CheckResult alexander_dual_check(const SimplicialComplex& K,
                                        const std::vector<RingSpec>& rings = {
                                            RingSpec::Q(), RingSpec::Fp(2), RingSpec::Fp(3)}) {
    if (K.ground().size() == 0)
        throw invalid_input_error("alexander_dual_check: ground must be nonempty");
    for (const RingSpec& ring : rings)
        if (!ring.is_field())
            throw unsupported_ring_error("alexander_dual_check: field rings only");

    SimplicialComplex Kd = dual(K);
    Mask full = K.ground().full_mask();
    RingSpec z = RingSpec::Z();
    for (const IndexPair& ip : enumerate_index_pairs(K.ground(), PairFamily::all_pairs)) {
        if (ip.omega.empty()) continue;  // no isomorphism is claimed there
        Mask sigma = K.ground().mask_of(ip.sigma);
        Mask omega = K.ground().mask_of(ip.omega);
        Mask sigma_tilde = full & ~(sigma | omega);
        int w = static_cast<int>(ip.omega.size());
        // Build each side's chain complex once; re-ring per field.
        BasedChainComplex cK = simplicial_chains(restriction(K, sigma, omega), z, true);
        BasedChainComplex cD = simplicial_chains(restriction(Kd, sigma_tilde, omega), z, true);
        for (const RingSpec& ring : rings) {
            GradedRanks lhs = homology(cK.with_ring(ring));
            GradedRanks rhs = homology(cD.with_ring(ring));
            if (!(rhs == mirrored(lhs, w - 3))) {
                return CheckResult::fail(
                    "duality mismatch at sigma={" + join_ids(ip.sigma) + "} omega={" +
                    join_ids(ip.omega) + "} over " + ring.str() + ": K side " + lhs.str() +
                    ", dual side " + rhs.str());
            }
        }
    }
    return CheckResult::ok();
}

}  // namespace polyjoin
