#pragma once

// Seeded verification sweeps shared by the CLI `verify` subcommand and the
// acceptance binary.  Every sweep draws reproducible instances from a base
// seed, runs one identity or comparison check per instance, and reports the
// pass count together with the first failing instance (index and derived
// seed, enough to re-run it standalone).

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyjoin/chain_complex.hpp"
#include "polyjoin/errors.hpp"
#include "polyjoin/hochster.hpp"
#include "polyjoin/identities.hpp"
#include "polyjoin/inclusion.hpp"
#include "polyjoin/induced_map.hpp"
#include "polyjoin/product_duality.hpp"
#include "polyjoin/random_gen.hpp"
#include "polyjoin/ring.hpp"
#include "polyjoin/set_model.hpp"
#include "polyjoin/simplicial_complex.hpp"
#include "polyjoin/staircase.hpp"

namespace polyjoin {

struct SweepReport {
    std::string id;
    std::uint64_t seed = 0;
    long long instances = 0;
    long long failures = 0;
    std::string detail;  // first failure: instance index, derived seed, message

    bool pass() const { return failures == 0 && instances > 0; }

    std::string str() const {
        std::string s = id + ": " + std::to_string(instances - failures) + "/" +
                        std::to_string(instances) + " instances pass (seed " +
                        std::to_string(seed) + ")";
        if (failures > 0) s += "; first failure: " + detail;
        return s;
    }
};

namespace detail {

// splitmix64 step: one well-mixed sub-seed per instance index.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline void record_failure(SweepReport& rep, long long index, std::uint64_t inst_seed,
                           const std::string& what) {
    ++rep.failures;
    if (rep.detail.empty())
        rep.detail = "instance " + std::to_string(index) + " (instance seed " +
                     std::to_string(inst_seed) + "): " + what;
}

inline const double kDensities[5] = {0.15, 0.3, 0.5, 0.7, 0.85};

// Random complex on {1..n} with a rotation of edge cases mixed in (void,
// empty-face, full simplex, boundary) so degenerate inputs are always swept.
inline SimplicialComplex sample_complex(int n, long long index, RandomSource& src,
                                        bool allow_void = true) {
    GroundSet g = GroundSet::range(n);
    switch (index % 10) {
        case 0: if (allow_void) return SimplicialComplex::make_void(g); break;
        case 1: return empty_complex(g);
        case 2: return full_simplex(g);
        case 3: return boundary_complex(g);
        default: break;
    }
    return gen_random_complex(n, kDensities[src.next_int(0, 4)], src.next_u64());
}

// Copy of K on the ground {first_id, ..., first_id + n - 1}.
inline SimplicialComplex offset_copy(const SimplicialComplex& K, int first_id) {
    std::vector<int> ids;
    ids.reserve(static_cast<std::size_t>(K.ground().size()));
    for (int i = 0; i < K.ground().size(); ++i) ids.push_back(first_id + i);
    return relabel(K, GroundSet(ids));
}

// Random simplicial pair on {first_id, ...}; sub is occasionally void or the
// whole total so both extremes stay in the sweep.
inline SimplicialPair sample_pair_at(int n, int first_id, RandomSource& src) {
    SimplicialComplex X =
        offset_copy(gen_random_complex(n, kDensities[src.next_int(0, 4)], src.next_u64()), first_id);
    int mode = src.next_int(0, 9);
    if (mode == 0) return SimplicialPair(X, SimplicialComplex::make_void(X.ground()));
    if (mode == 1) return SimplicialPair(X, X);
    return SimplicialPair(X, gen_random_subcomplex(X, src.next_int(0, 2), src));
}

// Disjoint (sigma, omega) on g with omega forced nonempty.
inline IndexPair sample_index_pair_omega(const GroundSet& g, RandomSource& src) {
    IndexPair ip = gen_random_index_pair(g, src);
    if (!ip.omega.empty()) return ip;
    if (!ip.sigma.empty()) {
        std::vector<int> sigma(ip.sigma.begin(), ip.sigma.end() - 1);
        return IndexPair(std::move(sigma), {ip.sigma.back()});
    }
    return IndexPair({}, {g.universe().front()});
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Exhaustive enumeration of small complexes.
//
// A complex on {1..n} is a downward-closed set of face masks, encoded as a
// bitset over the 2^n subsets.  Families on n elements are exactly the pairs
// (g, h) of families on n-1 elements with h contained in g (h holds the faces
// through element n).  Counts for n = 0..5: 2, 3, 6, 20, 168, 7581.

inline std::vector<std::uint64_t> downward_closed_families(int n) {
    if (n < 0 || n > 5)
        throw resource_limit_error("downward_closed_families: need 0 <= n <= 5");
    std::vector<std::uint64_t> cur = {0ull, 1ull};  // void and the empty-face complex
    for (int k = 0; k < n; ++k) {
        int half = 1 << k;
        std::vector<std::uint64_t> next;
        next.reserve(cur.size() * 4);
        for (std::uint64_t g : cur)
            for (std::uint64_t h : cur)
                if ((h & g) == h) next.push_back(g | (h << half));
        cur = std::move(next);
    }
    return cur;
}

inline SimplicialComplex complex_from_face_bitset(const GroundSet& g, std::uint64_t bits) {
    if (g.size() < 0 || g.size() > 6)
        throw resource_limit_error("complex_from_face_bitset: ground too large");
    if (bits == 0) return SimplicialComplex::make_void(g);
    std::vector<Mask> faces;
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << g.size()); ++f)
        if ((bits >> f) & 1) faces.push_back(static_cast<Mask>(f));
    return SimplicialComplex::from_faces(g, std::move(faces));
}

// ---------------------------------------------------------------------------
// Sweeps over the set-level identities.

// Dual complex laws: involution and both De Morgan identities.
inline SweepReport sweep_dual_laws(std::uint64_t seed, long long trials = 1000, int max_n = 8) {
    SweepReport rep{"dual-laws", seed};
    for (long long i = 0; i < trials; ++i) {
        std::uint64_t s = detail::mix_seed(seed, static_cast<std::uint64_t>(i));
        RandomSource src(s);
        int n = src.next_int(1, max_n);
        SimplicialComplex K1 = detail::sample_complex(n, i, src);
        SimplicialComplex K2 = detail::sample_complex(n, i / 10, src);
        ++rep.instances;
        CheckResult r = check_dual_demorgan(K1, K2);
        if (!r.pass) detail::record_failure(rep, i, s, r.detail);
    }
    return rep;
}

// Complement law for polyhedral products of finite-set pairs.
inline SweepReport sweep_complement(std::uint64_t seed, long long trials = 500, int max_m = 4,
                                    int max_x = 3) {
    SweepReport rep{"thm2.4", seed};
    for (long long i = 0; i < trials; ++i) {
        std::uint64_t s = detail::mix_seed(seed, static_cast<std::uint64_t>(i));
        RandomSource src(s);
        int m = src.next_int(1, max_m);
        GroundSet g = GroundSet::range(m);
        SimplicialComplex K;
        switch (i % 4) {  // the three degenerate control complexes, then random
            case 0: K = SimplicialComplex::make_void(g); break;
            case 1: K = empty_complex(g); break;
            case 2: K = full_simplex(g); break;
            default:
                K = gen_random_complex(m, detail::kDensities[src.next_int(0, 4)], src.next_u64());
        }
        std::vector<FiniteSetPair> pairs;
        pairs.reserve(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) pairs.push_back(gen_random_set_pair(max_x, src));
        ++rep.instances;
        CheckResult r = verify_complement(K, pairs);
        if (!r.pass) detail::record_failure(rep, i, s, r.detail);
    }
    return rep;
}

// Duality of restrictions against restriction of the dual.
inline SweepReport sweep_dual_restriction(std::uint64_t seed, long long trials = 300,
                                          int max_n = 6) {
    SweepReport rep{"thm2.6", seed};
    for (long long i = 0; i < trials; ++i) {
        std::uint64_t s = detail::mix_seed(seed, static_cast<std::uint64_t>(i));
        RandomSource src(s);
        int n = src.next_int(1, max_n);
        SimplicialComplex K = detail::sample_complex(n, i, src);
        IndexPair ip = detail::sample_index_pair_omega(K.ground(), src);
        ++rep.instances;
        CheckResult r = check_dual_restriction(K, K.ground().mask_of(ip.sigma),
                                               K.ground().mask_of(ip.omega));
        if (!r.pass)
            detail::record_failure(rep, i, s,
                                   "sigma={" + join_ids(ip.sigma) + "} omega={" +
                                       join_ids(ip.omega) + "}: " + r.detail);
    }
    return rep;
}

// Substitution law: iterated polyhedral products of finite-set pairs agree
// with one product over the polyhedral join.
inline SweepReport sweep_substitution(std::uint64_t seed, long long trials = 100,
                                      std::size_t tuple_cap = 10000) {
    SweepReport rep{"thm2.9", seed};
    for (long long i = 0; i < trials; ++i) {
        std::uint64_t s = detail::mix_seed(seed, static_cast<std::uint64_t>(i));
        RandomSource src(s);
        int m = src.next_int(1, 3);
        SimplicialComplex K = detail::sample_complex(m, i, src);

        std::vector<SimplicialPair> pairs;
        int total_n = 0;
        for (int k = 0; k < m; ++k) {
            int nk = src.next_int(1, 3);
            pairs.push_back(detail::sample_pair_at(nk, total_n + 1, src));
            total_n += nk;
        }
        // Keep the tuple space within budget: sets of size up to 3 when the
        // joined universe is small, 2 otherwise (2^9 and 3^7 both fit 10^4).
        int max_x = (total_n <= 7) ? 3 : 2;
        std::vector<FiniteSetPair> inner;
        inner.reserve(static_cast<std::size_t>(total_n));
        for (int v = 0; v < total_n; ++v) inner.push_back(gen_random_set_pair(max_x, src));

        ++rep.instances;
        try {
            CheckResult r = verify_substitution(K, pairs, inner, tuple_cap);
            if (!r.pass) detail::record_failure(rep, i, s, r.detail);
        } catch (const resource_limit_error& e) {
            detail::record_failure(rep, i, s, std::string("resource limit: ") + e.what());
        }
    }
    return rep;
}

// Restriction and link of a polyhedral join against the blockwise forms.
inline SweepReport sweep_polyjoin_links(std::uint64_t seed, long long trials = 300) {
    SweepReport rep{"thm2.10", seed};
    for (long long i = 0; i < trials; ++i) {
        std::uint64_t s = detail::mix_seed(seed, static_cast<std::uint64_t>(i));
        RandomSource src(s);
        int m = src.next_int(1, 3);
        SimplicialComplex K = detail::sample_complex(m, i, src);
        std::vector<SimplicialPair> pairs;
        int total_n = 0;
        for (int k = 0; k < m; ++k) {
            int nk = src.next_int(1, 3);
            pairs.push_back(detail::sample_pair_at(nk, total_n + 1, src));
            total_n += nk;
        }
        GroundSet joined = GroundSet::range(total_n);

        IndexPair ip = gen_random_index_pair(joined, src);
        Mask sigma_link = 0;
        for (int b = 0; b < total_n; ++b)
            if (src.next_bool(0.35)) sigma_link |= bit(b);

        ++rep.instances;
        CheckResult r =
            check_polyjoin_restriction(K, pairs, joined.mask_of(ip.sigma), joined.mask_of(ip.omega));
        if (r.pass) {
            CheckResult r2 = check_polyjoin_link(K, pairs, sigma_link);
            if (!r2.pass) detail::record_failure(rep, i, s, r2.detail);
        } else {
            detail::record_failure(rep, i, s, r.detail);
        }
    }
    return rep;
}

// Dual of a composition against the composition of the duals.
inline SweepReport sweep_composition_dual(std::uint64_t seed, long long trials = 300) {
    SweepReport rep{"thm2.12", seed};
    for (long long i = 0; i < trials; ++i) {
        std::uint64_t s = detail::mix_seed(seed, static_cast<std::uint64_t>(i));
        RandomSource src(s);
        int m = src.next_int(1, 3);
        SimplicialComplex K = detail::sample_complex(m, i, src);
        std::vector<SimplicialComplex> parts;
        int offset = 0;
        for (int k = 0; k < m; ++k) {
            int nk = src.next_int(1, 3);
            SimplicialComplex L =
                (src.next_int(0, 9) == 0)
                    ? SimplicialComplex::make_void(GroundSet::range(nk))
                    : gen_random_complex(nk, detail::kDensities[src.next_int(0, 4)],
                                         src.next_u64());
            parts.push_back(detail::offset_copy(L, offset + 1));
            offset += nk;
        }
        ++rep.instances;
        CheckResult r = check_composition_dual(K, parts);
        if (!r.pass) detail::record_failure(rep, i, s, r.detail);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Sweeps over the homology formulas.

// Direct homology of the deviation-filtered tensor of general based families
// against the table-weighted character prediction (characters as given).
inline SweepReport sweep_inclusion_general(std::uint64_t seed, long long trials = 60) {
    SweepReport rep{"thm3.7", seed};
    const RingSpec field_rings[3] = {RingSpec::Q(), RingSpec::Fp(2), RingSpec::Fp(3)};
    for (long long i = 0; i < trials; ++i) {
        std::uint64_t s = detail::mix_seed(seed, static_cast<std::uint64_t>(i));
        RandomSource src(s);
        int m = 1 + static_cast<int>(i % 3);
        SimplicialComplex K = detail::sample_complex(m, i, src);

        // Factor recipes, replayed per ring: 0 = identity on suspended reduced
        // chains, 1 = identity on unreduced chains, 2 = simplicial pair.
        std::vector<int> kind(static_cast<std::size_t>(m));
        std::vector<SimplicialComplex> shape;
        std::vector<SimplicialPair> pair_shape(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) {
            kind[static_cast<std::size_t>(k)] = src.next_int(0, 2);
            int nk = src.next_int(1, 4);
            shape.push_back(
                gen_random_complex(nk, detail::kDensities[src.next_int(0, 4)], src.next_u64()));
            if (kind[static_cast<std::size_t>(k)] == 2)
                pair_shape[static_cast<std::size_t>(k)] =
                    SimplicialPair(shape.back(),
                                   gen_random_subcomplex(shape.back(), src.next_int(0, 2), src));
        }
        auto family_over = [&](const RingSpec& ring) {
            std::vector<BasedInclusion> fam;
            fam.reserve(static_cast<std::size_t>(m));
            for (int k = 0; k < m; ++k) {
                const SimplicialComplex& L = shape[static_cast<std::size_t>(k)];
                switch (kind[static_cast<std::size_t>(k)]) {
                    case 0:
                        fam.push_back(
                            BasedInclusion::identity(suspend(simplicial_chains(L, ring, true))));
                        break;
                    case 1:
                        fam.push_back(
                            BasedInclusion::identity(simplicial_chains(L, ring, false)));
                        break;
                    default:
                        fam.push_back(
                            BasedInclusion::from_pair(pair_shape[static_cast<std::size_t>(k)], ring));
                }
            }
            return fam;
        };

        ++rep.instances;
        std::string what;
        for (const RingSpec& ring : field_rings) {
            CompareReport cr = compare_inclusion_general(K, family_over(ring));
            if (!cr.pass) {
                what = "over " + ring.str() + ": " + cr.detail;
                break;
            }
        }
        if (what.empty()) {
            std::vector<BasedInclusion> fam_z = family_over(RingSpec::Z());
            bool all_split = true;
            for (const auto& bi : fam_z)
                if (bi.split().verdict != SplitVerdict::split) all_split = false;
            if (all_split) {
                CompareReport cr = compare_inclusion_general(K, fam_z);
                if (!cr.pass) what = "over Z: " + cr.detail;
            }
        }
        if (!what.empty()) detail::record_failure(rep, i, s, what);
    }
    return rep;
}

// Simplicial-pair version with suspended reduced chains and +1-shifted
// characters; instances are re-drawn until every factor certifies split over
// the integers, then checked over Q, F2, F3, and Z.
inline SweepReport sweep_inclusion_pairs(std::uint64_t seed, long long trials = 150) {
    SweepReport rep{"thm3.9", seed};
    const RingSpec rings[4] = {RingSpec::Q(), RingSpec::Fp(2), RingSpec::Fp(3), RingSpec::Z()};
    for (long long i = 0; i < trials; ++i) {
        std::uint64_t s = detail::mix_seed(seed, static_cast<std::uint64_t>(i));
        RandomSource src(s);
        int m = 1 + static_cast<int>(i % 3);
        SimplicialComplex K = detail::sample_complex(m, i, src);

        std::vector<SimplicialPair> pairs;
        for (int k = 0; k < m; ++k) {
            int nk = src.next_int(1, 4);
            SimplicialPair p = detail::sample_pair_at(nk, 1, src);
            for (int tries = 0; tries < 20 && split_status(p).verdict != SplitVerdict::split;
                 ++tries)
                p = detail::sample_pair_at(nk, 1, src);
            pairs.push_back(std::move(p));
        }
        bool certified = true;
        for (const auto& p : pairs)
            if (split_status(p).verdict != SplitVerdict::split) certified = false;

        ++rep.instances;
        std::string what;
        for (const RingSpec& ring : rings) {
            if (ring.tag == RingSpec::Tag::Z && !certified) continue;
            CompareReport cr = compare_inclusion_pairs(K, pairs, ring);
            if (!cr.pass) {
                what = "over " + ring.str() + ": " + cr.detail;
                break;
            }
        }
        if (!what.empty()) detail::record_failure(rep, i, s, what);
    }
    return rep;
}

// Betti-polynomial multiplicativity of compositions, plus the homological
// sphere criterion: the composition is a homological sphere exactly when the
// outer complex is one, every inner complex is the boundary of the simplex on
// its full ground set, and the outer complex uses all of its vertices.
inline SweepReport sweep_composition_betti(std::uint64_t seed, long long trials = 100,
                                           long long sphere_trials = 60) {
    SweepReport rep{"thm3.10", seed};
    RingSpec q = RingSpec::Q();

    for (long long i = 0; i < trials; ++i) {
        std::uint64_t s = detail::mix_seed(seed, static_cast<std::uint64_t>(i));
        RandomSource src(s);
        int m = src.next_int(1, 3);
        SimplicialComplex K = detail::sample_complex(m, i, src);
        std::vector<SimplicialComplex> parts;
        int offset = 0;
        for (int k = 0; k < m; ++k) {
            int nk = src.next_int(1, 3);
            parts.push_back(detail::offset_copy(
                gen_random_complex(nk, detail::kDensities[src.next_int(0, 4)], src.next_u64()),
                offset + 1));
            offset += nk;
        }
        ++rep.instances;
        BettiPolynomialReport br = composition_betti_polynomial(K, parts, q);
        if (!br.pass)
            detail::record_failure(rep, i, s,
                                   "betti product: direct " + br.direct.str() + " vs predicted " +
                                       br.predicted.str());
    }

    // Sphere biconditional on complexes without ghost vertices.  Fixed
    // instances cover both counterexample classes (sphere outer with a
    // non-boundary inner, including homology spheres on the wrong ground; and
    // boundary inners under a non-sphere outer) plus positive cases.
    auto biconditional = [&](const SimplicialComplex& K, const std::vector<SimplicialComplex>& Ls,
                             long long index, std::uint64_t inst_seed) {
        ++rep.instances;
        bool rhs = sphere_check(K).homological_sphere;
        for (std::size_t k = 0; k < Ls.size() && rhs; ++k)
            if (!(Ls[k] == boundary_complex(Ls[k].ground()))) rhs = false;
        bool lhs = sphere_check(compose(K, Ls)).homological_sphere;
        if (lhs != rhs)
            detail::record_failure(rep, index, inst_seed,
                                   std::string("sphere biconditional: composition ") +
                                       (lhs ? "is" : "is not") + " a homological sphere but the "
                                       "factor condition says " + (rhs ? "yes" : "no"));
    };

    auto bd = [](int n, int first) {
        return detail::offset_copy(boundary_complex(GroundSet::range(n)), first);
    };
    auto fs = [](int n, int first) {
        return detail::offset_copy(full_simplex(GroundSet::range(n)), first);
    };
    long long fx = trials;
    // Positive cases.
    biconditional(boundary_complex(GroundSet::range(2)), {bd(2, 1), bd(3, 3)}, fx++, 0);
    biconditional(boundary_complex(GroundSet::range(3)), {bd(1, 1), bd(2, 2), bd(2, 4)}, fx++, 0);
    // Sphere outer, one non-boundary inner.
    biconditional(boundary_complex(GroundSet::range(2)), {fs(2, 1), bd(2, 3)}, fx++, 0);
    biconditional(boundary_complex(GroundSet::range(2)),
                  {build(ComplexKind::facets, GroundSet({1, 2, 3}), {{1}, {2}}), bd(2, 4)}, fx++,
                  0);  // two points with a ghost: spherical but not the boundary complex
    biconditional(boundary_complex(GroundSet::range(2)),
                  {build(ComplexKind::facets, GroundSet({1, 2, 3, 4}),
                         {{1, 2}, {2, 3}, {3, 4}, {1, 4}}),
                   bd(1, 5)},
                  fx++, 0);  // four-cycle: a sphere yet not the boundary of its simplex
    // Non-sphere outer, all boundary inners.
    biconditional(full_simplex(GroundSet::range(2)), {bd(2, 1), bd(2, 3)}, fx++, 0);
    biconditional(build(ComplexKind::facets, GroundSet::range(3), {{1, 2}, {2, 3}}),
                  {bd(1, 1), bd(2, 2), bd(2, 4)}, fx++, 0);
    biconditional(build(ComplexKind::facets, GroundSet::range(3), {{1}, {2}, {3}}),
                  {bd(2, 1), bd(1, 3), bd(1, 4)}, fx++, 0);

    for (long long i = 0; i < sphere_trials; ++i) {
        std::uint64_t s = detail::mix_seed(seed ^ 0xb5297a4d1b56c3a1ull, static_cast<std::uint64_t>(i));
        RandomSource src(s);
        int m = src.next_int(1, 2);
        // Ghost-free outer complex: union with the vertex skeleton.
        std::vector<std::vector<int>> verts;
        for (int v = 1; v <= m; ++v) verts.push_back({v});
        SimplicialComplex K = complex_union(
            gen_random_complex(m, detail::kDensities[src.next_int(0, 4)], src.next_u64()),
            build(ComplexKind::facets, GroundSet::range(m), verts));
        std::vector<SimplicialComplex> parts;
        int offset = 0;
        for (int k = 0; k < m; ++k) {
            int nk = src.next_int(1, 3);
            SimplicialComplex L =
                src.next_bool(0.4)
                    ? boundary_complex(GroundSet::range(nk))
                    : gen_random_complex(nk, detail::kDensities[src.next_int(0, 4)],
                                         src.next_u64());
            parts.push_back(detail::offset_copy(L, offset + 1));
            offset += nk;
        }
        biconditional(K, parts, fx + i, s);
    }
    return rep;
}

// Full (sigma, omega) table of a composition against the blockwise factored
// form.  Fields always; the integers when the composition ground is small
// enough that every factor table is torsion-free.
inline SweepReport sweep_factored_tables(std::uint64_t seed, long long trials = 36, int max_total = 8) {
    SweepReport rep{"thm3.11", seed};
    const RingSpec field_rings[3] = {RingSpec::Q(), RingSpec::Fp(2), RingSpec::Fp(3)};
    for (long long i = 0; i < trials; ++i) {
        std::uint64_t s = detail::mix_seed(seed, static_cast<std::uint64_t>(i));
        RandomSource src(s);
        int m = src.next_int(1, 3);
        // Every sixth instance stretches to the full ground budget (checked
        // over Q alone); the rest stay small and run all rings.
        bool large = (i % 6 == 5) && max_total >= 7;
        int budget = large ? max_total : std::min(6, max_total);
        std::vector<int> sizes;
        int total = 0;
        for (int k = 0; k < m; ++k) {
            int hi = std::min(3, budget - total - (m - 1 - k));  // leave room for 1 each
            int nk = (hi <= 1) ? 1 : src.next_int(1, hi);
            sizes.push_back(nk);
            total += nk;
        }
        // Use the whole budget on large runs, keeping every factor at most 4
        // vertices; 4*m bounds what the caps allow, so the loop terminates.
        while (large && total < budget && total < 4 * m) {
            int k = src.next_int(0, m - 1);
            if (sizes[static_cast<std::size_t>(k)] < 4) {
                ++sizes[static_cast<std::size_t>(k)];
                ++total;
            }
        }
        SimplicialComplex K = detail::sample_complex(m, i, src);
        std::vector<SimplicialComplex> parts;
        int offset = 0;
        for (int k = 0; k < m; ++k) {
            int nk = sizes[static_cast<std::size_t>(k)];
            parts.push_back(detail::offset_copy(
                gen_random_complex(nk, detail::kDensities[src.next_int(0, 4)], src.next_u64()),
                offset + 1));
            offset += nk;
        }

        ++rep.instances;
        std::string what;
        if (large) {
            CompareReport cr = compare_composition_table(K, parts, RingSpec::Q());
            if (!cr.pass) what = "over Q: " + cr.detail;
        } else {
            for (const RingSpec& ring : field_rings) {
                CompareReport cr = compare_composition_table(K, parts, ring);
                if (!cr.pass) {
                    what = "over " + ring.str() + ": " + cr.detail;
                    break;
                }
            }
            if (what.empty() && total <= 6) {
                // Restrictions of complexes on at most five vertices have
                // torsion-free homology, so the factored tensor needs no
                // torsion products and the integral comparison is exact.
                CompareReport cr = compare_composition_table(K, parts, RingSpec::Z());
                if (!cr.pass) what = "over Z: " + cr.detail;
            }
        }
        if (!what.empty()) detail::record_failure(rep, i, s, what);
    }
    return rep;
}

// Mirror duality between the restriction table of K and of its dual.
inline SweepReport sweep_dual_tables(std::uint64_t seed, long long trials = 300, int max_n = 7,
                                     std::vector<RingSpec> rings = {}) {
    SweepReport rep{"thm5.2", seed};
    if (rings.empty()) rings = {RingSpec::Q(), RingSpec::Fp(2), RingSpec::Fp(3)};
    for (long long i = 0; i < trials; ++i) {
        std::uint64_t s = detail::mix_seed(seed, static_cast<std::uint64_t>(i));
        RandomSource src(s);
        int n = src.next_int(1, max_n);
        SimplicialComplex K = detail::sample_complex(n, i, src, /*allow_void=*/false);
        ++rep.instances;
        CheckResult r = alexander_dual_check(K, rings);
        if (!r.pass) detail::record_failure(rep, i, s, r.detail);
    }
    return rep;
}

// Sphere-pair rank duality: exhaustive over every complex on grounds of size
// 1..max_n, with a seeded (r, q) spec per instance.
inline SweepReport sweep_sphere_pair_duality(std::uint64_t seed, int max_n = 5, int max_r = 3) {
    SweepReport rep{"thm5.6", seed};
    for (int n = 1; n <= max_n; ++n) {
        GroundSet g = GroundSet::range(n);
        std::vector<std::uint64_t> families = downward_closed_families(n);
        for (std::size_t idx = 0; idx < families.size(); ++idx) {
            std::uint64_t s = detail::mix_seed(seed, (static_cast<std::uint64_t>(n) << 32) + idx);
            RandomSource src(s);
            std::vector<std::pair<int, int>> rq;
            rq.reserve(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) {
                int r = src.next_int(0, max_r);
                rq.emplace_back(r, src.next_int(0, r));
            }
            SimplicialComplex K = complex_from_face_bitset(g, families[idx]);
            ++rep.instances;
            CheckResult r = duality_check_56(K, SpherePairSpec(rq));
            if (!r.pass)
                detail::record_failure(rep, static_cast<long long>(idx), s,
                                       "n=" + std::to_string(n) + ": " + r.detail);
        }
    }
    return rep;
}

// Product-space decomposition against the staircase triangulation oracle:
// pinned sphere-pair instances plus random small pairs, over field rings.
inline SweepReport sweep_product_oracle(std::uint64_t seed, long long trials = 10,
                                        std::size_t max_faces = 100000) {
    SweepReport rep{"oracle5.5", seed};

    {  // pinned: two (S^2, S^0) factors over the two-point control complex
        SimplicialComplex K = boundary_complex(GroundSet::range(2));
        SpherePairSpec spec({{1, 0}, {1, 0}});
        std::vector<SimplicialPair> pairs = sphere_pair_realizations(spec);
        ++rep.instances;
        OracleReport orep = oracle_compare_55(K, pairs, RingSpec::Q(), max_faces);
        GradedRanks expect;
        expect.add_rank(0, 1);
        expect.add_rank(1, 1);
        expect.add_rank(2, 4);
        if (!orep.pass)
            detail::record_failure(rep, -1, seed, orep.detail);
        else if (!(orep.direct == expect))
            detail::record_failure(rep, -1, seed,
                                   "pinned instance: got " + orep.direct.str() + ", expected " +
                                       expect.str());
    }

    for (long long i = 0; i < trials; ++i) {
        std::uint64_t s = detail::mix_seed(seed, static_cast<std::uint64_t>(i));
        RandomSource src(s);
        int m = src.next_int(1, 2);
        SimplicialComplex K = detail::sample_complex(m, i, src);
        std::vector<SimplicialPair> pairs;
        int offset = 0;
        for (int k = 0; k < m; ++k) {
            int nk = src.next_int(2, 3);
            pairs.push_back(detail::sample_pair_at(nk, offset + 1, src));
            offset += nk;
        }
        RingSpec ring = (i % 3 == 0) ? RingSpec::Fp(2) : RingSpec::Q();
        ++rep.instances;
        try {
            OracleReport orep = oracle_compare_55(K, pairs, ring, max_faces);
            if (!orep.pass)
                detail::record_failure(rep, i, s, "over " + ring.str() + ": " + orep.detail);
        } catch (const resource_limit_error& e) {
            detail::record_failure(rep, i, s, std::string("resource limit: ") + e.what());
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Registry.

struct VerifyOptions {
    std::uint64_t seed = 1;
    long long trials = -1;  // negative: per-id default
    int max_m = -1;
    int max_n = -1;
    std::vector<RingSpec> rings;                  // thm5.2 override
    const SimplicialComplex* complex = nullptr;   // thm5.2 single-complex mode
};

inline std::vector<std::string> verify_ids() {
    return {"thm2.4", "thm2.6", "thm2.9",  "thm2.10", "thm2.12",  "thm3.7",
            "thm3.9", "thm3.10", "thm3.11", "thm5.2",  "thm5.6",   "oracle5.5",
            "dual-laws"};
}

inline SweepReport run_verify(const std::string& id, const VerifyOptions& opt = {}) {
    long long t = opt.trials;
    auto trials_or = [&](long long dflt) { return t >= 0 ? t : dflt; };

    if (id == "dual-laws")
        return sweep_dual_laws(opt.seed, trials_or(1000), opt.max_n > 0 ? opt.max_n : 8);
    if (id == "thm2.4")
        return sweep_complement(opt.seed, trials_or(500), opt.max_m > 0 ? opt.max_m : 4);
    if (id == "thm2.6")
        return sweep_dual_restriction(opt.seed, trials_or(300), opt.max_n > 0 ? opt.max_n : 6);
    if (id == "thm2.9") return sweep_substitution(opt.seed, trials_or(100));
    if (id == "thm2.10") return sweep_polyjoin_links(opt.seed, trials_or(300));
    if (id == "thm2.12") return sweep_composition_dual(opt.seed, trials_or(300));
    if (id == "thm3.7") return sweep_inclusion_general(opt.seed, trials_or(60));
    if (id == "thm3.9") return sweep_inclusion_pairs(opt.seed, trials_or(150));
    if (id == "thm3.10") return sweep_composition_betti(opt.seed, trials_or(100));
    if (id == "thm3.11")
        return sweep_factored_tables(opt.seed, trials_or(36), opt.max_n > 0 ? opt.max_n : 8);
    if (id == "thm5.2") {
        if (opt.complex != nullptr) {
            SweepReport rep{"thm5.2", opt.seed};
            rep.instances = 1;
            std::vector<RingSpec> rings = opt.rings;
            if (rings.empty()) rings = {RingSpec::Q(), RingSpec::Fp(2), RingSpec::Fp(3)};
            CheckResult r = alexander_dual_check(*opt.complex, rings);
            if (!r.pass) detail::record_failure(rep, 0, opt.seed, r.detail);
            return rep;
        }
        return sweep_dual_tables(opt.seed, trials_or(300), opt.max_n > 0 ? opt.max_n : 7,
                                 opt.rings);
    }
    if (id == "thm5.6")
        return sweep_sphere_pair_duality(opt.seed, opt.max_n > 0 ? opt.max_n : 5);
    if (id == "oracle5.5") return sweep_product_oracle(opt.seed, trials_or(10));
    throw invalid_input_error("unknown verification id: " + id);
}

}  // namespace polyjoin
