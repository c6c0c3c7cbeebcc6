#pragma once

// Seed-reproducible random instances: complexes, sub-complex pairs, index
// pairs, finite-set pairs, and sphere-pair specs.  All draws go through one
// deterministic source (a fixed 64-bit engine and hand-rolled reductions) so
// identical seeds give identical instances on every platform.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "polyjoin/errors.hpp"
#include "polyjoin/set_model.hpp"
#include "polyjoin/simplicial_complex.hpp"

namespace polyjoin {

inline constexpr int kMaxRandomGround = 16;

class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next_u64() { return rng_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [lo, hi], inclusive; fixed-point multiply, no modulo.
    int next_int(int lo, int hi) {
        if (lo > hi) throw invalid_input_error("next_int: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        unsigned __int128 wide = static_cast<unsigned __int128>(next_u64()) * span;
        return lo + static_cast<int>(wide >> 64);
    }

    bool next_bool(double p) { return next_unit() < p; }

private:
    std::mt19937_64 rng_;
};

// Random complex on {1..n}: every nonempty subset S is retained as a
// generator with probability density^|S| (one draw per subset, masks
// ascending), and the complex is the downward closure of the retained
// generators together with the empty face.  density 1 gives the full
// simplex, density 0 gives the empty-face complex; the void complex is never
// generated.
inline SimplicialComplex gen_random_complex(int n, double density, std::uint64_t seed) {
    if (n < 1 || n > kMaxRandomGround)
        throw resource_limit_error("gen_random_complex: need 1 <= n <= " +
                                   std::to_string(kMaxRandomGround));
    if (density < 0.0 || density > 1.0)
        throw invalid_input_error("gen_random_complex: density must lie in [0, 1]");
    RandomSource src(seed);

    std::vector<double> power(static_cast<std::size_t>(n) + 1, 1.0);
    for (int k = 1; k <= n; ++k)
        power[static_cast<std::size_t>(k)] = power[static_cast<std::size_t>(k) - 1] * density;

    GroundSet g = GroundSet::range(n);
    std::vector<std::vector<int>> generators;
    Mask full = g.full_mask();
    for (Mask s = 1; s <= full; ++s) {
        double u = src.next_unit();
        if (u < power[static_cast<std::size_t>(mask_size(s))]) generators.push_back(g.ids_of(s));
    }
    if (generators.empty()) return SimplicialComplex::from_faces(g, {Mask{0}});
    return build(ComplexKind::facets, g, generators);
}

// Random sub-complex of X: drop `deletions` randomly chosen facets (with
// replacement across rounds) and close downward what remains.  Deleting
// every facet leaves the empty-face complex, never the void one.
inline SimplicialComplex gen_random_subcomplex(const SimplicialComplex& X, int deletions,
                                               RandomSource& src) {
    if (X.is_void()) return X;
    std::vector<Mask> facets = X.facets();
    for (int round = 0; round < deletions && !facets.empty(); ++round) {
        int at = src.next_int(0, static_cast<int>(facets.size()) - 1);
        facets.erase(facets.begin() + at);
        // Re-maximalize: removing a facet exposes its boundary, whose maximal
        // faces may be contained in other remaining facets; closure handles it.
    }
    if (facets.empty()) return SimplicialComplex::from_faces(X.ground(), {Mask{0}});
    std::vector<std::vector<int>> gens;
    gens.reserve(facets.size());
    for (Mask f : facets) gens.push_back(X.ground().ids_of(f));
    return build(ComplexKind::facets, X.ground(), gens);
}

inline SimplicialPair gen_random_pair(int n, double density, int deletions, std::uint64_t seed) {
    SimplicialComplex X = gen_random_complex(n, density, seed);
    RandomSource src(seed ^ 0x9e3779b97f4a7c15ull);
    return SimplicialPair(X, gen_random_subcomplex(X, deletions, src));
}

// Disjoint (sigma, omega): one three-way draw per ground element.
inline IndexPair gen_random_index_pair(const GroundSet& g, RandomSource& src) {
    std::vector<int> sigma, omega;
    for (int id : g.universe()) {
        switch (src.next_int(0, 2)) {
            case 1: sigma.push_back(id); break;
            case 2: omega.push_back(id); break;
            default: break;
        }
    }
    return IndexPair(std::move(sigma), std::move(omega));
}

// Finite-set pair with X = {1..size}, A a random subset (possibly empty).
inline FiniteSetPair gen_random_set_pair(int max_size, RandomSource& src) {
    int size = src.next_int(1, max_size);
    std::vector<int> X, A;
    for (int v = 1; v <= size; ++v) {
        X.push_back(v);
        if (src.next_bool(0.5)) A.push_back(v);
    }
    return FiniteSetPair(X, A);
}

}  // namespace polyjoin
