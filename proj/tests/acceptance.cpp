// Acceptance gate: ten timed criteria, one line each, nonzero exit on any
// failure.  Every criterion pins its workload and its wall-clock budget; a
// budget overrun fails the criterion even when all instances pass.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "polyjoin/polyjoin.hpp"

using namespace polyjoin;

namespace {

struct Outcome {
    bool pass = false;
    long long instances = 0;
    std::string detail;
};

Outcome from_reports(const std::vector<SweepReport>& reports) {
    Outcome out;
    out.pass = true;
    for (const SweepReport& r : reports) {
        out.instances += r.instances;
        if (!r.pass()) {
            out.pass = false;
            if (out.detail.empty()) out.detail = r.id + ": " + r.detail;
        }
    }
    return out;
}

std::string fmt_ranks(const GradedRanks& r) { return r.str(); }

} // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = 20260816ull;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    std::printf("acceptance gate, seed %llu\n", static_cast<unsigned long long>(seed));

    struct Criterion {
        const char* label;
        double budget_seconds;
        std::function<Outcome()> run;
    };

    GradedRanks pinned_total;
    pinned_total.add_rank(0, 1);
    pinned_total.add_rank(1, 1);
    pinned_total.add_rank(2, 4);

    std::vector<Criterion> criteria = {
        {"dual involution and De Morgan laws, 1000 complexes up to 8 vertices", 10.0,
         [&] { return from_reports({sweep_dual_laws(seed, 1000, 8)}); }},

        {"point-model complement law, 500 instances including degenerate controls", 10.0,
         [&] { return from_reports({sweep_complement(seed, 500, 4, 3)}); }},

        {"restriction/link/dual identities of joins and compositions, 300 each", 30.0,
         [&] {
             return from_reports({sweep_dual_restriction(seed, 300, 6),
                                  sweep_polyjoin_links(seed, 300),
                                  sweep_composition_dual(seed, 300)});
         }},

        {"substitution law on composed point models, 100 instances", 30.0,
         [&] { return from_reports({sweep_substitution(seed, 100, 10000)}); }},

        {"closed-form homology of filtered tensors, 200 split instances, 4 rings", 300.0,
         [&] {
             return from_reports(
                 {sweep_inclusion_pairs(seed, 150), sweep_inclusion_general(seed, 50)});
         }},

        {"composition Betti polynomials and the sphere biconditional", 120.0,
         [&] { return from_reports({sweep_composition_betti(seed, 100, 60)}); }},

        {"factored composition tables over every admissible index pair", 300.0,
         [&] { return from_reports({sweep_factored_tables(seed, 36, 8)}); }},

        {"restriction-table duality with the dual complex, 300 complexes, 3 fields", 120.0,
         [&] { return from_reports({sweep_dual_tables(seed, 300, 7)}); }},

        {"pinned product-space ranks: decomposition, closed form, staircase, 3-sphere", 60.0,
         [&] {
             Outcome out;
             out.pass = true;
             SimplicialComplex K =
                 build(ComplexKind::facets, GroundSet::range(2), {{1}, {2}});
             SpherePairSpec spec({{1, 0}, {1, 0}});

             auto [M, Mc] = sphere_pair_betti(K, spec);
             ++out.instances;
             if (!(total_ranks(M) == pinned_total)) {
                 out.pass = false;
                 out.detail = "closed form gives " + fmt_ranks(total_ranks(M));
                 return out;
             }

             std::vector<SimplicialPair> pairs = sphere_pair_realizations(spec);
             DecompositionRanks d = decomposition_55(K, pairs, RingSpec::Q());
             ++out.instances;
             if (!(d.hat == M.hat) || !(d.bar == M.bar)) {
                 out.pass = false;
                 out.detail = "decomposition parts differ: hat " + fmt_ranks(d.hat) +
                              " vs " + fmt_ranks(M.hat) + ", bar " + fmt_ranks(d.bar) +
                              " vs " + fmt_ranks(M.bar);
                 return out;
             }

             OracleReport orep = oracle_compare_55(K, pairs, RingSpec::Q());
             ++out.instances;
             if (!orep.pass || !(orep.direct == pinned_total)) {
                 out.pass = false;
                 out.detail = "staircase oracle: " +
                              (orep.detail.empty() ? fmt_ranks(orep.direct) : orep.detail);
                 return out;
             }

             // two (disk, circle) pairs over two points triangulate the 3-sphere
             std::vector<SimplicialComplex> totals{full_simplex(GroundSet({1, 2, 3})),
                                                   full_simplex(GroundSet({4, 5, 6}))};
             std::vector<SimplicialComplex> subs{boundary_complex(GroundSet({1, 2, 3})),
                                                 boundary_complex(GroundSet({4, 5, 6}))};
             GradedRanks s3 = staircase_homology(staircase_product(totals, &K, &subs),
                                                 RingSpec::Z(), /*reduced=*/false);
             ++out.instances;
             GradedRanks expect_s3;
             expect_s3.add_rank(0, 1);
             expect_s3.add_rank(3, 1);
             if (!(s3 == expect_s3)) {
                 out.pass = false;
                 out.detail = "3-sphere model gives " + fmt_ranks(s3);
             }
             return out;
         }},

        {"sphere-pair table duality, exhaustive over all complexes up to 5 vertices", 120.0,
         [&] { return from_reports({sweep_sphere_pair_duality(seed, 5, 3)}); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = sec <= c.budget_seconds;
        bool ok = out.pass && in_budget;
        if (!ok) ++failures;
        std::string note;
        if (!out.pass && !out.detail.empty()) note += " -- " + out.detail;
        if (!in_budget) note += " -- over budget";
        std::printf("criterion %2zu [%s] %s: %lld instances in %.2fs (budget %.0fs)%s\n", i + 1,
                    ok ? "PASS" : "FAIL", c.label, out.instances, sec, c.budget_seconds,
                    note.c_str());
        std::fflush(stdout);
    }

    if (failures == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
    return 1;
}
