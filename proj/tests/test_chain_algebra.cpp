// Exact linear algebra and homology: Smith normal form against a
// determinantal-divisor oracle, hand-computed homology fixtures, and the
// Kuenneth identity for joins.

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <tuple>
#include <vector>

#include "polyjoin/polyjoin.hpp"

using namespace polyjoin;

namespace {

BigInt det(const Mat<BigInt>& A) {
    std::size_t n = A.rows();
    if (n == 0) return 1;
    if (n == 1) return A(0, 0);
    BigInt acc = 0;
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        Mat<BigInt> sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub(r - 1, cc++) = A(r, c);
            }
        }
        acc += sign * A(0, j) * det(sub);
        sign = -sign;
    }
    return acc;
}

// gcd of all k-by-k minors (0 when every minor vanishes).
BigInt minor_gcd(const Mat<BigInt>& A, int k) {
    BigInt g = 0;
    // enumerate k-subsets of rows and columns with odometers
    std::vector<int> ri(k), ci(k);
    for (int i = 0; i < k; ++i) ri[i] = i;
    const int m = static_cast<int>(A.rows()), n = static_cast<int>(A.cols());
    if (k > m || k > n) return 0;
    while (true) {
        for (int i = 0; i < k; ++i) ci[i] = i;
        while (true) {
            Mat<BigInt> sub(k, k);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) sub(r, c) = A(ri[r], ci[c]);
            g = boost::multiprecision::gcd(g, abs(det(sub)));
            int t = k - 1;
            while (t >= 0 && ci[t] == n - k + t) --t;
            if (t < 0) break;
            ++ci[t];
            for (int u = t + 1; u < k; ++u) ci[u] = ci[u - 1] + 1;
        }
        int t = k - 1;
        while (t >= 0 && ri[t] == m - k + t) --t;
        if (t < 0) break;
        ++ri[t];
        for (int u = t + 1; u < k; ++u) ri[u] = ri[u - 1] + 1;
    }
    return g;
}

// Smith data recomputed from determinantal divisors: rank and the divisors
// greater than one, in divisibility order.
SnfSummary snf_by_minors(const Mat<BigInt>& A) {
    SnfSummary out;
    BigInt prev = 1;
    int limit = static_cast<int>(std::min(A.rows(), A.cols()));
    for (int k = 1; k <= limit; ++k) {
        BigInt dk = minor_gcd(A, k);
        if (dk == 0) break;
        BigInt ek = dk / prev;
        out.rank = k;
        if (ek > 1) out.divisors.push_back(ek);
        prev = dk;
    }
    return out;
}

SimplicialComplex rp2_six() {
    return build(ComplexKind::facets, GroundSet::range(6),
                 {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                  {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

} // namespace

TEST_CASE("smith summary matches determinantal divisors on hand matrices", "[chain_algebra]") {
    auto summarize = [](int rows, int cols, std::vector<std::tuple<int, int, long long>> trip) {
        SparseIntMat S = SparseIntMat::from_triplets(rows, cols, trip);
        SnfSummary got = snf_summary(S);
        SnfSummary want = snf_by_minors(S.to_dense());
        REQUIRE(got == want);
        return got;
    };

    SnfSummary diag23 = summarize(2, 2, {{0, 0, 2}, {1, 1, 3}});
    REQUIRE(diag23.rank == 2);
    REQUIRE(diag23.divisors == std::vector<BigInt>{6});

    SnfSummary singular = summarize(2, 2, {{0, 0, 2}, {0, 1, 4}, {1, 0, 4}, {1, 1, 8}});
    REQUIRE(singular.rank == 1);
    REQUIRE(singular.divisors == std::vector<BigInt>{2});

    SnfSummary zero = summarize(3, 2, {});
    REQUIRE(zero.rank == 0);
    REQUIRE(zero.divisors.empty());
}

TEST_CASE("smith summary matches determinantal divisors on random matrices", "[chain_algebra]") {
    RandomSource src(90210);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = src.next_int(1, 4), cols = src.next_int(1, 4);
        std::vector<std::tuple<int, int, long long>> trip;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                long long v = src.next_int(-3, 3);
                if (v != 0) trip.emplace_back(i, j, v);
            }
        SparseIntMat S = SparseIntMat::from_triplets(rows, cols, trip);
        SnfSummary got = snf_summary(S);
        SnfSummary want = snf_by_minors(S.to_dense());
        INFO("trial " << trial << " " << rows << "x" << cols);
        REQUIRE(got == want);
    }
}

TEST_CASE("reduced homology of elementary complexes", "[chain_algebra]") {
    RingSpec z = RingSpec::Z();
    // single point: trivial reduced homology
    REQUIRE(reduced_homology(full_simplex(GroundSet::range(1)), z).is_zero());
    // two points: one class in degree 0
    SimplicialComplex s0 = build(ComplexKind::facets, GroundSet::range(2), {{1}, {2}});
    GradedRanks h0 = reduced_homology(s0, z);
    REQUIRE(h0.rank == std::map<int, long long>{{0, 1}});
    REQUIRE(h0.torsion.empty());
    // boundary of the triangle: a circle
    GradedRanks circle = reduced_homology(boundary_complex(GroundSet::range(3)), z);
    REQUIRE(circle.rank == std::map<int, long long>{{1, 1}});
    // boundary of the tetrahedron: a 2-sphere
    GradedRanks sphere = reduced_homology(boundary_complex(GroundSet::range(4)), z);
    REQUIRE(sphere.rank == std::map<int, long long>{{2, 1}});
    // the empty-face complex carries one class in degree -1
    GradedRanks empt = reduced_homology(empty_complex(GroundSet::range(3)), z);
    REQUIRE(empt.rank == std::map<int, long long>{{-1, 1}});
    // the void complex has zero homology in every degree
    REQUIRE(reduced_homology(build(ComplexKind::void_complex, GroundSet::range(2), {}), z).is_zero());
}

TEST_CASE("unreduced homology differs from reduced by the base class", "[chain_algebra]") {
    SimplicialComplex s0 = build(ComplexKind::facets, GroundSet::range(2), {{1}, {2}});
    REQUIRE(unreduced_homology(s0, RingSpec::Z()).rank == std::map<int, long long>{{0, 2}});
    GradedRanks circ = unreduced_homology(boundary_complex(GroundSet::range(3)), RingSpec::Z());
    REQUIRE(circ.rank == std::map<int, long long>{{0, 1}, {1, 1}});
}

TEST_CASE("projective plane homology over four rings", "[chain_algebra]") {
    SimplicialComplex rp2 = rp2_six();

    GradedRanks over_z = reduced_homology(rp2, RingSpec::Z());
    REQUIRE(over_z.rank.empty());
    REQUIRE(over_z.torsion == std::map<int, std::vector<BigInt>>{{1, {BigInt(2)}}});

    GradedRanks over_f2 = reduced_homology(rp2, RingSpec::Fp(2));
    REQUIRE(over_f2.rank == std::map<int, long long>{{1, 1}, {2, 1}});

    REQUIRE(reduced_homology(rp2, RingSpec::Q()).is_zero());
    REQUIRE(reduced_homology(rp2, RingSpec::Fp(3)).is_zero());
}

TEST_CASE("graded rank containers behave like graded groups", "[chain_algebra]") {
    GradedRanks g;
    g.add_rank(2, 3);
    g.add_rank(2, -3); // cancels and erases the entry
    REQUIRE(g.is_zero());

    g.add_torsion(1, BigInt(2));
    g.add_torsion(1, BigInt(3)); // canonicalized into a divisor chain
    REQUIRE(g.torsion_at(1) == std::vector<BigInt>{6});

    GradedRanks a, b;
    a.add_rank(0, 1);
    b.add_rank(2, 2);
    b.add_torsion(1, BigInt(4));
    GradedRanks s = graded_sum(a, b);
    REQUIRE(s.rank_at(0) == 1);
    REQUIRE(s.rank_at(2) == 2);
    REQUIRE(s.torsion_at(1) == std::vector<BigInt>{4});
    REQUIRE(s.shifted(5).rank_at(5) == 1);

    // tensor: free parts convolve, torsion times free rank replicates
    GradedRanks t = graded_tensor(a.shifted(1), b);
    REQUIRE(t.rank_at(3) == 2);
    REQUIRE(t.torsion_at(2) == std::vector<BigInt>{4});
}

TEST_CASE("boundary operators square to zero", "[chain_algebra]") {
    RandomSource src(555);
    for (int trial = 0; trial < 10; ++trial) {
        SimplicialComplex K = gen_random_complex(src.next_int(1, 5), 0.6, src.next_u64());
        // the constructor asserts shape and boundary-squared; also check directly
        BasedChainComplex C = simplicial_chains(K, RingSpec::Z(), trial % 2 == 0);
        for (int d = C.min_degree() + 1; d <= C.max_degree(); ++d) {
            const Mat<long long>& hi = C.boundary_from(d);
            const Mat<long long>& lo = C.boundary_from(d - 1);
            if (lo.rows() == 0 || hi.rows() == 0) continue;
            REQUIRE(lo.mul(hi).is_zero());
        }
    }
}

TEST_CASE("join homology obeys the Kuenneth identity", "[chain_algebra]") {
    RandomSource src(808);
    std::vector<RingSpec> fields{RingSpec::Q(), RingSpec::Fp(2), RingSpec::Fp(3)};
    for (int trial = 0; trial < 12; ++trial) {
        int na = src.next_int(1, 3), nb = src.next_int(1, 3);
        SimplicialComplex A = gen_random_complex(na, 0.6, src.next_u64());
        SimplicialComplex B0 = gen_random_complex(nb, 0.6, src.next_u64());
        std::vector<int> ids;
        for (int v = 0; v < nb; ++v) ids.push_back(na + 1 + v);
        SimplicialComplex B = relabel(B0, GroundSet(ids));
        SimplicialComplex J = join({A, B});
        const RingSpec& f = fields[trial % fields.size()];
        GradedRanks lhs = reduced_homology(J, f);
        GradedRanks rhs = graded_tensor(reduced_homology(A, f), reduced_homology(B, f)).shifted(1);
        INFO("trial " << trial << " ring " << f.str() << " A=" << A.str() << " B=" << B.str());
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("tensor of based complexes multiplies homology", "[chain_algebra]") {
    // two circles: the tensor carries the torus-like product in degree 2
    BasedChainComplex c1 = reduced_chains(boundary_complex(GroundSet::range(3)), RingSpec::Q());
    GradedRanks prod = homology(tensor_suspend({c1, c1}, 0));
    REQUIRE(prod.rank == std::map<int, long long>{{2, 1}});
    // shift moves every degree
    REQUIRE(homology(tensor_suspend({c1, c1}, 1)).rank == std::map<int, long long>{{3, 1}});

    // torsion times a free factor survives the tensor over the integers
    SimplicialComplex rp2 = rp2_six();
    SimplicialComplex s0 = build(ComplexKind::facets, GroundSet({7, 8}), {{7}, {8}});
    BasedChainComplex cr = reduced_chains(rp2, RingSpec::Z());
    BasedChainComplex cs = reduced_chains(s0, RingSpec::Z());
    GradedRanks t = homology(tensor_suspend({cr, cs}, 1));
    GradedRanks direct = reduced_homology(join({rp2, s0}), RingSpec::Z());
    REQUIRE(t == direct);
    REQUIRE(direct.torsion == std::map<int, std::vector<BigInt>>{{2, {BigInt(2)}}});
}

TEST_CASE("field elimination utilities", "[chain_algebra]") {
    QOps q;
    Mat<Rational> A(2, 3);
    A(0, 0) = 1; A(0, 1) = 2; A(0, 2) = 3;
    A(1, 0) = 2; A(1, 1) = 4; A(1, 2) = 6; // dependent row
    REQUIRE(field_rank(q, A) == 1);

    Mat<Rational> K = kernel_basis(q, A);
    REQUIRE(K.cols() == 2);
    // every kernel column satisfies A x = 0
    for (std::size_t j = 0; j < K.cols(); ++j) {
        for (std::size_t i = 0; i < A.rows(); ++i) {
            Rational acc = 0;
            for (std::size_t c = 0; c < A.cols(); ++c) acc += A(i, c) * K(c, j);
            REQUIRE(acc == 0);
        }
    }

    auto sol = field_solve(q, A, {Rational(3), Rational(6)});
    REQUIRE(sol.has_value());
    Rational acc = 0;
    for (std::size_t c = 0; c < A.cols(); ++c) acc += A(0, c) * (*sol)[c];
    REQUIRE(acc == 3);
    REQUIRE_FALSE(field_solve(q, A, {Rational(3), Rational(7)}).has_value());

    FpOps f5(5);
    REQUIRE(f5.mul(f5.inv(3), 3) == 1);
    REQUIRE(f5.from_int(-7) == 3);
}

TEST_CASE("changing the ring reinterprets the same boundaries", "[chain_algebra]") {
    BasedChainComplex c = reduced_chains(rp2_six(), RingSpec::Z());
    REQUIRE(homology(c.with_ring(RingSpec::Fp(2))) == reduced_homology(rp2_six(), RingSpec::Fp(2)));
    REQUIRE(homology(c.with_ring(RingSpec::Q())).is_zero());
}
