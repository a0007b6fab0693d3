#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "degchrom/counting.hpp"
#include "degchrom/rng.hpp"
#include "oracle_utils.hpp"

using namespace degchrom;
using testutil::make_poly;

namespace {

Graph path_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
    return Graph(leaves + 1, std::move(edges));
}

const Graph kTriangle(3, {{0, 1}, {1, 2}, {0, 2}});

// Relabel a graph by a permutation of its vertices.
Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [u, v] : g.edges())
        edges.push_back({perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]});
    return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace

TEST_CASE("ConstraintParams validates m") {
    CHECK_THROWS_AS(ConstraintParams(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(ConstraintParams(-2, 3), std::invalid_argument);
    CHECK_NOTHROW(ConstraintParams(1, 0));
    CHECK_NOTHROW(ConstraintParams(7, 2));  // m beyond n is allowed
}

TEST_CASE("friend_count counts same-colored neighbors") {
    const Graph p4 = path_graph(4);
    CHECK(friend_count(p4, Coloring{{0, 0, 0, 0}}, 1) == 2);
    const Coloring proper{{0, 1, 0, 1}};
    for (Vertex v = 0; v < 4; ++v) CHECK(friend_count(p4, proper, v) == 0);
    CHECK(friend_count(star_graph(3), Coloring{{0, 0, 0, 1}}, 0) == 2);

    CHECK_THROWS_AS(friend_count(p4, Coloring{{0, 0}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(friend_count(p4, Coloring{{0, 0, 0, 0}}, 4), std::out_of_range);
}

TEST_CASE("brute_force_count on the named instances") {
    CHECK(brute_force_count(path_graph(4), ConstraintParams(2, 2)).value == 10);
    CHECK(brute_force_count(path_graph(4), ConstraintParams(2, 2)).method == CountMethod::Oracle);
    // constraint unsatisfiable by any vertex: k^n
    CHECK(brute_force_count(path_graph(4), ConstraintParams(3, 3)).value == 81);
    CHECK(brute_force_count(kTriangle, ConstraintParams(4, 2)).value == 8);
    // single monochromatic coloring
    CHECK(brute_force_count(path_graph(4), ConstraintParams(2, 1)).value == 0);
    CHECK(brute_force_count(path_graph(4), ConstraintParams(3, 1)).value == 1);
    // degenerate sizes
    CHECK(brute_force_count(Graph(0, {}), ConstraintParams(1, 5)).value == 1);
    CHECK(brute_force_count(Graph(1, {}), ConstraintParams(1, 5)).value == 5);
    CHECK(brute_force_count(path_graph(3), ConstraintParams(1, 0)).value == 0);
}

TEST_CASE("brute_force_count equals naive full enumeration on random graphs") {
    SplitMix64 gen(31337);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(gen.next_below(5));
        const Graph g = testutil::random_graph(gen, n);
        const int m = 1 + static_cast<int>(gen.next_below(4));
        const std::uint64_t k = gen.next_below(5);
        CHECK(brute_force_count(g, ConstraintParams(m, k)).value ==
              testutil::naive_admissible_count(g, m, k));
    }
}

TEST_CASE("brute_force_count is independent of the worker count") {
    SplitMix64 gen(5);
    const Graph g = testutil::random_graph(gen, 6, 60);
    for (unsigned threads : {1u, 2u, 3u, 5u}) {
        OracleOptions opts;
        opts.threads = threads;
        CHECK(brute_force_count(g, ConstraintParams(2, 4), opts).value ==
              brute_force_count(g, ConstraintParams(2, 4)).value);
    }
}

TEST_CASE("the oracle budget guard refuses oversized enumerations") {
    OracleOptions tight;
    tight.budget_bits = 2;  // at most 4 colorings
    CHECK_THROWS_AS(brute_force_count(path_graph(2), ConstraintParams(2, 3), tight),
                    BudgetExceededError);
    tight.override_budget = true;
    CHECK(brute_force_count(path_graph(2), ConstraintParams(2, 3), tight).value == 9);
    // default budget: 3^20 > 2^30
    CHECK_THROWS_AS(brute_force_count(path_graph(20), ConstraintParams(2, 3)),
                    BudgetExceededError);
}

TEST_CASE("oracle counts are invariant under color permutation") {
    // Check the count against an enumeration that relabels every coloring
    // through a fixed permutation before testing admissibility.
    const Graph g = star_graph(3);
    const int m = 2;
    const std::uint64_t k = 3;
    const std::vector<Color> perm{2, 0, 1};
    BigInt permuted(0);
    testutil::for_each_coloring(g.vertex_count(), k, [&](const std::vector<Color>& col) {
        std::vector<Color> mapped(col.size());
        for (std::size_t i = 0; i < col.size(); ++i)
            mapped[i] = perm[static_cast<std::size_t>(col[i])];
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (testutil::same_color_neighbors(g, mapped, v) >= m) return;
        permuted += 1;
    });
    CHECK(brute_force_count(g, ConstraintParams(m, k)).value == permuted);
}

TEST_CASE("tree_dp_count on the named instances") {
    const LabeledTree p4 = certify_tree(path_graph(4));
    const LabeledTree k13 = certify_tree(star_graph(3));
    CHECK(tree_dp_count(p4, ConstraintParams(2, 2)).value == 10);
    CHECK(tree_dp_count(p4, ConstraintParams(2, 2)).method == CountMethod::TreeDp);
    CHECK(tree_dp_count(k13, ConstraintParams(2, 2)).value == 8);
    // closed form k(k-1)^2(k+2) for K_{1,3} at m=2
    for (std::uint64_t k = 0; k <= 6; ++k) {
        const BigInt kk = big_from_u64(k);
        CHECK(tree_dp_count(k13, ConstraintParams(2, k)).value ==
              kk * (kk - 1) * (kk - 1) * (kk + 2));
    }
    CHECK(tree_dp_count(certify_tree(Graph(1, {})), ConstraintParams(1, 7)).value == 7);
}

TEST_CASE("tree_dp_count at m=1 is the classical chromatic polynomial") {
    SplitMix64 gen(404);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + static_cast<int>(gen.next_below(30));
        const LabeledTree t = random_tree(n, gen.next());
        const std::uint64_t k = gen.next_below(50);
        const BigInt expected =
            big_from_u64(k) * pow_int(big_from_u64(k) - 1, static_cast<unsigned long>(n - 1));
        CHECK(tree_dp_count(t, ConstraintParams(1, k)).value == expected);
    }
}

TEST_CASE("tree_dp_count equals brute_force_count for every tree with n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        for_each_labeled_tree(n, [&](const LabeledTree& t) {
            for (int m = 1; m <= n; ++m)
                for (std::uint64_t k = 0; k <= static_cast<std::uint64_t>(n) + 1; ++k)
                    CHECK(tree_dp_count(t, ConstraintParams(m, k)).value ==
                          brute_force_count(t.graph(), ConstraintParams(m, k)).value);
        });
    }
}

TEST_CASE("tree_dp_count does not depend on which vertex carries label 0") {
    // The DP roots at vertex 0; relabeling moves the root anywhere.
    const LabeledTree t = random_tree(9, 2718);
    const BigInt reference = tree_dp_count(t, ConstraintParams(2, 3)).value;
    std::vector<Vertex> perm(9);
    for (Vertex v = 0; v < 9; ++v) perm[static_cast<std::size_t>(v)] = v;
    SplitMix64 gen(161803);
    for (int trial = 0; trial < 10; ++trial) {
        for (std::size_t i = perm.size(); i > 1; --i)
            std::swap(perm[i - 1], perm[gen.next_below(i)]);
        const LabeledTree shuffled = certify_tree(relabel(t.graph(), perm));
        CHECK(tree_dp_count(shuffled, ConstraintParams(2, 3)).value == reference);
    }
}

TEST_CASE("count results never exceed k^n") {
    SplitMix64 gen(8);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(gen.next_below(5));
        const Graph g = testutil::random_graph(gen, n);
        const int m = 1 + static_cast<int>(gen.next_below(3));
        const std::uint64_t k = gen.next_below(4);
        const BigInt space = pow_int(big_from_u64(k), static_cast<unsigned long>(n));
        CHECK(brute_force_count(g, ConstraintParams(m, k)).value <= space);
    }
}

TEST_CASE("counts are monotone in m and saturate above the max degree") {
    SplitMix64 gen(12);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 1 + static_cast<int>(gen.next_below(5));
        const Graph g = testutil::random_graph(gen, n);
        const std::uint64_t k = gen.next_below(4);
        const BigInt space = pow_int(big_from_u64(k), static_cast<unsigned long>(n));
        BigInt previous(-1);
        for (int m = 1; m <= n + 1; ++m) {
            const BigInt now = brute_force_count(g, ConstraintParams(m, k)).value;
            CHECK(now >= previous);
            CHECK(now <= space);
            previous = now;
            if (m > g.max_degree()) CHECK(now == space);
        }
        if (n >= 1) CHECK(brute_force_count(g, ConstraintParams(2, 0)).value == 0);
        const BigInt one_color = brute_force_count(g, ConstraintParams(2, 1)).value;
        CHECK(one_color == (g.max_degree() < 2 ? 1 : 0));
    }
}

TEST_CASE("degree_chromatic_polynomial on the named instances") {
    const auto p4 = compute_degree_chromatic(path_graph(4), 2);
    CHECK(p4.polynomial == make_poly({0, 1, -2, 0, 1}));
    CHECK(p4.method == CountMethod::TreeDp);

    CHECK(degree_chromatic_polynomial(star_graph(3), 2) == make_poly({0, 2, -3, 0, 1}));
    CHECK(degree_chromatic_polynomial(path_graph(4), 1) == make_poly({0, -1, 3, -3, 1}));
    // m above the max degree: plain k^n
    CHECK(degree_chromatic_polynomial(star_graph(3), 5) == make_poly({0, 0, 0, 0, 1}));

    // both routes agree
    CHECK(degree_chromatic_polynomial(path_graph(4), 2, PolynomialMethod::Oracle) ==
          degree_chromatic_polynomial(path_graph(4), 2, PolynomialMethod::TreeDp));

    const auto tri = compute_degree_chromatic(kTriangle, 2);
    CHECK(tri.method == CountMethod::Oracle);
    CHECK(tri.polynomial == make_poly({0, -1, 0, 1}));  // k^3 - k

    CHECK_THROWS_AS(degree_chromatic_polynomial(kTriangle, 2, PolynomialMethod::TreeDp),
                    NotATreeError);
    CHECK_THROWS_AS(degree_chromatic_polynomial(path_graph(3), 0), std::invalid_argument);
}

TEST_CASE("the polynomial reproduces the counter beyond the interpolation nodes") {
    // All 64 graphs on 4 vertices, all m in [1, 4]; k = n+1 and n+2 lie
    // outside the nodes 0..n, so the equality is a genuine check.
    const std::vector<std::pair<Vertex, Vertex>> all_pairs{{0, 1}, {0, 2}, {0, 3},
                                                           {1, 2}, {1, 3}, {2, 3}};
    for (unsigned mask = 0; mask < 64; ++mask) {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (unsigned bit = 0; bit < 6; ++bit)
            if (mask & (1u << bit)) edges.push_back(all_pairs[bit]);
        const Graph g(4, std::move(edges));
        for (int m = 1; m <= 4; ++m) {
            const BigPolynomial p = degree_chromatic_polynomial(g, m);
            CHECK(p.degree() == 4);
            CHECK(coefficient(p, 4) == BigRat(1));
            for (std::uint64_t k = 0; k <= 6; ++k)
                CHECK(evaluate(p, BigInt(static_cast<long>(k))) ==
                      BigRat(brute_force_count(g, ConstraintParams(m, k)).value));
        }
    }
}

TEST_CASE("degenerate graph sizes produce the constant and linear polynomials") {
    CHECK(degree_chromatic_polynomial(Graph(0, {}), 2) == make_poly({1}));
    CHECK(degree_chromatic_polynomial(Graph(1, {}), 3) == make_poly({0, 1}));
}

TEST_CASE("polynomial consistency on random graphs with n in {5, 6}") {
    SplitMix64 gen(606);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 5 + static_cast<int>(gen.next_below(2));
        const Graph g = testutil::random_graph(gen, n);
        for (int m = 1; m <= n; ++m) {
            const BigPolynomial p = degree_chromatic_polynomial(g, m);
            for (std::uint64_t k = 0; k <= static_cast<std::uint64_t>(n) + 2; ++k)
                CHECK(evaluate(p, BigInt(static_cast<long>(k))) ==
                      BigRat(brute_force_count(g, ConstraintParams(m, k)).value));
        }
    }
}

TEST_CASE("count_Av examples and degenerate cases") {
    const LabeledTree k13 = certify_tree(star_graph(3));
    CHECK(count_Av(k13, 0, ConstraintParams(2, 2)).value == 8);  // k(3k-2) at k=2
    CHECK(count_Av(k13, 1, ConstraintParams(2, 5)).value == 0);  // leaves cannot reach 2 friends
    CHECK(count_Av(k13, 0, ConstraintParams(2, 0)).value == 0);
    CHECK_THROWS_AS(count_Av(k13, 9, ConstraintParams(2, 2)), std::out_of_range);

    // P_5, interior vertex, m=2: both neighbors must match, so |A_1| = k^3;
    // the Case-1 bound check leans on this value at k=3
    const LabeledTree p5 = certify_tree(path_graph(5));
    CHECK(count_Av(p5, 1, ConstraintParams(2, 3)).value == 27);
}

TEST_CASE("count_Av equals enumeration for every tree with n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        for_each_labeled_tree(n, [&](const LabeledTree& t) {
            for (Vertex v = 0; v < n; ++v) {
                for (std::uint64_t k = 0; k <= 5; ++k) {
                    const auto hist = testutil::friend_histogram(t.graph(), v, k);
                    for (int m = 1; m <= n; ++m) {
                        BigInt at_least_m(0);
                        for (std::size_t l = static_cast<std::size_t>(m); l < hist.size(); ++l)
                            at_least_m += hist[l];
                        CHECK(count_Av(t, v, ConstraintParams(m, k)).value == at_least_m);
                    }
                }
            }
        });
    }
}

TEST_CASE("count_Av as a polynomial has degree n-m and leading coefficient C(d,m)") {
    for (int n = 3; n <= 6; ++n) {
        const LabeledTree star = certify_tree(star_graph(n - 1));
        const LabeledTree path = certify_tree(path_graph(n));
        for (const LabeledTree* t : {&star, &path}) {
            for (Vertex v = 0; v < n; ++v) {
                const int d = t->graph().degree(v);
                for (int m = 1; m <= n; ++m) {
                    std::vector<EvaluationPoint> pts;
                    for (int k = 0; k <= n - m; ++k)
                        pts.push_back({BigInt(k),
                                       count_Av(*t, v, ConstraintParams(
                                                           m, static_cast<std::uint64_t>(k)))
                                           .value});
                    const BigPolynomial p = interpolate(pts);
                    if (d < m) {
                        CHECK(p.is_zero());
                    } else {
                        CHECK(p.degree() == n - m);
                        CHECK(coefficient(p, n - m) == BigRat(binomial(d, m)));
                    }
                }
            }
        }
    }
}

TEST_CASE("count_pairwise_intersection examples") {
    const LabeledTree p4 = certify_tree(path_graph(4));
    const LabeledTree p5 = certify_tree(path_graph(5));
    // both endpoints have degree 1 < 2
    CHECK(count_pairwise_intersection(p4, 0, 3, ConstraintParams(2, 4)).value == 0);
    // both interior constraints force a monochromatic path: k colorings
    CHECK(count_pairwise_intersection(p5, 1, 3, ConstraintParams(2, 3)).value == 3);
    CHECK(count_pairwise_intersection(p4, 1, 2, ConstraintParams(2, 2)).value == 2);
    CHECK_THROWS_AS(count_pairwise_intersection(p4, 1, 1, ConstraintParams(2, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(count_pairwise_intersection(p4, 0, 9, ConstraintParams(2, 2)),
                    std::out_of_range);
}

TEST_CASE("count_pairwise_intersection equals naive full enumeration") {
    for (int n = 2; n <= 5; ++n) {
        for_each_labeled_tree(n, [&](const LabeledTree& t) {
            for (Vertex v1 = 0; v1 < n; ++v1)
                for (Vertex v2 = 0; v2 < n; ++v2) {
                    if (v1 == v2) continue;
                    for (int m : {1, 2, 3})
                        for (std::uint64_t k = 0; k <= 3; ++k)
                            CHECK(count_pairwise_intersection(t, v1, v2, ConstraintParams(m, k))
                                      .value ==
                                  testutil::naive_pair_intersection(t.graph(), v1, v2, m, k));
                }
        });
    }
}
