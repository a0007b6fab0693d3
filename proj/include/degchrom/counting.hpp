#ifndef DEGCHROM_COUNTING_HPP
#define DEGCHROM_COUNTING_HPP

#include <cstdint>
#include <vector>

#include "degchrom/bignum.hpp"
#include "degchrom/graph.hpp"
#include "degchrom/polynomial.hpp"

namespace degchrom {

using Color = std::uint32_t;

// A coloring is admissible when every vertex has fewer than m neighbors of
// its own color, out of k available colors.
struct ConstraintParams {
    int m;
    std::uint64_t k;
    ConstraintParams(int m, std::uint64_t k);
};

struct Coloring {
    std::vector<Color> assignment;  // one entry per vertex, each in [0, k)
};

enum class CountMethod { Oracle, TreeDp, ClosedForm };

struct CountResult {
    BigInt value;
    CountMethod method;
};

struct OracleOptions {
    int budget_bits = 30;         // refuse enumerations beyond 2^budget_bits colorings
    bool override_budget = false;
    unsigned threads = 1;         // fan-out over the outermost color digit
};

// Number of neighbors of v sharing v's color under c.
int friend_count(const Graph& g, const Coloring& c, Vertex v);

// Exhaustive enumeration of all k^n colorings of an arbitrary graph, guarded
// by the budget. The total is a sum over disjoint enumeration ranges, so it
// is independent of worker count and scheduling.
CountResult brute_force_count(const Graph& g, const ConstraintParams& params,
                              const OracleOptions& opts = {});

// Exact-integer dynamic program over the tree rooted at vertex 0, O(n*m)
// big-integer operations per evaluation. Per vertex, a = admissible
// colorings of its subtree with the vertex's color fixed and at most m-1
// same-colored children, b = the same with at most m-2; children combine via
// the product of (b*x + (k-1)*a) truncated above x^(m-1). Answer k*a(root).
CountResult tree_dp_count(const LabeledTree& t, const ConstraintParams& params);

enum class PolynomialMethod { Auto, Oracle, TreeDp };

struct PolynomialResult {
    BigPolynomial polynomial;
    CountMethod method;
};

// Evaluates the chosen counter at k = 0..n and interpolates. Coefficients
// are checked integral before returning (NonIntegralCoefficientError
// otherwise). Auto picks the tree DP when the graph certifies as a tree.
PolynomialResult compute_degree_chromatic(const Graph& g, int m,
                                          PolynomialMethod method = PolynomialMethod::Auto,
                                          const OracleOptions& opts = {});

inline BigPolynomial degree_chromatic_polynomial(const Graph& g, int m,
                                                 PolynomialMethod method = PolynomialMethod::Auto,
                                                 const OracleOptions& opts = {}) {
    return compute_degree_chromatic(g, m, method, opts).polynomial;
}

// |A_v|: colorings in which v has at least m friends, by the closed form
//   k^(n-1-d(v)) * k * sum_{l=m}^{d(v)} C(d(v),l) (k-1)^(d(v)-l),
// which is 0 whenever d(v) < m.
CountResult count_Av(const LabeledTree& t, Vertex v, const ConstraintParams& params);

// |A_v1 ∩ A_v2|: colorings in which both vertices have at least m friends.
// Enumerates colorings of N[v1] ∪ N[v2]; every other vertex is free and
// contributes a factor k. The budget guards the enumerated space.
CountResult count_pairwise_intersection(const LabeledTree& t, Vertex v1, Vertex v2,
                                        const ConstraintParams& params,
                                        const OracleOptions& opts = {});

}  // namespace degchrom

#endif
