#ifndef DEGCHROM_THEOREM_HPP
#define DEGCHROM_THEOREM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degchrom/counting.hpp"

namespace degchrom {

// Predicted tail of P_m(T,k) for a tree: monic at k^n, a zero band at powers
// n-1 .. n-m+1, and -sum_v C(d(v), m) at power n-m.
struct PredictedTail {
    int n = 0;
    int m = 0;
    BigInt top;                    // coefficient of k^n, always 1
    std::vector<int> zero_powers;  // n-1 down to n-m+1
    BigInt second;                 // coefficient of k^(n-m), always <= 0
};

// Requires the theorem hypotheses 1 < m < n (HypothesisViolationError otherwise).
PredictedTail predicted_tail(const LabeledTree& t, int m);

struct VerificationReport {
    std::string tree_description;
    int n = 0;
    int m = 0;
    std::vector<BigInt> coefficients;  // ascending, n+1 entries
    bool monic_ok = false;
    bool zero_band_ok = false;
    bool second_ok = false;
    BigInt second_expected;
    BigInt second_actual;
    double elapsed_ms = 0.0;
    bool pass = false;  // conjunction of the three per-checks
};

// Computes P_m via the tree DP plus exact interpolation and checks the three
// predicted-tail identities. Coefficients below k^(n-m) are reported but
// never asserted; the theorem says nothing about them.
VerificationReport verify_tree_theorem(const LabeledTree& t, int m);

struct BoundReport {
    Vertex v1 = 0;
    Vertex v2 = 0;
    bool adjacent = false;
    int m = 0;
    std::uint64_t k = 0;
    BigInt measured;  // |A_v1 ∩ A_v2|
    BigInt bound;
    BigInt slack;                // bound - measured, >= 0 on pass
    std::optional<int> w_size;   // |W| = d(v2) - 1, adjacent pairs only
    bool strict_required = false;
    bool strict_holds = false;
    bool pass = false;
};

// Non-adjacent pair: |A∩| <= (|A_v1| / k) * floor(d(v2) / m). Requires the
// pair distinct and non-adjacent and k >= 1.
BoundReport case1_bound_check(const LabeledTree& t, Vertex v1, Vertex v2,
                              const ConstraintParams& params, const OracleOptions& opts = {});

// Adjacent pair, m >= 2: |A∩| <= |A_v1| * 2^|W| / k, and strict whenever
// |A_v1| > 0 (strictness recorded, the pass itself is the "<=").
BoundReport case2_bound_check(const LabeledTree& t, Vertex v1, Vertex v2,
                              const ConstraintParams& params, const OracleOptions& opts = {});

}  // namespace degchrom

#endif
