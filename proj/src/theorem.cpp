#include "degchrom/theorem.hpp"

#include <chrono>
#include <sstream>

namespace degchrom {

PredictedTail predicted_tail(const LabeledTree& t, int m) {
    const int n = t.vertex_count();
    if (m <= 1 || m >= n)
        throw HypothesisViolationError("predicted_tail: theorem requires 1 < m < n, got m=" +
                                       std::to_string(m) + ", n=" + std::to_string(n));
    PredictedTail out;
    out.n = n;
    out.m = m;
    out.top = 1;
    for (int power = n - 1; power >= n - m + 1; --power) out.zero_powers.push_back(power);
    BigInt sum(0);
    for (Vertex v = 0; v < n; ++v) sum += binomial(t.graph().degree(v), m);
    out.second = -sum;
    return out;
}

namespace {

std::string describe_tree(const LabeledTree& t) {
    std::ostringstream out;
    out << "n=" << t.vertex_count() << " edges=[";
    bool first = true;
    for (auto [u, v] : t.graph().edges()) {
        if (!first) out << " ";
        out << u << "-" << v;
        first = false;
    }
    out << "]";
    return out.str();
}

}  // namespace

VerificationReport verify_tree_theorem(const LabeledTree& t, int m) {
    const PredictedTail tail = predicted_tail(t, m);  // hypothesis gate
    VerificationReport report;
    report.tree_description = describe_tree(t);
    report.n = tail.n;
    report.m = m;

    const auto start = std::chrono::steady_clock::now();
    const BigPolynomial poly =
        degree_chromatic_polynomial(t.graph(), m, PolynomialMethod::TreeDp);
    std::vector<BigInt> coeffs = assert_integral(poly);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();

    coeffs.resize(static_cast<std::size_t>(tail.n) + 1, BigInt(0));
    report.coefficients = std::move(coeffs);

    report.monic_ok = poly.degree() == tail.n &&
                      report.coefficients[static_cast<std::size_t>(tail.n)] == 1;
    report.zero_band_ok = true;
    for (int power : tail.zero_powers)
        if (report.coefficients[static_cast<std::size_t>(power)] != 0) report.zero_band_ok = false;
    report.second_expected = tail.second;
    report.second_actual = report.coefficients[static_cast<std::size_t>(tail.n - m)];
    report.second_ok = report.second_actual == report.second_expected;
    report.pass = report.monic_ok && report.zero_band_ok && report.second_ok;
    return report;
}

BoundReport case1_bound_check(const LabeledTree& t, Vertex v1, Vertex v2,
                              const ConstraintParams& params, const OracleOptions& opts) {
    const Graph& g = t.graph();
    g.degree(v1);
    const int d2 = g.degree(v2);
    if (v1 == v2) throw std::invalid_argument("case1_bound_check: vertices must be distinct");
    if (g.adjacent(v1, v2))
        throw std::invalid_argument("case1_bound_check: adjacent pair, use case2_bound_check");
    if (params.k < 1) throw std::invalid_argument("case1_bound_check: requires k >= 1");

    BoundReport report;
    report.v1 = v1;
    report.v2 = v2;
    report.adjacent = false;
    report.m = params.m;
    report.k = params.k;
    report.measured = count_pairwise_intersection(t, v1, v2, params, opts).value;
    // |A_v1| carries an explicit factor k, so the per-class count is exact.
    const BigInt per_class = count_Av(t, v1, params).value / big_from_u64(params.k);
    report.bound = per_class * BigInt(d2 / params.m);
    report.slack = report.bound - report.measured;
    report.strict_required = false;
    report.strict_holds = report.measured < report.bound;
    report.pass = report.measured <= report.bound;
    return report;
}

BoundReport case2_bound_check(const LabeledTree& t, Vertex v1, Vertex v2,
                              const ConstraintParams& params, const OracleOptions& opts) {
    const Graph& g = t.graph();
    g.degree(v1);
    const int d2 = g.degree(v2);
    if (v1 == v2) throw std::invalid_argument("case2_bound_check: vertices must be distinct");
    if (!g.adjacent(v1, v2))
        throw std::invalid_argument("case2_bound_check: non-adjacent pair, use case1_bound_check");
    if (params.m < 2) throw std::invalid_argument("case2_bound_check: requires m >= 2");
    if (params.k < 1) throw std::invalid_argument("case2_bound_check: requires k >= 1");

    BoundReport report;
    report.v1 = v1;
    report.v2 = v2;
    report.adjacent = true;
    report.m = params.m;
    report.k = params.k;
    report.w_size = d2 - 1;
    report.measured = count_pairwise_intersection(t, v1, v2, params, opts).value;
    const BigInt a1 = count_Av(t, v1, params).value;
    report.bound = (a1 / big_from_u64(params.k)) * (BigInt(1) << static_cast<unsigned>(d2 - 1));
    report.slack = report.bound - report.measured;
    report.strict_required = a1 > 0;
    report.strict_holds = report.measured < report.bound;
    report.pass = report.measured <= report.bound;
    return report;
}

}  // namespace degchrom
