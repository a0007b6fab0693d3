#include "degchrom/counting.hpp"

#include <algorithm>
#include <optional>
#include <thread>

#include "degchrom/errors.hpp"

namespace degchrom {

ConstraintParams::ConstraintParams(int m_in, std::uint64_t k_in) : m(m_in), k(k_in) {
    if (m < 1) throw std::invalid_argument("ConstraintParams: m must be >= 1");
}

int friend_count(const Graph& g, const Coloring& c, Vertex v) {
    const auto& nb = g.neighbors(v);  // range-checks v
    if (static_cast<int>(c.assignment.size()) != g.vertex_count())
        throw std::invalid_argument("friend_count: coloring length " +
                                    std::to_string(c.assignment.size()) + " != vertex count " +
                                    std::to_string(g.vertex_count()));
    const Color mine = c.assignment[static_cast<std::size_t>(v)];
    int count = 0;
    for (Vertex u : nb) count += (c.assignment[static_cast<std::size_t>(u)] == mine);
    return count;
}

namespace {

void check_budget(const BigInt& space, const OracleOptions& opts, const char* where) {
    if (opts.override_budget) return;
    const BigInt limit = BigInt(1) << static_cast<unsigned>(opts.budget_bits);
    if (space > limit)
        throw BudgetExceededError(std::string(where) + ": " + space.get_str() +
                                  " colorings exceed the 2^" + std::to_string(opts.budget_bits) +
                                  " budget (set the override to force)");
}

}  // namespace

CountResult brute_force_count(const Graph& g, const ConstraintParams& params,
                              const OracleOptions& opts) {
    const int n = g.vertex_count();
    const std::uint64_t k = params.k;
    const int m = params.m;
    if (n == 0) return {BigInt(1), CountMethod::Oracle};
    check_budget(pow_int(big_from_u64(k), static_cast<unsigned long>(n)), opts,
                 "brute_force_count");
    if (k == 0) return {BigInt(0), CountMethod::Oracle};

    const auto workers =
        static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, opts.threads), k));

    // Worker w enumerates every coloring whose outermost digit is congruent
    // to w mod workers; the digits below run through a plain odometer.
    auto count_block = [&](unsigned w) -> std::uint64_t {
        std::uint64_t local = 0;
        std::vector<Color> col(static_cast<std::size_t>(n), 0);
        for (std::uint64_t top = w; top < k; top += workers) {
            std::fill(col.begin(), col.end(), 0);
            col[static_cast<std::size_t>(n - 1)] = static_cast<Color>(top);
            for (;;) {
                bool ok = true;
                for (Vertex v = 0; v < n && ok; ++v) {
                    int same = 0;
                    for (Vertex u : g.neighbors(v)) {
                        if (col[static_cast<std::size_t>(u)] == col[static_cast<std::size_t>(v)] &&
                            ++same >= m) {
                            ok = false;
                            break;
                        }
                    }
                }
                local += ok;
                int pos = 0;
                while (pos < n - 1 && static_cast<std::uint64_t>(++col[static_cast<std::size_t>(
                                          pos)]) == k)
                    col[static_cast<std::size_t>(pos++)] = 0;
                if (pos == n - 1) break;
            }
        }
        return local;
    };

    if (workers == 1) return {big_from_u64(count_block(0)), CountMethod::Oracle};

    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&partial, &count_block, w] { partial[w] = count_block(w); });
    for (auto& th : pool) th.join();
    std::uint64_t total = 0;
    for (std::uint64_t part : partial) total += part;
    return {big_from_u64(total), CountMethod::Oracle};
}

CountResult tree_dp_count(const LabeledTree& t, const ConstraintParams& params) {
    const Graph& g = t.graph();
    const int n = g.vertex_count();
    const auto m = static_cast<std::size_t>(params.m);
    const BigInt k = big_from_u64(params.k);
    const BigInt k_minus_1 = k - 1;

    // BFS order from the fixed root 0; processing it in reverse is post-order
    // enough for the child values to be ready.
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const Vertex v = order[head];
        for (Vertex u : g.neighbors(v)) {
            if (u != parent[static_cast<std::size_t>(v)]) {
                parent[static_cast<std::size_t>(u)] = v;
                order.push_back(u);
            }
        }
    }

    std::vector<BigInt> a(static_cast<std::size_t>(n));
    std::vector<BigInt> b(static_cast<std::size_t>(n));
    std::vector<BigInt> prod;
    std::vector<BigInt> next;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex v = *it;
        // prod[j] = ways over the children seen so far with exactly j of them
        // sharing v's color; truncated above j = m-1.
        prod.assign(1, BigInt(1));
        for (Vertex u : g.neighbors(v)) {
            if (u == parent[static_cast<std::size_t>(v)]) continue;
            const std::size_t cap = std::min(prod.size() + 1, m);
            next.assign(cap, BigInt(0));
            const BigInt other_color = k_minus_1 * a[static_cast<std::size_t>(u)];
            for (std::size_t j = 0; j < prod.size(); ++j) {
                next[j] += prod[j] * other_color;
                if (j + 1 < cap) next[j + 1] += prod[j] * b[static_cast<std::size_t>(u)];
            }
            std::swap(prod, next);
        }
        BigInt sum_a(0);
        BigInt sum_b(0);
        for (std::size_t j = 0; j < prod.size(); ++j) {
            sum_a += prod[j];
            if (j + 1 < m) sum_b += prod[j];
        }
        a[static_cast<std::size_t>(v)] = sum_a;
        b[static_cast<std::size_t>(v)] = sum_b;
    }
    return {k * a[0], CountMethod::TreeDp};
}

PolynomialResult compute_degree_chromatic(const Graph& g, int m, PolynomialMethod method,
                                          const OracleOptions& opts) {
    if (m < 1) throw std::invalid_argument("degree_chromatic_polynomial: m must be >= 1");
    const int n = g.vertex_count();

    std::optional<LabeledTree> tree;
    switch (method) {
        case PolynomialMethod::TreeDp:
            tree = certify_tree(g);
            break;
        case PolynomialMethod::Oracle:
            break;
        case PolynomialMethod::Auto:
            try {
                tree = certify_tree(g);
            } catch (const NotATreeError&) {
            }
            break;
    }
    if (!tree) {
        // Fail before any work: the k = n node is the costliest evaluation.
        check_budget(pow_int(BigInt(n), static_cast<unsigned long>(n)), opts,
                     "degree_chromatic_polynomial");
    }

    std::vector<EvaluationPoint> points;
    points.reserve(static_cast<std::size_t>(n) + 1);
    for (int node = 0; node <= n; ++node) {
        const ConstraintParams params(m, static_cast<std::uint64_t>(node));
        BigInt value = tree ? tree_dp_count(*tree, params).value
                            : brute_force_count(g, params, opts).value;
        points.push_back({BigInt(node), std::move(value)});
    }
    BigPolynomial poly = interpolate(points);
    assert_integral(poly);
    return {std::move(poly), tree ? CountMethod::TreeDp : CountMethod::Oracle};
}

CountResult count_Av(const LabeledTree& t, Vertex v, const ConstraintParams& params) {
    const Graph& g = t.graph();
    const int d = g.degree(v);  // range-checks v
    const int n = g.vertex_count();
    if (d < params.m) return {BigInt(0), CountMethod::ClosedForm};
    const BigInt k = big_from_u64(params.k);
    const BigInt k_minus_1 = k - 1;
    BigInt tail(0);
    for (int l = params.m; l <= d; ++l)
        tail += binomial(d, l) * pow_int(k_minus_1, static_cast<unsigned long>(d - l));
    return {pow_int(k, static_cast<unsigned long>(n - 1 - d)) * k * tail,
            CountMethod::ClosedForm};
}

CountResult count_pairwise_intersection(const LabeledTree& t, Vertex v1, Vertex v2,
                                        const ConstraintParams& params,
                                        const OracleOptions& opts) {
    const Graph& g = t.graph();
    const int n = g.vertex_count();
    const int d1 = g.degree(v1);
    const int d2 = g.degree(v2);
    if (v1 == v2)
        throw std::invalid_argument("count_pairwise_intersection: vertices must be distinct");
    const int m = params.m;
    const std::uint64_t k = params.k;
    if (k == 0) return {BigInt(0), CountMethod::Oracle};
    // A vertex of degree < m can never reach m friends.
    if (d1 < m || d2 < m) return {BigInt(0), CountMethod::Oracle};

    // Only the colors of N[v1] ∪ N[v2] can affect either friend count; each
    // remaining vertex contributes a free factor k. Pinning v1's color
    // contributes another factor k by color symmetry.
    std::vector<Vertex> relevant{v1, v2};
    for (Vertex u : g.neighbors(v1)) relevant.push_back(u);
    for (Vertex u : g.neighbors(v2)) relevant.push_back(u);
    std::sort(relevant.begin(), relevant.end());
    relevant.erase(std::unique(relevant.begin(), relevant.end()), relevant.end());
    const auto free_vertices = static_cast<unsigned long>(n - static_cast<int>(relevant.size()));

    std::vector<int> local(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < relevant.size(); ++i)
        local[static_cast<std::size_t>(relevant[i])] = static_cast<int>(i);

    std::vector<int> digits;  // local indices that get enumerated (all but v1)
    for (std::size_t i = 0; i < relevant.size(); ++i)
        if (relevant[i] != v1) digits.push_back(static_cast<int>(i));
    check_budget(pow_int(big_from_u64(k), digits.size()), opts, "count_pairwise_intersection");

    std::vector<int> nb1;
    std::vector<int> nb2;
    for (Vertex u : g.neighbors(v1)) nb1.push_back(local[static_cast<std::size_t>(u)]);
    for (Vertex u : g.neighbors(v2)) nb2.push_back(local[static_cast<std::size_t>(u)]);
    const int local_v2 = local[static_cast<std::size_t>(v2)];

    std::vector<Color> col(relevant.size(), 0);  // v1's slot stays color 0
    std::uint64_t hits = 0;
    for (;;) {
        int same1 = 0;
        for (int idx : nb1) same1 += (col[static_cast<std::size_t>(idx)] == 0);
        if (same1 >= m) {
            const Color c2 = col[static_cast<std::size_t>(local_v2)];
            int same2 = 0;
            for (int idx : nb2) same2 += (col[static_cast<std::size_t>(idx)] == c2);
            if (same2 >= m) ++hits;
        }
        std::size_t pos = 0;
        while (pos < digits.size() &&
               static_cast<std::uint64_t>(++col[static_cast<std::size_t>(digits[pos])]) == k)
            col[static_cast<std::size_t>(digits[pos++])] = 0;
        if (pos == digits.size()) break;
    }

    const BigInt value =
        big_from_u64(hits) * big_from_u64(k) * pow_int(big_from_u64(k), free_vertices);
    return {value, CountMethod::Oracle};
}

}  // namespace degchrom
