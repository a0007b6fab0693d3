// degchrom: exact computation and verification for the degree chromatic
// polynomial P_m(G,k) — the number of k-colorings in which no vertex has m
// neighbors of its own color.
//
// Subcommands: compute, oracle, verify, bounds, campaign. Exit codes:
//   0  success / all checks passed
//   1  a check failed (would-be counterexample) or non-integral coefficients
//   2  input or usage error

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "degchrom/counting.hpp"
#include "degchrom/graph.hpp"
#include "degchrom/rng.hpp"
#include "degchrom/theorem.hpp"

using nlohmann::ordered_json;
using namespace degchrom;

namespace {

unsigned default_threads() {
    if (const char* env = std::getenv("DEGCHROM_THREADS")) {
        const long value = std::atol(env);
        if (value >= 1) return static_cast<unsigned>(value);
    }
    return 1;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file: " + path);
    return parse_edge_list(in);
}

struct OutputSink {
    std::ofstream file;
    std::ostream* stream = &std::cout;
    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw Error("cannot open output file: " + path);
        stream = &file;
    }
    std::ostream& out() { return *stream; }
};

std::string format_ms(double ms, bool no_timing) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(3);
    s << (no_timing ? 0.0 : ms);
    return s.str();
}

ordered_json coefficients_json(const std::vector<BigInt>& coeffs) {
    ordered_json arr = ordered_json::array();
    for (const BigInt& c : coeffs) arr.push_back(c.get_str());
    return arr;
}

const char* method_name(CountMethod method) {
    switch (method) {
        case CountMethod::Oracle: return "oracle";
        case CountMethod::TreeDp: return "tree-dp";
        case CountMethod::ClosedForm: return "closed-form";
    }
    return "?";
}

// ---------------------------------------------------------------- compute

int run_compute(const std::string& graph_path, int m, const std::string& method_flag,
                const std::string& format, OutputSink& sink, const OracleOptions& opts) {
    const Graph g = load_graph(graph_path);
    PolynomialMethod method = PolynomialMethod::Auto;
    if (method_flag == "oracle") method = PolynomialMethod::Oracle;
    else if (method_flag == "tree-dp") method = PolynomialMethod::TreeDp;

    const PolynomialResult result = compute_degree_chromatic(g, m, method, opts);
    const std::vector<BigInt> coeffs = assert_integral(result.polynomial);

    if (format == "json") {
        ordered_json j;
        j["n"] = g.vertex_count();
        j["m"] = m;
        j["method"] = method_name(result.method);
        j["coefficients"] = coefficients_json(coeffs);
        sink.out() << j.dump() << "\n";
    } else if (format == "csv") {
        sink.out() << "n,m,method,coefficients\n"
                   << g.vertex_count() << "," << m << "," << method_name(result.method) << ",";
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            sink.out() << (i ? ";" : "") << coeffs[i].get_str();
        sink.out() << "\n";
    } else {
        sink.out() << "P_" << m << "(G, k) = " << to_string(result.polynomial) << "\n"
                   << "n = " << g.vertex_count() << ", method = " << method_name(result.method)
                   << "\ncoefficients (ascending):";
        for (const BigInt& c : coeffs) sink.out() << " " << c.get_str();
        sink.out() << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- oracle

int run_oracle(const std::string& graph_path, int m, std::uint64_t k, const std::string& format,
               OutputSink& sink, const OracleOptions& opts) {
    const Graph g = load_graph(graph_path);
    const CountResult result = brute_force_count(g, ConstraintParams(m, k), opts);
    if (format == "json") {
        ordered_json j;
        j["n"] = g.vertex_count();
        j["m"] = m;
        j["k"] = k;
        j["method"] = method_name(result.method);
        j["count"] = result.value.get_str();
        sink.out() << j.dump() << "\n";
    } else if (format == "csv") {
        sink.out() << "n,m,k,method,count\n"
                   << g.vertex_count() << "," << m << "," << k << ","
                   << method_name(result.method) << "," << result.value.get_str() << "\n";
    } else {
        sink.out() << "P_" << m << "(G, " << k << ") = " << result.value.get_str() << "\n";
    }
    return 0;
}

// ----------------------------------------------------- verify and campaign

struct VerifyJob {
    int index = 0;
    std::optional<std::uint64_t> seed;  // absent for file input
    std::string source;
    LabeledTree tree;
    int m = 0;
};

struct VerifyOutcome {
    bool skipped = false;
    std::string skip_reason;
    VerificationReport report;
};

void emit_verify_text(std::ostream& out, const VerifyJob& job, const VerifyOutcome& outcome,
                      bool no_timing) {
    if (outcome.skipped) {
        out << "SKIP n=" << job.tree.vertex_count() << " m=" << job.m << " source=" << job.source
            << " (" << outcome.skip_reason << ")\n";
        return;
    }
    const VerificationReport& r = outcome.report;
    out << (r.pass ? "PASS" : "FAIL") << " n=" << r.n << " m=" << r.m
        << " second=" << r.second_actual.get_str() << " (expected " << r.second_expected.get_str()
        << ") [" << format_ms(r.elapsed_ms, no_timing) << " ms] source=" << job.source << "\n";
    if (!r.pass) {
        out << "  monic=" << (r.monic_ok ? "ok" : "FAIL")
            << " zero_band=" << (r.zero_band_ok ? "ok" : "FAIL")
            << " second=" << (r.second_ok ? "ok" : "FAIL") << "\n  coefficients:";
        for (const BigInt& c : r.coefficients) out << " " << c.get_str();
        out << "\n  tree: " << r.tree_description << "\n";
    }
}

void emit_verify_json(std::ostream& out, const VerifyJob& job, const VerifyOutcome& outcome,
                      bool no_timing) {
    ordered_json j;
    j["index"] = job.index;
    j["source"] = job.source;
    if (job.seed) j["seed"] = *job.seed;
    else j["seed"] = nullptr;
    j["n"] = job.tree.vertex_count();
    j["m"] = job.m;
    if (outcome.skipped) {
        j["skipped"] = true;
        j["reason"] = outcome.skip_reason;
        out << j.dump() << "\n";
        return;
    }
    const VerificationReport& r = outcome.report;
    j["pass"] = r.pass;
    j["monic_ok"] = r.monic_ok;
    j["zero_band_ok"] = r.zero_band_ok;
    j["second_ok"] = r.second_ok;
    j["second_expected"] = r.second_expected.get_str();
    j["second_actual"] = r.second_actual.get_str();
    j["elapsed_ms"] = no_timing ? 0.0 : r.elapsed_ms;
    if (!r.pass) {
        j["coefficients"] = coefficients_json(r.coefficients);
        j["tree"] = r.tree_description;
    }
    out << j.dump() << "\n";
}

void emit_verify_csv_row(std::ostream& out, const VerifyJob& job, const VerifyOutcome& outcome,
                         bool no_timing) {
    if (outcome.skipped) return;  // notice goes to stderr
    const VerificationReport& r = outcome.report;
    out << (job.seed ? std::to_string(*job.seed) : "") << "," << r.n << "," << r.m << ","
        << (r.pass ? 1 : 0) << "," << r.second_expected.get_str() << ","
        << r.second_actual.get_str() << "," << format_ms(r.elapsed_ms, no_timing) << "\n";
}

int run_verify_jobs(std::vector<VerifyJob>& jobs, const std::string& format, OutputSink& sink,
                    unsigned threads, bool no_timing) {
    std::vector<VerifyOutcome> outcomes(jobs.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t i; (i = cursor.fetch_add(1)) < jobs.size();) {
            const VerifyJob& job = jobs[i];
            const int n = job.tree.vertex_count();
            if (job.m <= 1 || job.m >= n) {
                outcomes[i].skipped = true;
                outcomes[i].skip_reason = "theorem requires 1 < m < n";
            } else {
                outcomes[i].report = verify_tree_theorem(job.tree, job.m);
            }
        }
    };
    if (threads <= 1 || jobs.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    if (format == "csv")
        sink.out() << "seed,n,m,pass,second_coeff_expected,second_coeff_actual,elapsed_ms\n";
    bool all_pass = true;
    int skips = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (outcomes[i].skipped) {
            ++skips;
            std::cerr << "notice: skipping n=" << jobs[i].tree.vertex_count() << " m=" << jobs[i].m
                      << " (" << outcomes[i].skip_reason << ")\n";
        } else if (!outcomes[i].report.pass) {
            all_pass = false;
        }
        if (format == "json") emit_verify_json(sink.out(), jobs[i], outcomes[i], no_timing);
        else if (format == "csv") emit_verify_csv_row(sink.out(), jobs[i], outcomes[i], no_timing);
        else emit_verify_text(sink.out(), jobs[i], outcomes[i], no_timing);
    }
    if (format == "text") {
        const std::size_t checked = jobs.size() - static_cast<std::size_t>(skips);
        sink.out() << (all_pass ? "all " : "FAILURES among ") << checked << " checks passed";
        if (skips) sink.out() << " (" << skips << " skipped)";
        sink.out() << "\n";
    }
    return all_pass ? 0 : 1;
}

std::vector<VerifyJob> plan_random_jobs(int count, int n_min, int n_max, std::uint64_t seed,
                                        const std::vector<int>& m_list) {
    if (count < 1) throw Error("generator: count must be >= 1");
    if (n_min < 2 || n_min > n_max) throw Error("generator: need 2 <= n-min <= n-max");
    std::vector<VerifyJob> jobs;
    SplitMix64 master(seed);
    int index = 0;
    for (int i = 0; i < count; ++i) {
        const int n =
            n_min + static_cast<int>(master.next_below(static_cast<std::uint64_t>(n_max - n_min + 1)));
        const std::uint64_t tree_seed = master.next();
        LabeledTree tree = random_tree(n, tree_seed);
        std::ostringstream source;
        source << "random(seed=" << tree_seed << ",n=" << n << ")";
        for (int m : m_list)
            jobs.push_back(VerifyJob{index++, tree_seed, source.str(), tree, m});
    }
    return jobs;
}

// ----------------------------------------------------------------- bounds

void emit_bound_json(std::ostream& out, const BoundReport& r) {
    ordered_json j;
    j["v1"] = r.v1;
    j["v2"] = r.v2;
    j["adjacent"] = r.adjacent;
    j["case"] = r.adjacent ? "case2" : "case1";
    j["m"] = r.m;
    j["k"] = r.k;
    j["measured"] = r.measured.get_str();
    j["bound"] = r.bound.get_str();
    j["slack"] = r.slack.get_str();
    if (r.w_size) j["w_size"] = *r.w_size;
    else j["w_size"] = nullptr;
    j["strict_required"] = r.strict_required;
    j["strict_holds"] = r.strict_holds;
    j["pass"] = r.pass;
    out << j.dump() << "\n";
}

int run_bounds(const std::string& graph_path, int m, std::uint64_t k_min, std::uint64_t k_max,
               const std::string& format, OutputSink& sink, const OracleOptions& opts) {
    const LabeledTree tree = certify_tree(load_graph(graph_path));
    if (m < 2) throw Error("bounds: requires m >= 2 (Case 2 is undefined below it)");
    if (k_min < 1 || k_min > k_max) throw Error("bounds: need 1 <= k-min <= k-max");
    const int n = tree.vertex_count();

    if (format == "csv")
        sink.out() << "v1,v2,adjacent,case,m,k,measured,bound,slack,strict_required,strict_holds,"
                      "pass\n";
    bool all_pass = true;
    for (Vertex v1 = 0; v1 < n; ++v1) {
        for (Vertex v2 = v1 + 1; v2 < n; ++v2) {
            const bool adj = tree.graph().adjacent(v1, v2);
            for (std::uint64_t k = k_min; k <= k_max; ++k) {
                const ConstraintParams params(m, k);
                const BoundReport r = adj ? case2_bound_check(tree, v1, v2, params, opts)
                                          : case1_bound_check(tree, v1, v2, params, opts);
                all_pass = all_pass && r.pass;
                if (format == "json") {
                    emit_bound_json(sink.out(), r);
                } else if (format == "csv") {
                    sink.out() << r.v1 << "," << r.v2 << "," << (r.adjacent ? 1 : 0) << ","
                               << (r.adjacent ? "case2" : "case1") << "," << r.m << "," << r.k
                               << "," << r.measured.get_str() << "," << r.bound.get_str() << ","
                               << r.slack.get_str() << "," << (r.strict_required ? 1 : 0) << ","
                               << (r.strict_holds ? 1 : 0) << "," << (r.pass ? 1 : 0) << "\n";
                } else {
                    sink.out() << (r.pass ? "PASS" : "FAIL") << " " << (adj ? "case2" : "case1")
                               << " pair=(" << r.v1 << "," << r.v2 << ") m=" << r.m << " k=" << r.k
                               << " measured=" << r.measured.get_str()
                               << " bound=" << r.bound.get_str()
                               << (r.strict_holds ? " (strict)" : "") << "\n";
                }
            }
        }
    }
    if (format == "text") sink.out() << (all_pass ? "all bounds hold" : "BOUND VIOLATION") << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degchrom: exact degree chromatic polynomial engine"};
    app.require_subcommand(1);

    std::string graph_path;
    std::string format = "text";
    std::string output_path;
    std::string method_flag = "auto";
    int m = 0;
    std::vector<int> m_list;
    std::uint64_t k = 0;
    std::uint64_t k_min = 1;
    std::uint64_t k_max = 4;
    int random_count = 0;
    int n_min = 10;
    int n_max = 60;
    std::uint64_t seed = 0;
    unsigned threads = default_threads();
    bool budget_override = false;
    bool no_timing = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format: text, json, or csv");
        cmd->add_option("--output", output_path, "Write output to a file instead of stdout");
        cmd->add_option("--threads", threads, "Worker count (default: DEGCHROM_THREADS or 1)");
        cmd->add_flag("--budget-override", budget_override,
                      "Allow enumerations beyond the 2^30 coloring budget");
        cmd->add_flag("--no-timing", no_timing, "Zero elapsed fields for reproducible output");
    };

    CLI::App* compute = app.add_subcommand("compute", "Compute P_m(G,k) coefficients");
    compute->add_option("--graph", graph_path, "Graph file")->required();
    compute->add_option("--m", m, "Friend threshold m")->required();
    compute->add_option("--method", method_flag, "auto, oracle, or tree-dp")
        ->check(CLI::IsMember({"auto", "oracle", "tree-dp"}));
    add_common(compute);

    CLI::App* oracle = app.add_subcommand("oracle", "Brute-force count at a single (m, k)");
    oracle->add_option("--graph", graph_path, "Graph file")->required();
    oracle->add_option("--m", m, "Friend threshold m")->required();
    oracle->add_option("--k", k, "Color count k")->required();
    add_common(oracle);

    CLI::App* verify = app.add_subcommand("verify", "Check the predicted-tail identities on trees");
    verify->add_option("--graph", graph_path, "Tree file (exclusive with --random)");
    verify->add_option("--random", random_count, "Generate this many random trees");
    verify->add_option("--n-min", n_min, "Minimum n for random trees");
    verify->add_option("--n-max", n_max, "Maximum n for random trees");
    verify->add_option("--seed", seed, "Campaign seed");
    verify->add_option("--m", m, "Friend threshold m")->required();
    add_common(verify);

    CLI::App* bounds = app.add_subcommand("bounds", "Check the Case-1/Case-2 proof bounds");
    bounds->add_option("--graph", graph_path, "Tree file")->required();
    bounds->add_option("--m", m, "Friend threshold m (>= 2)")->required();
    bounds->add_option("--k-min", k_min, "Smallest k to check (default 1)");
    bounds->add_option("--k-max", k_max, "Largest k to check");
    add_common(bounds);

    CLI::App* campaign = app.add_subcommand("campaign", "Random-tree verification campaign");
    campaign->add_option("--random", random_count, "Number of random trees")->required();
    campaign->add_option("--n-min", n_min, "Minimum n");
    campaign->add_option("--n-max", n_max, "Maximum n");
    campaign->add_option("--seed", seed, "Campaign seed")->required();
    campaign->add_option("--m-list", m_list, "Thresholds, e.g. 2,3,5")
        ->required()
        ->delimiter(',');
    add_common(campaign);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (format != "text" && format != "json" && format != "csv") {
        std::cerr << "error: unknown format \"" << format << "\"\n";
        return 2;
    }

    OracleOptions opts;
    opts.override_budget = budget_override;
    opts.threads = threads;

    try {
        OutputSink sink;
        sink.open(output_path);
        if (compute->parsed()) return run_compute(graph_path, m, method_flag, format, sink, opts);
        if (oracle->parsed()) return run_oracle(graph_path, m, k, format, sink, opts);
        if (verify->parsed()) {
            const bool have_file = !graph_path.empty();
            const bool have_random = random_count > 0;
            if (have_file == have_random)
                throw Error("verify: exactly one of --graph and --random is required");
            std::vector<VerifyJob> jobs;
            if (have_file) {
                LabeledTree tree = certify_tree(load_graph(graph_path));
                jobs.push_back(VerifyJob{0, std::nullopt, "file:" + graph_path, tree, m});
            } else {
                jobs = plan_random_jobs(random_count, n_min, n_max, seed, {m});
            }
            return run_verify_jobs(jobs, format, sink, threads, no_timing);
        }
        if (bounds->parsed()) return run_bounds(graph_path, m, k_min, k_max, format, sink, opts);
        if (campaign->parsed()) {
            if (campaign->count("--format") == 0) format = "csv";  // campaigns are audit tables
            std::vector<VerifyJob> jobs = plan_random_jobs(random_count, n_min, n_max, seed, m_list);
            return run_verify_jobs(jobs, format, sink, threads, no_timing);
        }
    } catch (const NonIntegralCoefficientError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotATreeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
