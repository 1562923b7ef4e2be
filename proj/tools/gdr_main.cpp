// Command-line front end. Talks to the solver library exclusively through
// the C API in gdr/gdr.h: data goes to stdout, diagnostics go to stderr as
// one JSON object per failure.
//
// Exit codes: 0 success, 1 usage or parse errors, 2 infeasible instance,
// 3 factor bound not certified, 4 failed verification or audit, 5 internal
// error.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <gdr/gdr.h>

using nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_infeasible = 2;
constexpr int exit_uncertified = 3;
constexpr int exit_rejected = 4;
constexpr int exit_internal = 5;

struct graph_ptr {
    gdr_graph* p = nullptr;
    ~graph_ptr() { gdr_graph_free(p); }
};

struct solution_ptr {
    gdr_solution* p = nullptr;
    ~solution_ptr() { gdr_solution_free(p); }
};

struct string_ptr {
    char* p = nullptr;
    ~string_ptr() { gdr_string_free(p); }
};

const char* status_name(gdr_status s) {
    switch (s) {
    case GDR_OK: return "ok";
    case GDR_ERROR_PARSE: return "parse";
    case GDR_ERROR_INFEASIBLE: return "infeasible";
    case GDR_ERROR_BOUND_NOT_CERTIFIED: return "bound_not_certified";
    case GDR_ERROR_INVALID_ARGUMENT: return "invalid_argument";
    case GDR_ERROR_TOO_LARGE: return "too_large";
    case GDR_ERROR_INTERNAL: return "internal";
    }
    return "internal";
}

int exit_for(gdr_status s) {
    switch (s) {
    case GDR_OK: return exit_ok;
    case GDR_ERROR_PARSE: return exit_usage;
    case GDR_ERROR_INFEASIBLE: return exit_infeasible;
    case GDR_ERROR_BOUND_NOT_CERTIFIED: return exit_uncertified;
    case GDR_ERROR_INVALID_ARGUMENT: return exit_usage;
    case GDR_ERROR_TOO_LARGE: return exit_usage;
    case GDR_ERROR_INTERNAL: return exit_internal;
    }
    return exit_internal;
}

// Emits the machine-readable error object and returns the exit code.
int report_error(gdr_status s) {
    ordered_json err{{"code", status_name(s)}, {"message", gdr_last_error()}};
    std::cerr << err.dump() << "\n";
    return exit_for(s);
}

int report_usage(const std::string& message) {
    ordered_json err{{"code", "usage"}, {"message", message}};
    std::cerr << err.dump() << "\n";
    return exit_usage;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << text;
    return bool(out);
}

bool problem_from_name(const std::string& name, gdr_problem& out) {
    if (name == "nonblocker") { out = GDR_PROBLEM_NONBLOCKER; return true; }
    if (name == "harmless") { out = GDR_PROBLEM_HARMLESS; return true; }
    if (name == "differential") { out = GDR_PROBLEM_DIFFERENTIAL; return true; }
    if (name == "knonblocker") { out = GDR_PROBLEM_KNONBLOCKER; return true; }
    return false;
}

gdr_format format_from_name(const std::string& name) {
    if (name == "dimacs") return GDR_FORMAT_DIMACS;
    if (name == "edgelist") return GDR_FORMAT_EDGELIST;
    return GDR_FORMAT_AUTO;
}

std::string factor_bound(gdr_problem problem, int k) {
    switch (problem) {
    case GDR_PROBLEM_NONBLOCKER: return "5/3";
    case GDR_PROBLEM_HARMLESS: return "2";
    case GDR_PROBLEM_DIFFERENTIAL: return "11/3";
    case GDR_PROBLEM_KNONBLOCKER:
        return std::to_string(k + 1) + " up to additive " + std::to_string(k);
    }
    return "";
}

int load_graph(const std::string& path, const std::string& format, graph_ptr& g) {
    std::string text;
    if (!read_file(path, text)) return report_usage("cannot read " + path);
    gdr_status s = gdr_graph_parse(text.c_str(), format_from_name(format), &g.p);
    if (s != GDR_OK) return report_error(s);
    return exit_ok;
}

// Shared flags of the graph-consuming subcommands.
struct instance_options {
    std::string problem;
    int k = 0;
    std::string input;
    std::string format = "auto";

    void attach(CLI::App* cmd, bool with_problem = true) {
        if (with_problem)
            cmd->add_option("--problem", problem, "Problem to solve")
                ->required()
                ->check(CLI::IsMember({"nonblocker", "harmless", "differential", "knonblocker"}));
        cmd->add_option("--k", k, "Domination multiplicity, knonblocker only (k >= 2)");
        cmd->add_option("--input", input, "Graph file")->required();
        cmd->add_option("--format", format, "Input format")
            ->check(CLI::IsMember({"dimacs", "edgelist", "auto"}));
    }

    // Validates the problem/k pairing; fills prob.
    int resolve(gdr_problem& prob) const {
        if (!problem_from_name(problem, prob)) return report_usage("unknown problem");
        if (prob == GDR_PROBLEM_KNONBLOCKER && k < 2)
            return report_usage("--k is required for knonblocker and must be at least 2");
        if (prob != GDR_PROBLEM_KNONBLOCKER && k != 0)
            return report_usage("--k only applies to knonblocker");
        return exit_ok;
    }
};

// Recomputes feasibility and value of a solution before it is emitted.
int recheck(const gdr_graph* g, gdr_problem prob, int k, const gdr_solution* sol) {
    int feasible = 0;
    int64_t value = 0;
    gdr_status s = gdr_verify(g, prob, k, gdr_solution_vertices(sol),
                              gdr_solution_size(sol), &feasible, &value);
    if (s != GDR_OK) return report_error(s);
    if (feasible != 1 || value != gdr_solution_value(sol)) {
        ordered_json err{{"code", "internal"},
                         {"message", "emitted solution failed re-verification"}};
        std::cerr << err.dump() << "\n";
        return exit_internal;
    }
    return exit_ok;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_ratio(double r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", r);
    return buf;
}

int cmd_solve(const instance_options& inst, bool exact, bool csv,
              const std::string& trace_out) {
    gdr_problem prob;
    if (int rc = inst.resolve(prob); rc != exit_ok) return rc;
    graph_ptr g;
    if (int rc = load_graph(inst.input, inst.format, g); rc != exit_ok) return rc;

    auto t0 = std::chrono::steady_clock::now();
    solution_ptr sol;
    gdr_status s = gdr_solve(g.p, prob, inst.k, &sol.p);
    if (s != GDR_OK) return report_error(s);
    auto t1 = std::chrono::steady_clock::now();
    long runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

    if (int rc = recheck(g.p, prob, inst.k, sol.p); rc != exit_ok) return rc;

    long value = gdr_solution_value(sol.p);
    bool have_exact = false;
    int64_t exact_value = 0;
    double ratio = 1.0;
    if (exact) {
        gdr_status es = gdr_exact_value(g.p, prob, inst.k, &exact_value);
        if (es != GDR_OK) return report_error(es);
        have_exact = true;
        ratio = value > 0 ? double(exact_value) / double(value)
                          : (exact_value == 0 ? 1.0 : 0.0);
    }

    if (!trace_out.empty()) {
        std::string pretty = ordered_json::parse(gdr_solution_trace_json(sol.p)).dump(2);
        if (!write_file(trace_out, pretty + "\n"))
            return report_usage("cannot write " + trace_out);
    }

    std::vector<int32_t> ids(gdr_solution_vertices(sol.p),
                             gdr_solution_vertices(sol.p) + gdr_solution_size(sol.p));
    bool fallback = gdr_solution_fallback_used(sol.p) != 0;

    if (csv) {
        std::string id_text;
        for (size_t i = 0; i < ids.size(); ++i) {
            if (i > 0) id_text += ' ';
            id_text += std::to_string(ids[i]);
        }
        // The wall-clock column stays last so one masking rule covers every
        // CSV shape when outputs are compared across runs.
        std::cout << "problem,n,m,k,value,feasible,factor_bound,exact_value,ratio,"
                     "fallback_used,solution,runtime_ms\n";
        std::cout << inst.problem << ',' << gdr_graph_vertex_count(g.p) << ','
                  << gdr_graph_edge_count(g.p) << ','
                  << (prob == GDR_PROBLEM_KNONBLOCKER ? std::to_string(inst.k) : "") << ','
                  << value << ",true," << csv_escape(factor_bound(prob, inst.k)) << ','
                  << (have_exact ? std::to_string(exact_value) : "") << ','
                  << (have_exact ? format_ratio(ratio) : "") << ','
                  << (fallback ? "true" : "false") << ',' << csv_escape(id_text) << ','
                  << runtime_ms << "\n";
        return exit_ok;
    }

    ordered_json out;
    out["problem"] = inst.problem;
    out["n"] = gdr_graph_vertex_count(g.p);
    out["m"] = gdr_graph_edge_count(g.p);
    if (prob == GDR_PROBLEM_KNONBLOCKER) out["k"] = inst.k;
    out["value"] = value;
    out["solution"] = ids;
    out["feasible"] = true;
    out["factor_bound"] = factor_bound(prob, inst.k);
    if (have_exact) {
        out["exact_value"] = exact_value;
        out["ratio"] = ratio;
    }
    out["fallback_used"] = fallback;
    out["runtime_ms"] = runtime_ms;
    std::cout << out.dump(2) << "\n";
    return exit_ok;
}

int cmd_verify(const std::string& input, const std::string& format,
               const std::string& solution_path, const std::string& problem_flag,
               int k_flag) {
    graph_ptr g;
    if (int rc = load_graph(input, format, g); rc != exit_ok) return rc;

    std::string sol_text;
    if (!read_file(solution_path, sol_text)) return report_usage("cannot read " + solution_path);
    ordered_json sol_json = ordered_json::parse(sol_text, nullptr, false);
    if (sol_json.is_discarded() || !sol_json.is_object() ||
        !sol_json.contains("vertices") || !sol_json["vertices"].is_array())
        return report_usage("solution file must be a JSON object with a vertices array");

    std::string problem = problem_flag;
    if (sol_json.contains("problem")) {
        std::string file_problem = sol_json["problem"].get<std::string>();
        if (!problem.empty() && problem != file_problem)
            return report_usage("--problem disagrees with the solution file");
        problem = file_problem;
    }
    if (problem.empty()) return report_usage("no problem named on the command line or in the file");
    gdr_problem prob;
    if (!problem_from_name(problem, prob)) return report_usage("unknown problem");

    int k = k_flag;
    if (sol_json.contains("k")) {
        int file_k = sol_json["k"].get<int>();
        if (k != 0 && k != file_k) return report_usage("--k disagrees with the solution file");
        k = file_k;
    }
    if (prob == GDR_PROBLEM_KNONBLOCKER && k < 2)
        return report_usage("knonblocker needs k >= 2");
    if (prob != GDR_PROBLEM_KNONBLOCKER) k = 0;

    std::vector<int32_t> ids;
    for (const auto& v : sol_json["vertices"]) {
        if (!v.is_number_integer()) return report_usage("vertices must be integers");
        ids.push_back(v.get<int32_t>());
    }

    int feasible = 0;
    int64_t value = 0;
    gdr_status s = gdr_verify(g.p, prob, k, ids.data(), ids.size(), &feasible, &value);
    if (s != GDR_OK) return report_error(s);

    ordered_json out;
    out["problem"] = problem;
    out["n"] = gdr_graph_vertex_count(g.p);
    out["m"] = gdr_graph_edge_count(g.p);
    if (prob == GDR_PROBLEM_KNONBLOCKER) out["k"] = k;
    out["size"] = ids.size();
    out["feasible"] = feasible == 1;
    if (feasible == 1) out["value"] = value;
    std::cout << out.dump(2) << "\n";
    return feasible == 1 ? exit_ok : exit_rejected;
}

int cmd_reduce(const instance_options& inst, const std::string& output) {
    gdr_problem prob;
    if (int rc = inst.resolve(prob); rc != exit_ok) return rc;
    graph_ptr g;
    if (int rc = load_graph(inst.input, inst.format, g); rc != exit_ok) return rc;

    string_ptr report;
    gdr_status s = gdr_reduce(g.p, prob, inst.k, &report.p);
    if (s != GDR_OK) return report_error(s);
    if (!output.empty()) {
        ordered_json j = ordered_json::parse(report.p);
        if (!write_file(output, j["reduced"].get<std::string>()))
            return report_usage("cannot write " + output);
    }
    std::cout << report.p << "\n";
    return exit_ok;
}

int cmd_audit(const std::vector<std::string>& rules, int k, int graphs,
              uint64_t seed, bool json_out) {
    std::vector<std::string> ids = rules;
    if (ids.empty()) {
        string_ptr all;
        gdr_status s = gdr_rule_list(k, &all.p);
        if (s != GDR_OK) return report_error(s);
        std::istringstream lines(all.p);
        for (std::string line; std::getline(lines, line);)
            if (!line.empty()) ids.push_back(line);
    }

    ordered_json reports = ordered_json::array();
    bool all_passed = true;
    for (const auto& id : ids) {
        string_ptr rep;
        gdr_status s = gdr_audit_rule(id.c_str(), k, graphs, seed, &rep.p);
        if (s != GDR_OK) return report_error(s);
        ordered_json j = ordered_json::parse(rep.p);
        bool passed = j["passed"].get<bool>();
        all_passed = all_passed && passed;
        if (json_out) {
            reports.push_back(j);
        } else {
            std::cout << (passed ? "pass " : "FAIL ") << id << "  graphs="
                      << j["graphs_checked"].get<int>() << " solutions="
                      << j["solutions_checked"].get<int>() << " violations="
                      << j["violations"].size() << "\n";
            for (const auto& v : j["violations"])
                std::cout << "  " << v.get<std::string>() << "\n";
        }
    }
    if (json_out) std::cout << reports.dump(2) << "\n";
    return all_passed ? exit_ok : exit_rejected;
}

// One bench row; opt and ratio stay empty when the oracle refuses the size.
int bench_row(std::ostream& os, const std::string& name, gdr_graph* g,
              gdr_problem prob, int k) {
    auto t0 = std::chrono::steady_clock::now();
    solution_ptr sol;
    gdr_status s = gdr_solve(g, prob, k, &sol.p);
    if (s != GDR_OK) return report_error(s);
    auto t1 = std::chrono::steady_clock::now();
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

    if (int rc = recheck(g, prob, k, sol.p); rc != exit_ok) return rc;

    long value = gdr_solution_value(sol.p);
    std::string opt_text, ratio_text;
    int64_t opt = 0;
    gdr_status es = gdr_exact_value(g, prob, k, &opt);
    if (es == GDR_OK) {
        opt_text = std::to_string(opt);
        if (value > 0)
            ratio_text = format_ratio(double(opt) / double(value));
        else if (opt == 0)
            ratio_text = format_ratio(1.0);
    } else if (es != GDR_ERROR_TOO_LARGE) {
        return report_error(es);
    }

    os << name << ',' << gdr_graph_vertex_count(g) << ',' << gdr_graph_edge_count(g)
       << ',' << value << ',' << opt_text << ',' << ratio_text << ',' << ms << "\n";
    return exit_ok;
}

int cmd_bench(const std::string& problem, int k, const std::string& sizes,
              int per_size, uint64_t seed, int edge_percent, int degree) {
    gdr_problem prob;
    if (!problem_from_name(problem, prob)) return report_usage("unknown problem");
    if (prob == GDR_PROBLEM_KNONBLOCKER && k < 2)
        return report_usage("--k is required for knonblocker and must be at least 2");

    int lo = 0, hi = 0;
    if (std::sscanf(sizes.c_str(), "%d..%d", &lo, &hi) != 2 || lo < 2 || hi < lo ||
        hi > 10000)
        return report_usage("--sizes must be A..B with 2 <= A <= B");
    if (per_size < 1) return report_usage("--per-size must be positive");
    if (edge_percent < 1 || edge_percent > 100)
        return report_usage("--edge-percent must be in [1, 100]");
    if (degree < 2) return report_usage("--degree must be at least 2");

    std::ostringstream out;
    out << "instance,n,m,value,opt,ratio,ms\n";
    for (int n = lo; n <= hi; ++n) {
        for (int i = 0; i < per_size; ++i) {
            // Stable per-instance seeds derived by arithmetic only, so one
            // CSV row never depends on how many rows preceded it.
            uint64_t base = seed * 1000003ULL + uint64_t(n) * 4096ULL + uint64_t(i) * 2ULL;

            graph_ptr er;
            gdr_status s = gdr_random_graph(n, edge_percent, base, 1, &er.p);
            if (s != GDR_OK) return report_error(s);
            std::string er_name = "er-n" + std::to_string(n) + "-i" + std::to_string(i);
            if (int rc = bench_row(out, er_name, er.p, prob, k); rc != exit_ok) return rc;

            int d = (n * degree) % 2 == 0 ? degree : degree + 1;
            if (d < n) {
                graph_ptr reg;
                s = gdr_random_regular_graph(n, d, base + 1, &reg.p);
                if (s != GDR_OK) return report_error(s);
                std::string reg_name =
                    "reg" + std::to_string(d) + "-n" + std::to_string(n) + "-i" + std::to_string(i);
                if (int rc = bench_row(out, reg_name, reg.p, prob, k); rc != exit_ok) return rc;
            }
        }
    }
    std::cout << out.str();
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified approximation pipelines for domination-type graph problems"};
    app.require_subcommand(1);

    instance_options solve_inst;
    bool solve_exact = false, solve_json = false, solve_csv = false;
    std::string solve_trace_out;
    uint64_t solve_seed = 0;
    CLI::App* solve = app.add_subcommand("solve", "Solve one instance");
    solve_inst.attach(solve);
    solve->add_flag("--exact", solve_exact, "Also compute the optimum by exhaustive search");
    solve->add_flag("--json", solve_json, "Emit JSON (default)");
    solve->add_flag("--csv", solve_csv, "Emit a one-row CSV instead of JSON");
    solve->add_option("--trace-out", solve_trace_out, "Write the reduction trace JSON to a file");
    solve->add_option("--seed", solve_seed, "Reserved; the pipelines are deterministic");

    std::string verify_input, verify_format = "auto", verify_solution, verify_problem;
    int verify_k = 0;
    CLI::App* verify = app.add_subcommand("verify", "Check a claimed solution file");
    verify->add_option("--input", verify_input, "Graph file")->required();
    verify->add_option("--format", verify_format, "Input format")
        ->check(CLI::IsMember({"dimacs", "edgelist", "auto"}));
    verify->add_option("--solution", verify_solution, "Solution JSON file")->required();
    verify->add_option("--problem", verify_problem, "Problem named in the file, for cross-checking")
        ->check(CLI::IsMember({"nonblocker", "harmless", "differential", "knonblocker"}));
    verify->add_option("--k", verify_k, "Domination multiplicity, knonblocker only");

    instance_options reduce_inst;
    std::string reduce_output;
    CLI::App* reduce = app.add_subcommand("reduce", "Run the reduction rules to fixpoint");
    reduce_inst.attach(reduce);
    reduce->add_option("--output", reduce_output, "Write the reduced graph (DIMACS) to a file");

    std::vector<std::string> audit_rules;
    int audit_k = 2, audit_graphs = 100;
    uint64_t audit_seed = 1;
    bool audit_json = false;
    CLI::App* audit = app.add_subcommand("audit", "Replay reduction rules against exact optima");
    audit->add_option("--rule", audit_rules, "Rule ids to audit (default: all)");
    audit->add_option("--k", audit_k, "k for the knonblocker rules")->check(CLI::Range(2, 16));
    audit->add_option("--graphs", audit_graphs, "Instances per rule")->check(CLI::Range(1, 100000));
    audit->add_option("--seed", audit_seed, "Corpus seed");
    audit->add_flag("--json", audit_json, "Emit JSON reports");

    std::string bench_problem, bench_sizes;
    int bench_k = 0, bench_per_size = 20, bench_edge_percent = 30, bench_degree = 3;
    uint64_t bench_seed = 1;
    CLI::App* bench = app.add_subcommand("bench", "Run a seeded random corpus and emit CSV");
    bench->add_option("--problem", bench_problem, "Problem to solve")
        ->required()
        ->check(CLI::IsMember({"nonblocker", "harmless", "differential", "knonblocker"}));
    bench->add_option("--k", bench_k, "Domination multiplicity, knonblocker only");
    bench->add_option("--sizes", bench_sizes, "Vertex count range A..B")->required();
    bench->add_option("--per-size", bench_per_size, "Instances per size and generator");
    bench->add_option("--seed", bench_seed, "Corpus seed");
    bench->add_option("--edge-percent", bench_edge_percent, "Edge probability for the random rows");
    bench->add_option("--degree", bench_degree, "Degree for the regular rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        ordered_json err{{"code", "usage"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return exit_usage;
    }

    try {
        if (solve->parsed()) {
            if (solve_json && solve_csv) return report_usage("--json and --csv are exclusive");
            return cmd_solve(solve_inst, solve_exact, solve_csv, solve_trace_out);
        }
        if (verify->parsed())
            return cmd_verify(verify_input, verify_format, verify_solution,
                              verify_problem, verify_k);
        if (reduce->parsed()) return cmd_reduce(reduce_inst, reduce_output);
        if (audit->parsed())
            return cmd_audit(audit_rules, audit_k, audit_graphs, audit_seed, audit_json);
        if (bench->parsed())
            return cmd_bench(bench_problem, bench_k, bench_sizes, bench_per_size,
                             bench_seed, bench_edge_percent, bench_degree);
    } catch (const std::exception& e) {
        ordered_json err{{"code", "internal"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return exit_internal;
    }
    return report_usage("no subcommand");
}
