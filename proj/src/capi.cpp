#include "gdr/gdr.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "audit_corpus.hpp"
#include "differential.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "formats.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "harmless.hpp"
#include "knonblocker.hpp"
#include "nonblocker.hpp"
#include "oracle.hpp"
#include "rules.hpp"
#include "solve.hpp"

using nlohmann::ordered_json;

struct gdr_graph {
    gdr::graph g;
};

struct gdr_solution {
    std::vector<int32_t> vertices;
    long value = 0;
    bool fallback_used = false;
    std::string certificate_json;
    std::string trace_json;
};

namespace {

thread_local std::string last_error;

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

gdr_status fail(gdr_status code, const std::string& message) {
    last_error = message;
    return code;
}

// Translates the exception taxonomy used inside the core into status codes.
gdr_status translate() {
    try {
        throw;
    } catch (const gdr::parse_error& e) {
        return fail(GDR_ERROR_PARSE, e.what());
    } catch (const gdr::infeasible_error& e) {
        return fail(GDR_ERROR_INFEASIBLE, e.what());
    } catch (const gdr::bound_not_certified& e) {
        return fail(GDR_ERROR_BOUND_NOT_CERTIFIED, e.what());
    } catch (const gdr::too_large_error& e) {
        return fail(GDR_ERROR_TOO_LARGE, e.what());
    } catch (const gdr::precondition_error& e) {
        return fail(GDR_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(GDR_ERROR_INTERNAL, e.what());
    } catch (...) {
        return fail(GDR_ERROR_INTERNAL, "unknown error");
    }
}

bool to_kind(gdr_problem problem, gdr::problem_kind& kind) {
    switch (problem) {
    case GDR_PROBLEM_NONBLOCKER: kind = gdr::problem_kind::nonblocker; return true;
    case GDR_PROBLEM_HARMLESS: kind = gdr::problem_kind::harmless; return true;
    case GDR_PROBLEM_DIFFERENTIAL: kind = gdr::problem_kind::differential; return true;
    case GDR_PROBLEM_KNONBLOCKER: kind = gdr::problem_kind::knonblocker; return true;
    }
    return false;
}

bool to_format(gdr_format format, gdr::file_format& fmt, bool allow_auto) {
    switch (format) {
    case GDR_FORMAT_DIMACS: fmt = gdr::file_format::dimacs; return true;
    case GDR_FORMAT_EDGELIST: fmt = gdr::file_format::edgelist; return true;
    case GDR_FORMAT_AUTO: fmt = gdr::file_format::autodetect; return allow_auto;
    }
    return false;
}

ordered_json certificate_to_json(const gdr::bound_certificate& cert) {
    ordered_json components = ordered_json::array();
    for (const auto& entry : cert.components) {
        components.push_back({{"n", entry.n},
                              {"claimed", entry.claimed},
                              {"achieved", entry.achieved},
                              {"method", entry.method}});
    }
    return ordered_json{{"bound_kind", cert.bound_kind},
                        {"n", cert.n},
                        {"claimed", cert.claimed},
                        {"achieved", cert.achieved},
                        {"additive_slack", cert.additive_slack},
                        {"fallback_used", cert.fallback_used},
                        {"components", components}};
}

gdr_status check_handle(const void* p, const char* what) {
    if (p != nullptr) return GDR_OK;
    return fail(GDR_ERROR_INVALID_ARGUMENT, std::string(what) + " is null");
}

} // namespace

extern "C" {

const char* gdr_last_error(void) { return last_error.c_str(); }

gdr_status gdr_graph_parse(const char* text, gdr_format format, gdr_graph** out) {
    if (check_handle(text, "text") != GDR_OK || check_handle(out, "out") != GDR_OK)
        return GDR_ERROR_INVALID_ARGUMENT;
    gdr::file_format fmt;
    if (!to_format(format, fmt, true)) return fail(GDR_ERROR_INVALID_ARGUMENT, "unknown format");
    try {
        auto* h = new gdr_graph{gdr::parse_graph(text, fmt)};
        *out = h;
        last_error.clear();
        return GDR_OK;
    } catch (...) {
        return translate();
    }
}

gdr_status gdr_graph_from_edges(int32_t n, const int32_t* endpoints,
                                size_t edge_count, gdr_graph** out) {
    if (check_handle(out, "out") != GDR_OK) return GDR_ERROR_INVALID_ARGUMENT;
    if (n < 0) return fail(GDR_ERROR_INVALID_ARGUMENT, "negative vertex count");
    if (edge_count > 0 && endpoints == nullptr)
        return fail(GDR_ERROR_INVALID_ARGUMENT, "endpoints is null");
    try {
        gdr::graph_builder b;
        for (int32_t i = 0; i < n; ++i) b.add_vertex(i);
        for (size_t i = 0; i < edge_count; ++i) {
            int32_t u = endpoints[2 * i], v = endpoints[2 * i + 1];
            if (u < 0 || u >= n || v < 0 || v >= n)
                return fail(GDR_ERROR_INVALID_ARGUMENT, "edge endpoint out of range");
            if (u == v) return fail(GDR_ERROR_INVALID_ARGUMENT, "self-loop");
            if (b.has_edge(u, v)) return fail(GDR_ERROR_INVALID_ARGUMENT, "duplicate edge");
            b.add_edge(u, v);
        }
        *out = new gdr_graph{b.build()};
        last_error.clear();
        return GDR_OK;
    } catch (...) {
        return translate();
    }
}

void gdr_graph_free(gdr_graph* g) { delete g; }

int32_t gdr_graph_vertex_count(const gdr_graph* g) {
    return g == nullptr ? 0 : static_cast<int32_t>(g->g.vertex_count());
}

int64_t gdr_graph_edge_count(const gdr_graph* g) {
    return g == nullptr ? 0 : static_cast<int64_t>(g->g.edge_count());
}

gdr_status gdr_graph_serialize(const gdr_graph* g, gdr_format format, char** out) {
    if (check_handle(g, "graph") != GDR_OK || check_handle(out, "out") != GDR_OK)
        return GDR_ERROR_INVALID_ARGUMENT;
    gdr::file_format fmt;
    if (!to_format(format, fmt, false)) return fail(GDR_ERROR_INVALID_ARGUMENT, "unknown format");
    try {
        *out = copy_string(gdr::write_graph(g->g, fmt));
        last_error.clear();
        return GDR_OK;
    } catch (...) {
        return translate();
    }
}

void gdr_string_free(char* s) { std::free(s); }

gdr_status gdr_random_graph(int32_t n, int32_t edge_percent, uint64_t seed,
                            int connected, gdr_graph** out) {
    if (check_handle(out, "out") != GDR_OK) return GDR_ERROR_INVALID_ARGUMENT;
    if (n < 0) return fail(GDR_ERROR_INVALID_ARGUMENT, "negative vertex count");
    if (edge_percent < 0 || edge_percent > 100)
        return fail(GDR_ERROR_INVALID_ARGUMENT, "edge percent outside [0, 100]");
    try {
        std::mt19937_64 rng(gdr::mix_seed(seed));
        gdr::graph g = connected != 0 ? gdr::random_connected_graph(n, edge_percent, rng)
                                      : gdr::random_graph(n, edge_percent, rng);
        *out = new gdr_graph{std::move(g)};
        last_error.clear();
        return GDR_OK;
    } catch (...) {
        return translate();
    }
}

gdr_status gdr_random_regular_graph(int32_t n, int32_t d, uint64_t seed,
                                    gdr_graph** out) {
    if (check_handle(out, "out") != GDR_OK) return GDR_ERROR_INVALID_ARGUMENT;
    if (n < 0 || d < 0 || d >= n || (static_cast<int64_t>(n) * d) % 2 != 0)
        return fail(GDR_ERROR_INVALID_ARGUMENT, "degree sequence is not realizable");
    try {
        std::mt19937_64 rng(gdr::mix_seed(seed));
        *out = new gdr_graph{gdr::random_regular_graph(n, d, rng)};
        last_error.clear();
        return GDR_OK;
    } catch (...) {
        return translate();
    }
}

gdr_status gdr_solve(const gdr_graph* g, gdr_problem problem, int32_t k,
                     gdr_solution** out) {
    if (check_handle(g, "graph") != GDR_OK || check_handle(out, "out") != GDR_OK)
        return GDR_ERROR_INVALID_ARGUMENT;
    gdr::problem_kind kind;
    if (!to_kind(problem, kind)) return fail(GDR_ERROR_INVALID_ARGUMENT, "unknown problem");
    try {
        gdr::solve_result res;
        switch (kind) {
        case gdr::problem_kind::nonblocker: res = gdr::solve_nonblocker(g->g); break;
        case gdr::problem_kind::harmless: res = gdr::solve_harmless(g->g); break;
        case gdr::problem_kind::differential: res = gdr::solve_differential(g->g); break;
        case gdr::problem_kind::knonblocker: res = gdr::solve_k_nonblocker(g->g, k); break;
        }
        auto* s = new gdr_solution;
        s->vertices.assign(res.solution.begin(), res.solution.end());
        std::sort(s->vertices.begin(), s->vertices.end());
        s->value = gdr::solution_value(kind, g->g, res.solution);
        s->fallback_used = res.certificate.fallback_used;
        s->certificate_json = certificate_to_json(res.certificate).dump();
        s->trace_json = gdr::trace_to_json(res.reduction).dump();
        *out = s;
        last_error.clear();
        return GDR_OK;
    } catch (...) {
        return translate();
    }
}

void gdr_solution_free(gdr_solution* s) { delete s; }

long gdr_solution_value(const gdr_solution* s) { return s == nullptr ? 0 : s->value; }

size_t gdr_solution_size(const gdr_solution* s) {
    return s == nullptr ? 0 : s->vertices.size();
}

const int32_t* gdr_solution_vertices(const gdr_solution* s) {
    return s == nullptr ? nullptr : s->vertices.data();
}

int gdr_solution_fallback_used(const gdr_solution* s) {
    return s != nullptr && s->fallback_used ? 1 : 0;
}

const char* gdr_solution_certificate_json(const gdr_solution* s) {
    return s == nullptr ? "" : s->certificate_json.c_str();
}

const char* gdr_solution_trace_json(const gdr_solution* s) {
    return s == nullptr ? "" : s->trace_json.c_str();
}

gdr_status gdr_exact_value(const gdr_graph* g, gdr_problem problem, int32_t k,
                           int64_t* out) {
    if (check_handle(g, "graph") != GDR_OK || check_handle(out, "out") != GDR_OK)
        return GDR_ERROR_INVALID_ARGUMENT;
    gdr::problem_kind kind;
    if (!to_kind(problem, kind)) return fail(GDR_ERROR_INVALID_ARGUMENT, "unknown problem");
    if (kind == gdr::problem_kind::knonblocker && k < 2)
        return fail(GDR_ERROR_INVALID_ARGUMENT, "k must be at least 2");
    try {
        // All four objectives are additive over connected components, so the
        // size cap applies per component rather than to the whole graph.
        long total = 0;
        for (const auto& comp : gdr::components(g->g)) {
            gdr::graph h = gdr::induced(g->g, comp);
            switch (kind) {
            case gdr::problem_kind::nonblocker: total += gdr::exact_max_nonblocker(h); break;
            case gdr::problem_kind::harmless: total += gdr::exact_max_harmless(h); break;
            case gdr::problem_kind::differential: total += gdr::exact_differential(h); break;
            case gdr::problem_kind::knonblocker:
                total += gdr::exact_max_k_nonblocker(h, k);
                break;
            }
        }
        *out = total;
        last_error.clear();
        return GDR_OK;
    } catch (...) {
        return translate();
    }
}

gdr_status gdr_verify(const gdr_graph* g, gdr_problem problem, int32_t k,
                      const int32_t* vertices, size_t count,
                      int* feasible_out, int64_t* value_out) {
    if (check_handle(g, "graph") != GDR_OK || check_handle(feasible_out, "feasible_out") != GDR_OK)
        return GDR_ERROR_INVALID_ARGUMENT;
    if (count > 0 && vertices == nullptr)
        return fail(GDR_ERROR_INVALID_ARGUMENT, "vertices is null");
    gdr::problem_kind kind;
    if (!to_kind(problem, kind)) return fail(GDR_ERROR_INVALID_ARGUMENT, "unknown problem");
    try {
        std::vector<int> sol(vertices, vertices + count);
        std::sort(sol.begin(), sol.end());
        if (std::adjacent_find(sol.begin(), sol.end()) != sol.end())
            return fail(GDR_ERROR_INVALID_ARGUMENT, "duplicate vertex in solution");
        for (int v : sol)
            if (!g->g.has_vertex(v))
                return fail(GDR_ERROR_INVALID_ARGUMENT, "solution vertex not in graph");
        bool ok = gdr::solution_feasible(kind, g->g, sol, k);
        *feasible_out = ok ? 1 : 0;
        if (ok && value_out != nullptr)
            *value_out = gdr::solution_value(kind, g->g, sol);
        last_error.clear();
        return GDR_OK;
    } catch (...) {
        return translate();
    }
}

gdr_status gdr_reduce(const gdr_graph* g, gdr_problem problem, int32_t k,
                      char** report_out) {
    if (check_handle(g, "graph") != GDR_OK || check_handle(report_out, "report_out") != GDR_OK)
        return GDR_ERROR_INVALID_ARGUMENT;
    gdr::problem_kind kind;
    if (!to_kind(problem, kind)) return fail(GDR_ERROR_INVALID_ARGUMENT, "unknown problem");
    try {
        auto rules = gdr::rules_for(kind, kind == gdr::problem_kind::knonblocker ? k : 0);
        gdr::trace tr = gdr::run_to_fixpoint(g->g, gdr::rule_pointers(rules));
        ordered_json report{{"problem", gdr::problem_name(kind)},
                            {"n_before", tr.initial().vertex_count()},
                            {"m_before", tr.initial().edge_count()},
                            {"n_after", tr.result().vertex_count()},
                            {"m_after", tr.result().edge_count()},
                            {"trace", gdr::trace_to_json(tr)},
                            {"reduced", gdr::write_graph(tr.result(), gdr::file_format::dimacs)}};
        if (kind == gdr::problem_kind::knonblocker) report["k"] = k;
        *report_out = copy_string(report.dump(2));
        last_error.clear();
        return GDR_OK;
    } catch (...) {
        return translate();
    }
}

gdr_status gdr_rule_list(int32_t k, char** out) {
    if (check_handle(out, "out") != GDR_OK) return GDR_ERROR_INVALID_ARGUMENT;
    try {
        std::string joined;
        for (const auto& r : gdr::all_rules(k < 2 ? 2 : k)) {
            joined += r->id();
            joined += '\n';
        }
        *out = copy_string(joined);
        last_error.clear();
        return GDR_OK;
    } catch (...) {
        return translate();
    }
}

gdr_status gdr_audit_rule(const char* rule_id, int32_t k, int32_t graphs,
                          uint64_t seed, char** report_out) {
    if (check_handle(rule_id, "rule_id") != GDR_OK || check_handle(report_out, "report_out") != GDR_OK)
        return GDR_ERROR_INVALID_ARGUMENT;
    if (graphs < 1) return fail(GDR_ERROR_INVALID_ARGUMENT, "graph count must be positive");
    try {
        auto rules = gdr::all_rules(k < 2 ? 2 : k);
        const gdr::rule* r = gdr::find_rule(rules, rule_id);
        if (r == nullptr)
            return fail(GDR_ERROR_INVALID_ARGUMENT, std::string("unknown rule: ") + rule_id);
        auto corpus = gdr::audit_corpus(*r, graphs, gdr::mix_seed(seed, 1));
        gdr::audit_report rep = gdr::audit_rule(*r, corpus, gdr::mix_seed(seed, 2));
        ordered_json j{{"rule_id", rep.rule_id},
                       {"graphs_checked", rep.graphs_checked},
                       {"solutions_checked", rep.solutions_checked},
                       {"violations", rep.violations},
                       {"passed", rep.passed()}};
        *report_out = copy_string(j.dump(2));
        last_error.clear();
        return GDR_OK;
    } catch (...) {
        return translate();
    }
}

} // extern "C"
