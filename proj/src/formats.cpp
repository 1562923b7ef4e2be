#include "formats.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "errors.hpp"

namespace gdr {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

std::optional<long> parse_int(const std::string& tok) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
    return value;
}

// Non-negative integer bounded well below int overflow.
int require_id(const std::string& tok, int line) {
    auto v = parse_int(tok);
    if (!v || *v < 0 || *v > 1000000000)
        throw parse_error(line, "expected a non-negative integer, got '" + tok + "'");
    return static_cast<int>(*v);
}

void require_new_edge(const graph_builder& b, int u, int v, int line) {
    if (u == v)
        throw parse_error(line, "self-loop at vertex " + std::to_string(u));
    if (b.has_edge(u, v))
        throw parse_error(line, "repeated edge {" + std::to_string(u) + ", " +
                                    std::to_string(v) + "}");
}

graph parse_dimacs(const std::vector<std::string>& lines) {
    graph_builder b;
    bool have_header = false;
    long want_n = 0, want_m = 0;
    long seen_m = 0;
    std::set<int> declared;
    bool have_declared = false;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        int ln = static_cast<int>(i) + 1;
        auto toks = tokenize(lines[i]);
        if (toks.empty()) continue;
        const std::string& kind = toks[0];
        if (kind == "c") continue;
        if (kind == "p") {
            if (have_header) throw parse_error(ln, "second problem line");
            if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col"))
                throw parse_error(ln, "expected 'p edge <n> <m>'");
            want_n = require_id(toks[2], ln);
            want_m = require_id(toks[3], ln);
            if (want_n > 10000000) throw parse_error(ln, "vertex count too large");
            have_header = true;
        } else if (kind == "n") {
            if (!have_header) throw parse_error(ln, "vertex line before problem line");
            if (toks.size() != 2) throw parse_error(ln, "expected 'n <id>'");
            int v = require_id(toks[1], ln);
            if (!declared.insert(v).second)
                throw parse_error(ln, "repeated vertex " + std::to_string(v));
            have_declared = true;
            b.add_vertex(v);
        } else if (kind == "e") {
            if (!have_header) throw parse_error(ln, "edge line before problem line");
            if (toks.size() != 3) throw parse_error(ln, "expected 'e <u> <v>'");
            int u = require_id(toks[1], ln);
            int v = require_id(toks[2], ln);
            require_new_edge(b, u, v, ln);
            b.add_edge(u, v);
            ++seen_m;
        } else {
            throw parse_error(ln, "unknown line type '" + kind + "'");
        }
    }

    if (!have_header) throw parse_error(0, "missing problem line");
    if (seen_m != want_m)
        throw parse_error(0, "problem line announces " + std::to_string(want_m) +
                                 " edges, file has " + std::to_string(seen_m));

    graph g = b.build();
    if (have_declared) {
        if (static_cast<long>(declared.size()) != want_n)
            throw parse_error(0, "problem line announces " + std::to_string(want_n) +
                                     " vertices, file declares " +
                                     std::to_string(declared.size()));
        for (int v : g.vertices())
            if (!declared.count(v))
                throw parse_error(0, "edge endpoint " + std::to_string(v) +
                                         " is not a declared vertex");
        return g;
    }

    for (int v : g.vertices())
        if (v < 1 || v > want_n)
            throw parse_error(0, "edge endpoint " + std::to_string(v) +
                                     " outside 1.." + std::to_string(want_n));
    graph_builder full(g);
    for (long v = 1; v <= want_n; ++v) full.add_vertex(static_cast<int>(v));
    return full.build();
}

graph parse_edgelist(const std::vector<std::string>& lines) {
    graph_builder b;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        int ln = static_cast<int>(i) + 1;
        std::string line = lines[i];
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() == 1) {
            b.add_vertex(require_id(toks[0], ln));
        } else if (toks.size() == 2) {
            int u = require_id(toks[0], ln);
            int v = require_id(toks[1], ln);
            require_new_edge(b, u, v, ln);
            b.add_edge(u, v);
        } else {
            throw parse_error(ln, "expected one or two integers");
        }
    }
    return b.build();
}

bool plain_dimacs_ids(const graph& g) {
    int next = 1;
    for (int v : g.vertices())
        if (v != next++) return false;
    return true;
}

} // namespace

file_format detect_format(const std::string& text) {
    for (const auto& line : split_lines(text)) {
        auto toks = tokenize(line);
        if (!toks.empty() && toks[0] == "p") return file_format::dimacs;
    }
    return file_format::edgelist;
}

graph parse_graph(const std::string& text, file_format fmt) {
    if (fmt == file_format::autodetect) fmt = detect_format(text);
    auto lines = split_lines(text);
    return fmt == file_format::dimacs ? parse_dimacs(lines) : parse_edgelist(lines);
}

std::string write_graph(const graph& g, file_format fmt) {
    std::ostringstream out;
    if (fmt == file_format::dimacs) {
        out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
        if (!plain_dimacs_ids(g))
            for (int v : g.vertices()) out << "n " << v << "\n";
        for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    } else if (fmt == file_format::edgelist) {
        for (int v : g.vertices())
            if (g.degree(v) == 0) out << v << "\n";
        for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    } else {
        throw precondition_error("write_graph: format must be dimacs or edgelist");
    }
    return out.str();
}

graph load_graph(const std::string& path, file_format fmt) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(0, "cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), fmt);
}

std::string format_name(file_format fmt) {
    switch (fmt) {
        case file_format::dimacs: return "dimacs";
        case file_format::edgelist: return "edgelist";
        default: return "auto";
    }
}

file_format format_from_name(const std::string& name) {
    if (name == "dimacs") return file_format::dimacs;
    if (name == "edgelist") return file_format::edgelist;
    if (name == "auto") return file_format::autodetect;
    throw parse_error(0, "unknown format '" + name + "'");
}

} // namespace gdr
