#include "degseq/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace degseq {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::string edge_name(int u, int v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

SimpleGraph::SimpleGraph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0) fail("vertex count must be non-negative");
    adj_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
    degree_.assign(static_cast<std::size_t>(n_), 0);
}

void SimpleGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        fail("vertex " + std::to_string(v) + " out of range for " + std::to_string(n_) + " vertices");
    }
}

void SimpleGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) fail("self-loop rejected at vertex " + std::to_string(u));
    if (has_edge(u, v)) fail("duplicate edge " + edge_name(std::min(u, v), std::max(u, v)));
    adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
    adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
    ++degree_[static_cast<std::size_t>(u)];
    ++degree_[static_cast<std::size_t>(v)];
    ++edge_count_;
}

void SimpleGraph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !has_edge(u, v)) fail("no such edge " + edge_name(std::min(u, v), std::max(u, v)));
    adj_[static_cast<std::size_t>(u) * n_ + v] = 0;
    adj_[static_cast<std::size_t>(v) * n_ + u] = 0;
    --degree_[static_cast<std::size_t>(u)];
    --degree_[static_cast<std::size_t>(v)];
    --edge_count_;
}

bool SimpleGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
}

int SimpleGraph::degree(int v) const {
    check_vertex(v);
    return degree_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (adj_[static_cast<std::size_t>(u) * n_ + v]) out.emplace_back(u, v);
        }
    }
    return out;
}

DegreeSequence degree_sequence_of(const SimpleGraph& g) {
    std::vector<int> isolated;
    std::vector<int> degrees;
    degrees.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) {
            isolated.push_back(v);
        } else {
            degrees.push_back(g.degree(v));
        }
    }
    if (!isolated.empty()) {
        std::string msg = "graph has isolated vertices:";
        for (int v : isolated) msg += " " + std::to_string(v);
        fail(msg);
    }
    return DegreeSequence(std::move(degrees));
}

std::string to_text(const SimpleGraph& g) {
    std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

SimpleGraph graph_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tag;
    if (!(in >> tag)) fail("empty graph text");
    if (tag != "n") fail("graph text must start with an 'n <count>' line, got '" + tag + "'");
    long long count = 0;
    if (!(in >> count) || count < 0) fail("malformed vertex count in graph text");
    SimpleGraph g(static_cast<int>(count));
    long long u = 0;
    while (in >> u) {
        long long v = 0;
        if (!(in >> v)) fail("dangling edge endpoint in graph text");
        if (u < 0 || v < 0 || u >= count || v >= count) {
            fail("edge endpoint out of range in graph text: " +
                 edge_name(static_cast<int>(u), static_cast<int>(v)));
        }
        g.add_edge(static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v)));
    }
    if (!in.eof()) fail("malformed edge line in graph text");
    return g;
}

}  // namespace degseq
