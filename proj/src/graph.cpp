#include "letters/graph.hpp"

#include <algorithm>
#include <sstream>

#include "letters/rng.hpp"

namespace letters {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    n_ = n;
    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::set_edge(int u, int v, bool present) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    auto set = [&](int a, int b) {
        std::uint64_t& w = bits_[static_cast<std::size_t>(a) * words_ + static_cast<std::size_t>(b) / 64];
        std::uint64_t bit = 1ULL << (static_cast<std::size_t>(b) % 64);
        if (present)
            w |= bit;
        else
            w &= ~bit;
    };
    set(u, v);
    set(v, u);
}

int Graph::edge_count() const {
    long long total = 0;
    for (std::uint64_t w : bits_) total += __builtin_popcountll(w);
    return static_cast<int>(total / 2);
}

Graph random_graph(const RandomSpec& spec) {
    Graph g(spec.n);
    std::uint64_t e = 0;
    for (int u = 0; u < spec.n; ++u)
        for (int v = u + 1; v < spec.n; ++v, ++e)
            if (splitmix64_at(spec.seed, e) & 1u) g.set_edge(u, v);
    return g;
}

namespace {

constexpr int kGraph6Short = 62;
constexpr int kGraph6LongMax = 258047;  // 2^18 - 1

[[noreturn]] void parse_fail(const std::string& what, std::size_t offset) {
    std::ostringstream msg;
    msg << "graph6: " << what << " at byte offset " << offset;
    throw Graph6Error(msg.str(), offset);
}

int sixbits(std::string_view text, std::size_t offset) {
    if (offset >= text.size()) parse_fail("unexpected end of input", text.size());
    unsigned char c = static_cast<unsigned char>(text[offset]);
    if (c < 63 || c > 126) parse_fail("byte outside printable graph6 range", offset);
    return c - 63;
}

}  // namespace

Graph from_graph6(std::string_view text) {
    if (text.empty()) parse_fail("empty input", 0);

    std::size_t pos = 0;
    long long n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            parse_fail("eight-byte vertex counts are not supported", 1);
        n = 0;
        for (pos = 1; pos <= 3; ++pos) n = (n << 6) | sixbits(text, pos);
    } else {
        n = sixbits(text, 0);
        pos = 1;
    }

    Graph g(static_cast<int>(n));
    long long total_bits = n * (n - 1) / 2;
    std::size_t body_bytes = static_cast<std::size_t>((total_bits + 5) / 6);
    if (text.size() != pos + body_bytes)
        parse_fail(text.size() < pos + body_bytes ? "input shorter than the vertex count requires"
                                                  : "trailing bytes after the edge bits",
                   text.size() < pos + body_bytes ? text.size() : pos + body_bytes);

    // Column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    long long bit = 0;
    int u = 0;
    int v = 1;
    for (std::size_t b = 0; b < body_bytes; ++b) {
        int group = sixbits(text, pos + b);
        for (int s = 5; s >= 0; --s, ++bit) {
            bool present = (group >> s) & 1;
            if (bit >= total_bits) {
                if (present) parse_fail("nonzero padding bit", pos + b);
                continue;
            }
            if (present) g.set_edge(u, v);
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    int n = g.size();
    if (n > kGraph6LongMax)
        throw std::invalid_argument("graph too large for the graph6 long form");

    std::string out;
    if (n <= kGraph6Short) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }

    int group = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

std::string to_edge_json(const Graph& g) {
    std::ostringstream out;
    out << "{\"n\":" << g.size() << ",\"edges\":[";
    bool first = true;
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (g.edge(u, v)) {
                if (!first) out << ',';
                out << '[' << u << ',' << v << ']';
                first = false;
            }
    out << "]}";
    return out.str();
}

Graph induced_subgraph(const Graph& g, std::span<const int> vs) {
    std::vector<char> seen(g.size(), 0);
    for (int v : vs) {
        if (v < 0 || v >= g.size()) throw std::invalid_argument("vertex index out of range");
        if (seen[v]) throw std::invalid_argument("duplicate vertex in induced subgraph");
        seen[v] = 1;
    }
    Graph h(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.edge(vs[i], vs[j])) h.set_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph complement(const Graph& g) {
    Graph h(g.size());
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (!g.edge(u, v)) h.set_edge(u, v);
    return h;
}

Signature signature(const Graph& g, int v, std::span<const int> basis) {
    Signature sig;
    sig.basis.assign(basis.begin(), basis.end());
    sig.bits.reserve(basis.size());
    for (int b : basis) {
        if (b == v) throw std::invalid_argument("vertex may not appear in its own basis");
        sig.bits.push_back(g.edge(v, b) ? 1 : 0);
    }
    return sig;
}

bool agrees_on(const Graph& g, int v, std::span<const int> targets) {
    if (v < 0 || v >= g.size()) throw std::invalid_argument("vertex index out of range");
    std::vector<std::uint64_t> mask(g.words_per_row(), 0);
    for (int t : targets) {
        if (t == v) throw std::invalid_argument("vertex may not appear among its own targets");
        if (t < 0 || t >= g.size()) throw std::invalid_argument("vertex index out of range");
        mask[static_cast<std::size_t>(t) / 64] |= 1ULL << (static_cast<std::size_t>(t) % 64);
    }
    auto r = g.row(v);
    bool all_edges = true;
    bool no_edges = true;
    for (std::size_t w = 0; w < mask.size(); ++w) {
        all_edges = all_edges && (r[w] & mask[w]) == mask[w];
        no_edges = no_edges && (r[w] & mask[w]) == 0;
    }
    return all_edges || no_edges;
}

}  // namespace letters
