#ifndef LETTERS_GRAPH_HPP
#define LETTERS_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace letters {

/// Undirected simple graph stored as one fixed-width bit vector per vertex.
/// Rows are kept symmetric and irreflexive by construction, and bits at or
/// beyond `size()` are always zero, so whole rows can be combined with
/// word-parallel operations (the agreement tests below rely on this).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int size() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    bool edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >>
                (static_cast<std::size_t>(v) % 64)) & 1u;
    }

    // Sets or clears both directions; self-loops are rejected.
    void set_edge(int u, int v, bool present = true);

    // Adjacency row of v as 64-bit words, low bit = vertex 0.
    std::span<const std::uint64_t> row(int v) const {
        check_vertex(v);
        return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
    }

    int edge_count() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
    }
};

/// Adjacency pattern of one vertex against an ordered list of others.
struct Signature {
    std::vector<std::uint8_t> bits;  // bits[i] = adjacency to basis[i]
    std::vector<int> basis;

    bool operator==(const Signature&) const = default;
};

/// Parameters for sampling G(n, 1/2). The same (n, seed) always produces
/// the same graph; the edge probability is fixed at one half.
struct RandomSpec {
    int n = 0;
    std::uint64_t seed = 0;
    static constexpr double edge_probability = 0.5;
};

// Each of the C(n,2) possible edges is an independent fair coin: edge e
// (pairs enumerated u < v, u outer) is bit 0 of the e-th SplitMix64 output.
Graph random_graph(const RandomSpec& spec);

/// graph6 parse failure; `offset` is the byte position of the problem.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Standard graph6 codec. Short form covers n <= 62; the three-byte long
// form extends to n <= 258047. Writers always emit the canonical form,
// and the parser rejects nonzero padding bits.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Debug export: {"n":..., "edges":[[u,v],...]} with u < v, lexicographic.
std::string to_edge_json(const Graph& g);

// Result keeps |vs| vertices; edge (i,j) iff (vs[i], vs[j]) is an edge of g.
Graph induced_subgraph(const Graph& g, std::span<const int> vs);

Graph complement(const Graph& g);

// bits[i] = adjacency of v to basis[i]; v itself may not appear in basis.
Signature signature(const Graph& g, int v, std::span<const int> basis);

// True iff v has the same adjacency value to every target (all edges or
// all non-edges). Word-parallel over the row of v.
bool agrees_on(const Graph& g, int v, std::span<const int> targets);

}  // namespace letters

#endif
