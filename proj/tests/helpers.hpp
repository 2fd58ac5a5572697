#pragma once

// Shared fixtures for the test suite: small named graphs, an isomorphism-class
// enumerator, scalar re-derivations of the event checkers, and an independent
// SplitMix64 written from the published constants.  Nothing here calls the
// code paths it is used to cross-check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "letters/graph.hpp"
#include "letters/rng.hpp"

namespace testutil {

inline letters::Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    letters::Graph g(n);
    for (auto [u, v] : edges) g.set_edge(u, v);
    return g;
}

inline letters::Graph path_graph(int n) {
    letters::Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1);
    return g;
}

inline letters::Graph cycle_graph(int n) {
    letters::Graph g = path_graph(n);
    if (n >= 3) g.set_edge(n - 1, 0);
    return g;
}

inline letters::Graph complete_graph(int n) {
    letters::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.set_edge(u, v);
    return g;
}

inline letters::Graph edgeless_graph(int n) { return letters::Graph(n); }

// Star with the center at vertex 0.
inline letters::Graph star_graph(int leaves) {
    letters::Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.set_edge(0, v);
    return g;
}

// Edge masks use pair index e: pairs (u,v) with u < v, u outer -- the same
// order random_graph consumes its bit stream in.
inline letters::Graph from_mask(int n, std::uint64_t mask) {
    letters::Graph g(n);
    std::uint64_t e = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++e)
            if ((mask >> e) & 1u) g.set_edge(u, v);
    return g;
}

inline std::uint64_t to_mask(const letters::Graph& g) {
    std::uint64_t mask = 0, e = 0;
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v, ++e)
            if (g.edge(u, v)) mask |= std::uint64_t{1} << e;
    return mask;
}

// Minimum edge mask over all vertex relabelings; equal masks <=> isomorphic.
// Needs C(n,2) <= 64, i.e. n <= 11; intended for n <= 7.
inline std::uint64_t canonical_mask(const letters::Graph& g) {
    const int n = g.size();
    if (n > 11) throw std::invalid_argument("canonical_mask: n too large");
    std::vector<std::uint16_t> adj(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.edge(u, v)) adj[static_cast<std::size_t>(u)] |= std::uint16_t(1u << v);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t m = 0, e = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++e)
                if ((adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] >>
                     perm[static_cast<std::size_t>(v)]) & 1u)
                    m |= std::uint64_t{1} << e;
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// result[m] = canonical representatives of every isomorphism class on m
// vertices, grown by attaching one vertex to each subset of a smaller
// representative.  Counts must match 1,1,2,4,11,34,156,1044 for m = 0..7.
inline std::vector<std::vector<letters::Graph>> iso_classes_up_to(int n) {
    std::vector<std::vector<letters::Graph>> levels;
    levels.push_back({letters::Graph(0)});
    if (n >= 1) levels.push_back({letters::Graph(1)});
    for (int m = 2; m <= n; ++m) {
        std::set<std::uint64_t> seen;
        std::vector<letters::Graph> next;
        for (const letters::Graph& h : levels.back()) {
            letters::Graph base(m);
            for (int u = 0; u < m - 1; ++u)
                for (int v = u + 1; v < m - 1; ++v)
                    if (h.edge(u, v)) base.set_edge(u, v);
            for (std::uint32_t attach = 0; attach < (1u << (m - 1)); ++attach) {
                letters::Graph g = base;
                for (int u = 0; u < m - 1; ++u)
                    g.set_edge(u, m - 1, ((attach >> u) & 1u) != 0);
                const std::uint64_t key = canonical_mask(g);
                if (seen.insert(key).second) next.push_back(from_mask(m, key));
            }
        }
        levels.push_back(std::move(next));
    }
    return levels;
}

inline std::vector<letters::Graph> iso_classes(int n) {
    return iso_classes_up_to(n)[static_cast<std::size_t>(n)];
}

// All 2^C(n,2) labeled graphs; n <= 5 keeps this at 1024.
inline std::vector<letters::Graph> all_labeled_graphs(int n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<letters::Graph> out;
    out.reserve(std::size_t{1} << pairs);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
        out.push_back(from_mask(n, mask));
    return out;
}

// ---- scalar re-derivations of the probabilistic event checkers ----

inline bool naive_check_triple(const letters::Graph& g, int x, int y, int z) {
    const bool exy = g.edge(x, y);
    if (g.edge(y, z) != exy || g.edge(x, z) != exy) return false;
    for (int v = 0; v < g.size(); ++v) {
        if (v == x || v == y || v == z) continue;
        if (g.edge(v, x) == g.edge(v, z) && g.edge(v, x) != g.edge(v, y)) return false;
    }
    return true;
}

inline bool naive_exists_triple(const letters::Graph& g) {
    const int n = g.size();
    for (int x = 0; x < n; ++x)
        for (int z = x + 1; z < n; ++z)
            for (int y = 0; y < n; ++y) {
                if (y == x || y == z) continue;
                if (naive_check_triple(g, x, y, z)) return true;
            }
    return false;
}

inline bool naive_check_separated(const letters::Graph& g, int x, int y, int s, int t) {
    const bool cross = g.edge(x, s);
    if (g.edge(x, t) != cross || g.edge(y, s) != cross || g.edge(y, t) != cross) return false;
    for (int v = 0; v < g.size(); ++v) {
        if (v == x || v == y || v == s || v == t) continue;
        if (g.edge(v, x) == g.edge(v, y)) continue;
        if (g.edge(v, s) == g.edge(v, t)) continue;
        return false;
    }
    return true;
}

inline bool naive_exists_separated(const letters::Graph& g) {
    const int n = g.size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int s = 0; s < n; ++s)
                for (int t = s + 1; t < n; ++t) {
                    if (s == x || s == y || t == x || t == y) continue;
                    if (naive_check_separated(g, x, y, s, t)) return true;
                }
    return false;
}

// Direct statement of the core-form constraint: over the word
// l_1..l_k l_pi(1)..l_pi(k) on vs, every ordered letter pair must see a
// single edge status across all its position pairs.
inline bool naive_core_tuple(const letters::Graph& g, const std::vector<int>& vs,
                             const std::vector<int>& pi) {
    const int k = static_cast<int>(pi.size());
    const int m = 2 * k;
    auto letter = [&](int p) { return p < k ? p : pi[static_cast<std::size_t>(p - k)]; };
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            int status = -1;
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) {
                    if (letter(i) != a || letter(j) != b) continue;
                    const int e = g.edge(vs[static_cast<std::size_t>(i)],
                                         vs[static_cast<std::size_t>(j)]) ? 1 : 0;
                    if (status < 0) status = e;
                    else if (status != e) return false;
                }
        }
    return true;
}

inline bool naive_exists_core(const letters::Graph& g, int k) {
    const int n = g.size();
    std::vector<int> pi(static_cast<std::size_t>(k));
    std::iota(pi.begin(), pi.end(), 0);
    std::vector<int> vs;
    // ordered tuples of 2k distinct vertices, then every pi
    std::vector<int> idx(static_cast<std::size_t>(2 * k), 0);
    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == 2 * k) {
            std::vector<int> p(static_cast<std::size_t>(k));
            std::iota(p.begin(), p.end(), 0);
            do {
                if (naive_core_tuple(g, vs, p)) return true;
            } while (std::next_permutation(p.begin(), p.end()));
            return false;
        }
        for (int v = 0; v < n; ++v) {
            if (std::find(vs.begin(), vs.end(), v) != vs.end()) continue;
            vs.push_back(v);
            if (self(self, depth + 1)) return true;
            vs.pop_back();
        }
        return false;
    };
    if (2 * k > n) return false;
    return rec(rec, 0);
}

// ---- deterministic threshold-graph sampler ----

// Each vertex past the first joins as dominating or isolated over the
// current graph, one coin per vertex; every threshold graph arises this way.
inline letters::Graph random_threshold(int n, std::uint64_t seed) {
    letters::Graph g(n);
    for (int i = 1; i < n; ++i)
        if (letters::splitmix64_at(seed, static_cast<std::uint64_t>(i)) & 1u)
            for (int j = 0; j < i; ++j) g.set_edge(i, j);
    return g;
}

// All 2^(n-1) construction sequences on n vertices (duplicates by iso are fine).
inline std::vector<letters::Graph> all_threshold_graphs(int n) {
    std::vector<letters::Graph> out;
    const std::uint32_t seqs = n >= 1 ? (1u << (n - 1)) : 0;
    for (std::uint32_t s = 0; s < seqs; ++s) {
        letters::Graph g(n);
        for (int i = 1; i < n; ++i)
            if ((s >> (i - 1)) & 1u)
                for (int j = 0; j < i; ++j) g.set_edge(i, j);
        out.push_back(std::move(g));
    }
    return out;
}

// ---- independent SplitMix64, written from the published algorithm ----

inline std::uint64_t ref_splitmix64(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + (i + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace testutil
