#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "letters/graph.hpp"
#include "letters/lettering.hpp"

namespace letters {

// A 2k-vertex induced subgraph letterable by the word l_1...l_k l_pi(1)...l_pi(k).
// pairs[i] = (x_i, y_i): x_i is the left occurrence of letter i, y_i the right one.
// pi is 0-based: right-half position j carries letter pi[j].
struct Core {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> pi;
    Decoder decoder_seed;

    int k() const { return static_cast<int>(pairs.size()); }
};

struct SavingsGuarantee {
    int n;
    int k;
};

// Maximal k with n >= 2(k-1) + 2^(2(k-1)) + 1.  Requires n >= 2.
SavingsGuarantee k_guarantee(int n);

// Word l_1..l_k l_pi(1)..l_pi(k) for the core, and the matching position->vertex map.
Word core_word(const Core& c);
std::vector<int> core_vertex_of(const Core& c);

// Pigeonhole construction: grows a palindromic core (pi = reversal) from the
// initial pair (0, 1), adopting the two lowest-indexed vertices of the
// lexicographically smallest signature bucket with >= 2 members until all
// buckets are singletons.  Achieves k >= k_guarantee(n).k.  Requires n >= 2.
Core find_palindromic_core(const Graph& g);

// Exact backtracking search for a clique or anticlique on 2k vertices
// (cliques first, lexicographically least witness).  Any pi is consistent
// on a homogeneous core; identity is used when none is given.
std::optional<Core> find_homogeneous_core(const Graph& g, int k);
std::optional<Core> find_homogeneous_core(const Graph& g, int k, const std::vector<int>& pi);

// Word l_1..l_k m_1..m_{n-2k} l_pi(1)..l_pi(k) with a fresh singleton letter
// per non-core vertex (ascending vertex index); decoder is the union of the
// core decoder, middle-middle, left-middle, and middle-right constraint sets.
// Uses exactly n - k letters.  Throws if the core does not realize g.
Lettering extend_core_to_lettering(const Graph& g, const Core& c);

// find_palindromic_core + extend_core_to_lettering; n <= 1 yields the trivial
// lettering.  Alphabet size <= n - k_guarantee(n).k for n >= 2.
Lettering compress(const Graph& g);

}  // namespace letters
