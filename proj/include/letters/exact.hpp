#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "letters/graph.hpp"
#include "letters/lettering.hpp"

namespace letters {

struct Budget {
    std::optional<std::uint64_t> max_nodes = 100'000'000;
    std::optional<double> max_seconds;
};

enum class SearchStatus { found, exhausted, budget_exceeded };

struct KSearch {
    SearchStatus status;
    std::optional<Lettering> witness;  // present iff status == found
    std::uint64_t nodes = 0;
};

// Minimum number of parts in a partition of V into cliques and anticliques.
// Exact backtracking with part-symmetry breaking; 0 for the empty graph.
int cochromatic_number(const Graph& g);

// Depth-first search over words built left to right; each step appends a
// (vertex, letter) pair with letters canonicalized by first occurrence and at
// most k letters, pruning on decoder-constraint conflicts.  The witness is the
// first accepting leaf in (vertex, letter)-ascending order; words equivalent
// to their own reverse are explored once (vertex_of[0] < vertex_of[n-1]).
KSearch is_k_letter(const Graph& g, int k, const Budget& b = {});

struct SolveResult {
    int lettericity;
    Lettering witness;
    std::string lower_bound_used;  // "cochromatic" | "trivial"
    std::uint64_t nodes_explored;
};

struct SolveInterrupted {
    int lower_bound;   // proven: every smaller k was exhausted
    int upper_bound;   // from the compression pipeline
    std::uint64_t nodes_explored;
};

using SolveOutcome = std::variant<SolveResult, SolveInterrupted>;

// Iterates k upward from the cochromatic lower bound; the first k admitting a
// lettering is optimal.  The shared budget spans all iterations.
SolveOutcome lettericity_exact(const Graph& g, const Budget& b = {});

// Independent oracle: enumerates all vertex orderings and all canonical words,
// accepting via infer_decoder.  Shares no search code with is_k_letter.
// Refuses n above the cap.
int brute_force_oracle(const Graph& g, int cap = 6);

}  // namespace letters
