#pragma once

#include <cstdint>
#include <vector>

#include "letters/graph.hpp"

namespace letters {

enum class EventTag { triple_same_letter, separated_pairs, core_form };

struct EventKind {
    EventTag tag;
    int k = 0;  // core_form only

    static EventKind A() { return {EventTag::triple_same_letter, 0}; }
    static EventKind B() { return {EventTag::separated_pairs, 0}; }
    static EventKind C(int k) { return {EventTag::core_form, k}; }
};

// True iff {x,y,z} is a clique or anticlique and no other vertex agrees on
// {x,z} while disagreeing with y: then x, z can share a letter doubled around
// y's, and every other vertex takes a fresh singleton letter.
bool check_triple(const Graph& g, int x, int y, int z);

// True iff the four cross-adjacencies x-s, x-t, y-s, y-t are equal and every
// other vertex agrees on {x,y} or on {s,t}: then x,y and s,t can double two
// letters in the separated pattern x..y..s..t.
bool check_separated_quad(const Graph& g, int x, int y, int s, int t);

// True iff the induced subgraph on vs (positions in order) is lettered by
// l_1..l_k l_pi(1)..l_pi(k), i.e. infer_decoder succeeds.  pi is 0-based.
bool check_core_tuple(const Graph& g, const std::vector<int>& vs, const std::vector<int>& pi);

// Whether some tuple (and for core_form, some pi) satisfies the per-tuple
// checker.  A and B scan with word-parallel agreement sets; core_form
// enumerates tuples and refuses k beyond the cap (cost grows as n^2k * k!).
bool exists_event(const Graph& g, EventKind e, int core_k_cap = 3);

struct ExperimentConfig {
    int n;
    std::uint64_t trials;
    std::uint64_t master_seed;
    EventKind event;
    int threads = 1;  // scheduling only; results are thread-count independent
};

struct ExperimentResult {
    std::uint64_t hits;
    std::uint64_t trials;
    double estimate;     // hits / trials
    double margin;       // 3 * sqrt(estimate * (1 - estimate) / trials)
    double union_bound;  // matching bound at the config's n (and k)
    const char* rng_algorithm;
};

// Trial i samples G(n, 1/2) from derive_seed(master_seed, i) and evaluates
// exists_event; identical for any thread count.
ExperimentResult monte_carlo(const ExperimentConfig& cfg);

// n(n-1)(n-2) * (3/4)^(n-3); 0 for n < 3.
long double union_bound_A(int n);
// n(n-1)(n-2)(n-3) * (3/4)^(n-4); 0 for n < 4.
long double union_bound_B(int n);

struct UnionBoundC {
    long double falling_factorial;  // n(n-1)...(n-2k+1) * k! * 2^(-k(k-1))
    long double relaxed;            // (n^2 * k * 2^(1-k))^k
};
// Both closed forms, evaluated in log2 space.  Requires 1 <= k and 2k <= n.
UnionBoundC union_bound_C(int n, int k);

struct LowerBoundThreshold {
    double k_star;  // 2*log2(n) + 2*log2(log2(n))
    double bound;   // n - k_star
};
// Requires n >= 3.
LowerBoundThreshold lower_bound_threshold(int n);

struct Rational {
    std::uint64_t num;
    std::uint64_t den;
};

// Enumerates all labeled graphs on 2k fixed vertices and counts those where
// check_core_tuple holds; equals 2^(-k(k-1)) for every pi.  Requires k <= 3.
Rational exact_tuple_probability_C(int k);
Rational exact_tuple_probability_C(int k, const std::vector<int>& pi);

}  // namespace letters
