#include "letters/prob.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "letters/lettering.hpp"
#include "letters/rng.hpp"

namespace letters {

namespace {

void check_distinct(std::initializer_list<int> vs, const char* who) {
    for (auto i = vs.begin(); i != vs.end(); ++i)
        for (auto j = i + 1; j != vs.end(); ++j)
            if (*i == *j) throw std::invalid_argument(std::string(who) + " requires distinct vertices");
}

// All-ones over the first n bits, zero beyond (rows already keep zero tails,
// but complements of rows need explicit trimming).
std::vector<std::uint64_t> valid_mask(int n, std::size_t words) {
    std::vector<std::uint64_t> m(words, ~std::uint64_t{0});
    if (n % 64 != 0 && words > 0) m[words - 1] = ~std::uint64_t{0} >> (64 - n % 64);
    return m;
}

void clear_bit(std::vector<std::uint64_t>& buf, int v) {
    buf[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
}

bool all_zero(const std::vector<std::uint64_t>& buf) {
    for (std::uint64_t w : buf)
        if (w != 0) return false;
    return true;
}

template <typename F>
void for_each_bit(const std::vector<std::uint64_t>& buf, F f) {
    for (std::size_t w = 0; w < buf.size(); ++w) {
        std::uint64_t bits = buf[w];
        while (bits != 0) {
            f(static_cast<int>(w * 64) + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
}

void check_permutation(const std::vector<int>& pi, int k, const char* who) {
    if (static_cast<int>(pi.size()) != k)
        throw std::invalid_argument(std::string(who) + ": pi must have length k");
    std::vector<bool> seen(k, false);
    for (int v : pi) {
        if (v < 0 || v >= k || seen[v])
            throw std::invalid_argument(std::string(who) + ": pi must be a permutation of 0..k-1");
        seen[v] = true;
    }
}

}  // namespace

bool check_triple(const Graph& g, int x, int y, int z) {
    check_distinct({x, y, z}, "check_triple");
    const bool e = g.edge(x, y);
    if (g.edge(y, z) != e || g.edge(x, z) != e) return false;

    // Forbidden witness: v agreeing on {x,z} but not with y.
    const auto rx = g.row(x), ry = g.row(y), rz = g.row(z);
    std::vector<std::uint64_t> bad(g.words_per_row());
    for (std::size_t w = 0; w < bad.size(); ++w)
        bad[w] = ~(rx[w] ^ rz[w]) & (rx[w] ^ ry[w]);  // tail stays 0: rx^ry is 0 there
    clear_bit(bad, x);
    clear_bit(bad, y);
    clear_bit(bad, z);
    return all_zero(bad);
}

bool check_separated_quad(const Graph& g, int x, int y, int s, int t) {
    check_distinct({x, y, s, t}, "check_separated_quad");
    const bool e = g.edge(x, s);
    if (g.edge(x, t) != e || g.edge(y, s) != e || g.edge(y, t) != e) return false;

    // Forbidden witness: v disagreeing on {x,y} and on {s,t}.
    const auto rx = g.row(x), ry = g.row(y), rs = g.row(s), rt = g.row(t);
    std::vector<std::uint64_t> bad(g.words_per_row());
    for (std::size_t w = 0; w < bad.size(); ++w)
        bad[w] = (rx[w] ^ ry[w]) & (rs[w] ^ rt[w]);
    clear_bit(bad, x);
    clear_bit(bad, y);
    clear_bit(bad, s);
    clear_bit(bad, t);
    return all_zero(bad);
}

bool check_core_tuple(const Graph& g, const std::vector<int>& vs, const std::vector<int>& pi) {
    if (vs.size() % 2 != 0 || vs.size() != 2 * pi.size())
        throw std::invalid_argument("check_core_tuple: |vs| must equal 2|pi|");
    const int k = static_cast<int>(pi.size());
    if (k < 1) throw std::invalid_argument("check_core_tuple requires k >= 1");
    check_permutation(pi, k, "check_core_tuple");
    std::vector<int> sorted(vs);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("check_core_tuple requires distinct vertices");

    Word w;
    w.letters.reserve(vs.size());
    for (int i = 0; i < k; ++i) w.letters.push_back(i);
    for (int j = 0; j < k; ++j) w.letters.push_back(pi[j]);
    std::vector<int> identity(vs.size());
    std::iota(identity.begin(), identity.end(), 0);
    return infer_decoder(induced_subgraph(g, vs), w, identity).ok();
}

namespace {

bool exists_triple(const Graph& g) {
    const int n = g.size();
    if (n < 3) return false;
    const std::size_t W = g.words_per_row();
    const auto valid = valid_mask(n, W);
    std::vector<std::uint64_t> cand(W), bad(W);

    for (int x = 0; x < n; ++x) {
        const auto rx = g.row(x);
        for (int z = x + 1; z < n; ++z) {
            const auto rz = g.row(z);
            const bool e = g.edge(x, z);
            // Homogeneity filter: y must see both x and z the way x sees z.
            for (std::size_t w = 0; w < W; ++w)
                cand[w] = e ? (rx[w] & rz[w]) : (~rx[w] & ~rz[w] & valid[w]);
            clear_bit(cand, x);
            clear_bit(cand, z);

            bool found = false;
            for_each_bit(cand, [&](int y) {
                if (found) return;
                const auto ry = g.row(y);
                for (std::size_t w = 0; w < W; ++w)
                    bad[w] = ~(rx[w] ^ rz[w]) & (rx[w] ^ ry[w]);
                clear_bit(bad, x);
                clear_bit(bad, y);
                clear_bit(bad, z);
                if (all_zero(bad)) found = true;
            });
            if (found) return true;
        }
    }
    return false;
}

bool exists_separated(const Graph& g) {
    const int n = g.size();
    if (n < 4) return false;
    const std::size_t W = g.words_per_row();
    const auto valid = valid_mask(n, W);
    std::vector<std::uint64_t> M(W), cand(W);
    std::vector<int> cands;
    std::vector<std::uint64_t> keys;
    std::vector<int> order;

    for (int x = 0; x < n; ++x) {
        const auto rx = g.row(x);
        for (int y = x + 1; y < n; ++y) {
            const auto ry = g.row(y);
            // Vertices disagreeing on {x,y}; s and t must agree on all of them.
            for (std::size_t w = 0; w < W; ++w) M[w] = rx[w] ^ ry[w];
            clear_bit(M, x);
            clear_bit(M, y);

            for (bool c : {true, false}) {
                // Cross-adjacency equality forces {s,t} into the common
                // neighbors (c) or common non-neighbors (!c) of x and y.
                for (std::size_t w = 0; w < W; ++w)
                    cand[w] = c ? (rx[w] & ry[w]) : (~rx[w] & ~ry[w] & valid[w]);
                clear_bit(cand, x);
                clear_bit(cand, y);

                cands.clear();
                for_each_bit(cand, [&](int u) { cands.push_back(u); });
                if (cands.size() < 2) continue;

                // Candidates sit outside M, so (row & M) is exactly the
                // agreement key: equal keys <=> s,t agree on all of M.
                keys.assign(cands.size() * W, 0);
                for (std::size_t i = 0; i < cands.size(); ++i) {
                    const auto ru = g.row(cands[i]);
                    for (std::size_t w = 0; w < W; ++w) keys[i * W + w] = ru[w] & M[w];
                }
                order.resize(cands.size());
                std::iota(order.begin(), order.end(), 0);
                std::sort(order.begin(), order.end(), [&](int a, int b) {
                    return std::lexicographical_compare(
                        keys.begin() + a * static_cast<long>(W), keys.begin() + (a + 1) * static_cast<long>(W),
                        keys.begin() + b * static_cast<long>(W), keys.begin() + (b + 1) * static_cast<long>(W));
                });
                for (std::size_t i = 0; i + 1 < order.size(); ++i)
                    if (std::equal(keys.begin() + order[i] * static_cast<long>(W),
                                   keys.begin() + (order[i] + 1) * static_cast<long>(W),
                                   keys.begin() + order[i + 1] * static_cast<long>(W)))
                        return true;
            }
        }
    }
    return false;
}

bool exists_core(const Graph& g, int k) {
    const int n = g.size();
    if (2 * k > n) return false;

    std::vector<std::vector<int>> perms;
    std::vector<int> pi(k);
    std::iota(pi.begin(), pi.end(), 0);
    do perms.push_back(pi);
    while (std::next_permutation(pi.begin(), pi.end()));

    std::vector<int> vs;
    std::vector<bool> used(n, false);
    // Ordered tuples, lexicographic; first hit wins.
    auto grow = [&](auto&& self) -> bool {
        if (static_cast<int>(vs.size()) == 2 * k) {
            for (const auto& p : perms)
                if (check_core_tuple(g, vs, p)) return true;
            return false;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            vs.push_back(v);
            if (self(self)) return true;
            vs.pop_back();
            used[v] = false;
        }
        return false;
    };
    return grow(grow);
}

}  // namespace

bool exists_event(const Graph& g, EventKind e, int core_k_cap) {
    switch (e.tag) {
        case EventTag::triple_same_letter:
            return exists_triple(g);
        case EventTag::separated_pairs:
            return exists_separated(g);
        case EventTag::core_form:
            if (e.k < 1) throw std::invalid_argument("exists_event: core_form needs k >= 1");
            if (e.k > core_k_cap)
                throw std::invalid_argument("exists_event: core_form k exceeds the scan cap");
            return exists_core(g, e.k);
    }
    throw std::logic_error("unknown event tag");
}

ExperimentResult monte_carlo(const ExperimentConfig& cfg) {
    if (cfg.trials == 0) throw std::invalid_argument("monte_carlo requires trials >= 1");
    if (cfg.n < 0) throw std::invalid_argument("monte_carlo requires n >= 0");
    if (cfg.event.tag == EventTag::core_form) {
        if (cfg.event.k < 1 || 2 * cfg.event.k > cfg.n)
            throw std::invalid_argument("monte_carlo: core_form needs 1 <= k and 2k <= n");
        if (cfg.event.k > 3)
            throw std::invalid_argument("monte_carlo: core_form k exceeds the scan cap");
    }

    const std::uint64_t threads =
        std::min<std::uint64_t>(std::max(cfg.threads, 1), cfg.trials);
    std::vector<std::uint64_t> worker_hits(threads, 0);
    // Trial i depends only on derive_seed(master_seed, i), so any assignment
    // of trials to workers yields the same total.
    auto work = [&](std::uint64_t t) {
        std::uint64_t local = 0;
        for (std::uint64_t i = t; i < cfg.trials; i += threads) {
            const Graph g = random_graph({cfg.n, derive_seed(cfg.master_seed, i)});
            if (exists_event(g, cfg.event)) ++local;
        }
        worker_hits[t] = local;
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::uint64_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    const std::uint64_t hits = std::accumulate(worker_hits.begin(), worker_hits.end(), std::uint64_t{0});

    ExperimentResult r;
    r.hits = hits;
    r.trials = cfg.trials;
    r.estimate = static_cast<double>(hits) / static_cast<double>(cfg.trials);
    r.margin = 3.0 * std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(cfg.trials));
    switch (cfg.event.tag) {
        case EventTag::triple_same_letter:
            r.union_bound = static_cast<double>(union_bound_A(cfg.n));
            break;
        case EventTag::separated_pairs:
            r.union_bound = static_cast<double>(union_bound_B(cfg.n));
            break;
        case EventTag::core_form:
            r.union_bound = static_cast<double>(union_bound_C(cfg.n, cfg.event.k).falling_factorial);
            break;
    }
    r.rng_algorithm = kRngAlgorithm;
    return r;
}

long double union_bound_A(int n) {
    if (n < 3) return 0.0L;
    // Direct product is exact at small n; log2 space avoids underflow beyond.
    if (n < 16384)
        return static_cast<long double>(n) * (n - 1) * (n - 2) * std::pow(0.75L, n - 3);
    const long double l = std::log2(static_cast<long double>(n)) + std::log2(n - 1.0L) +
                          std::log2(n - 2.0L) + (n - 3) * std::log2(0.75L);
    return std::exp2(l);
}

long double union_bound_B(int n) {
    if (n < 4) return 0.0L;
    if (n < 16384)
        return static_cast<long double>(n) * (n - 1) * (n - 2) * (n - 3) * std::pow(0.75L, n - 4);
    const long double l = std::log2(static_cast<long double>(n)) + std::log2(n - 1.0L) +
                          std::log2(n - 2.0L) + std::log2(n - 3.0L) + (n - 4) * std::log2(0.75L);
    return std::exp2(l);
}

UnionBoundC union_bound_C(int n, int k) {
    if (k < 1 || 2 * k > n)
        throw std::invalid_argument("union_bound_C requires 1 <= k and 2k <= n");
    // Log2 space: n^(2k) overflows double already at modest n and k.
    long double lff = -static_cast<long double>(k) * (k - 1);
    for (int i = 0; i < 2 * k; ++i) lff += std::log2(static_cast<long double>(n - i));
    for (int i = 2; i <= k; ++i) lff += std::log2(static_cast<long double>(i));
    const long double lrel =
        k * (2 * std::log2(static_cast<long double>(n)) + std::log2(static_cast<long double>(k)) + 1 - k);
    return {std::exp2(lff), std::exp2(lrel)};
}

LowerBoundThreshold lower_bound_threshold(int n) {
    if (n < 3) throw std::invalid_argument("lower_bound_threshold requires n >= 3");
    const double k_star = 2.0 * std::log2(static_cast<double>(n)) +
                          2.0 * std::log2(std::log2(static_cast<double>(n)));
    return {k_star, n - k_star};
}

Rational exact_tuple_probability_C(int k) {
    std::vector<int> identity(k);
    std::iota(identity.begin(), identity.end(), 0);
    return exact_tuple_probability_C(k, identity);
}

Rational exact_tuple_probability_C(int k, const std::vector<int>& pi) {
    if (k < 1 || k > 3)
        throw std::invalid_argument("exact_tuple_probability_C requires 1 <= k <= 3");
    check_permutation(pi, k, "exact_tuple_probability_C");

    const int m = k * (2 * k - 1);  // C(2k,2) edge slots, at most 15
    std::vector<int> vs(2 * k);
    std::iota(vs.begin(), vs.end(), 0);

    std::uint64_t count = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        Graph g(2 * k);
        int bit = 0;
        for (int u = 0; u < 2 * k; ++u)
            for (int v = u + 1; v < 2 * k; ++v, ++bit)
                if ((mask >> bit) & 1) g.set_edge(u, v);
        if (check_core_tuple(g, vs, pi)) ++count;
    }
    return {count, std::uint64_t{1} << m};
}

}  // namespace letters
