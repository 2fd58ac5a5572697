#include "letters/construct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace letters {

namespace {

// 2(k-1) + 2^(2(k-1)) + 1, the minimum n that guarantees k saved letters.
// k is capped well below bit-width limits by the callers.
long long guarantee_threshold(int k) {
    return 2LL * (k - 1) + (1LL << (2 * (k - 1))) + 1;
}

void check_permutation(const std::vector<int>& pi, int k) {
    if (static_cast<int>(pi.size()) != k)
        throw std::invalid_argument("pi must have length k");
    std::vector<bool> seen(k, false);
    for (int v : pi) {
        if (v < 0 || v >= k || seen[v])
            throw std::invalid_argument("pi must be a permutation of 0..k-1");
        seen[v] = true;
    }
}

}  // namespace

SavingsGuarantee k_guarantee(int n) {
    if (n < 2) throw std::invalid_argument("k_guarantee requires n >= 2");
    int k = 1;
    // threshold(17) = 2^32 + 33 exceeds any int n, so the loop is bounded.
    while (k < 17 && guarantee_threshold(k + 1) <= n) ++k;
    return {n, k};
}

Word core_word(const Core& c) {
    Word w;
    const int k = c.k();
    w.letters.reserve(2 * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) w.letters.push_back(i);
    for (int j = 0; j < k; ++j) w.letters.push_back(c.pi[j]);
    return w;
}

std::vector<int> core_vertex_of(const Core& c) {
    const int k = c.k();
    std::vector<int> vertex_of;
    vertex_of.reserve(2 * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) vertex_of.push_back(c.pairs[i].first);
    // Right-half position j carries letter pi[j], hence vertex y_{pi[j]}.
    for (int j = 0; j < k; ++j) vertex_of.push_back(c.pairs[c.pi[j]].second);
    return vertex_of;
}

Core find_palindromic_core(const Graph& g) {
    const int n = g.size();
    if (n < 2) throw std::invalid_argument("find_palindromic_core requires n >= 2");

    Core core;
    core.pairs.push_back({0, 1});
    if (g.edge(0, 1)) core.decoder_seed.insert(0, 0);

    std::vector<bool> used(n, false);
    used[0] = used[1] = true;

    for (;;) {
        // Signature basis in word-position order: x_1..x_k, y_k..y_1.
        const int k = core.k();
        std::vector<int> basis;
        basis.reserve(2 * static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) basis.push_back(core.pairs[i].first);
        for (int i = k - 1; i >= 0; --i) basis.push_back(core.pairs[i].second);

        // Buckets keyed by signature bits; map order gives the lexicographic
        // tie-break, ascending vertex scan gives lowest-index members first.
        std::map<std::vector<std::uint8_t>, std::vector<int>> buckets;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            buckets[signature(g, v, basis).bits].push_back(v);
        }

        const std::vector<int>* pair = nullptr;
        for (const auto& [bits, members] : buckets) {
            if (members.size() >= 2) {
                pair = &members;
                break;
            }
        }
        if (!pair) break;

        const int u = (*pair)[0];  // left occurrence: lower index
        const int v = (*pair)[1];
        // New innermost pair gets letter k; u and v agree on the whole core,
        // so adjacency tests against u decide both occurrences at once.
        for (int i = 0; i < k; ++i) {
            if (g.edge(core.pairs[i].first, u)) core.decoder_seed.insert(i, k);
            if (g.edge(u, core.pairs[i].second)) core.decoder_seed.insert(k, i);
        }
        if (g.edge(u, v)) core.decoder_seed.insert(k, k);
        core.pairs.push_back({u, v});
        used[u] = used[v] = true;
    }

    const int k = core.k();
    core.pi.resize(k);
    for (int j = 0; j < k; ++j) core.pi[j] = k - 1 - j;
    return core;
}

namespace {

// Lexicographically least size-m vertex set that is a clique (want_edge) or
// anticlique (!want_edge); members must pairwise match want_edge.
bool grow_homogeneous(const Graph& g, bool want_edge, int m, int from,
                      std::vector<int>& chosen) {
    if (static_cast<int>(chosen.size()) == m) return true;
    const int need = m - static_cast<int>(chosen.size());
    for (int v = from; v + need <= g.size(); ++v) {
        bool fits = true;
        for (int u : chosen) {
            if (g.edge(u, v) != want_edge) {
                fits = false;
                break;
            }
        }
        if (!fits) continue;
        chosen.push_back(v);
        if (grow_homogeneous(g, want_edge, m, v + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<Core> find_homogeneous_core(const Graph& g, int k) {
    std::vector<int> identity(k);
    for (int i = 0; i < k; ++i) identity[i] = i;
    return find_homogeneous_core(g, k, identity);
}

std::optional<Core> find_homogeneous_core(const Graph& g, int k, const std::vector<int>& pi) {
    if (k < 1) throw std::invalid_argument("find_homogeneous_core requires k >= 1");
    check_permutation(pi, k);
    if (2 * k > g.size()) return std::nullopt;

    std::vector<int> vs;
    vs.reserve(2 * static_cast<std::size_t>(k));
    if (!grow_homogeneous(g, true, 2 * k, 0, vs) &&
        !grow_homogeneous(g, false, 2 * k, 0, vs))
        return std::nullopt;

    // Position i < k holds x_i = vs[i]; right-half position j holds letter
    // pi[j], so y_{pi[j]} = vs[k + j].
    std::vector<int> inv(k);
    for (int j = 0; j < k; ++j) inv[pi[j]] = j;
    Core core;
    core.pi = pi;
    core.pairs.resize(k);
    for (int i = 0; i < k; ++i) core.pairs[i] = {vs[i], vs[k + inv[i]]};

    const std::vector<int> order = core_vertex_of(core);
    std::vector<int> identity(order.size());
    std::iota(identity.begin(), identity.end(), 0);
    InferResult inferred = infer_decoder(induced_subgraph(g, order), core_word(core), identity);
    if (!inferred.ok())
        throw std::logic_error("homogeneous core failed decoder inference");
    core.decoder_seed = *inferred.decoder;
    return core;
}

Lettering extend_core_to_lettering(const Graph& g, const Core& c) {
    const int n = g.size();
    const int k = c.k();
    if (k < 1) throw std::invalid_argument("core is empty");
    if (2 * k > n) throw std::invalid_argument("core larger than graph");
    check_permutation(c.pi, k);

    std::vector<bool> in_core(n, false);
    for (const auto& [x, y] : c.pairs) {
        for (int v : {x, y}) {
            if (v < 0 || v >= n) throw std::invalid_argument("core vertex out of range");
            if (in_core[v]) throw std::invalid_argument("core vertices must be distinct");
            in_core[v] = true;
        }
    }
    for (const auto& [a, b] : c.decoder_seed.pairs)
        if (a < 0 || a >= k || b < 0 || b >= k)
            throw std::invalid_argument("core decoder letter out of range");

    // The seed decoder must realize the core's induced subgraph exactly.
    const Word cw = core_word(c);
    const std::vector<int> cv = core_vertex_of(c);
    for (int p = 0; p < 2 * k; ++p)
        for (int q = p + 1; q < 2 * k; ++q)
            if (g.edge(cv[p], cv[q]) != c.decoder_seed.contains(cw.letters[p], cw.letters[q]))
                throw std::invalid_argument("core decoder does not realize the core");

    Lettering l;
    l.word.letters.reserve(n);
    l.vertex_of.reserve(n);
    l.decoder = c.decoder_seed;

    for (int i = 0; i < k; ++i) {
        l.word.letters.push_back(i);
        l.vertex_of.push_back(c.pairs[i].first);
    }
    // Middle: fresh singleton letter k + t for the t-th non-core vertex.
    std::vector<int> middle;
    for (int v = 0; v < n; ++v)
        if (!in_core[v]) middle.push_back(v);
    for (std::size_t t = 0; t < middle.size(); ++t) {
        l.word.letters.push_back(k + static_cast<int>(t));
        l.vertex_of.push_back(middle[t]);
    }
    for (int j = 0; j < k; ++j) {
        l.word.letters.push_back(c.pi[j]);
        l.vertex_of.push_back(c.pairs[c.pi[j]].second);
    }

    // Middle-middle pairs: each ordered letter pair occurs at exactly one
    // position pair, so membership mirrors the edge.
    for (std::size_t s = 0; s < middle.size(); ++s)
        for (std::size_t t = s + 1; t < middle.size(); ++t)
            if (g.edge(middle[s], middle[t]))
                l.decoder.insert(k + static_cast<int>(s), k + static_cast<int>(t));
    // (l_i, m): decides only (x_i, v) — the right occurrence of l_i is after m.
    // (m, l_i): decides only (v, y_i).
    for (std::size_t t = 0; t < middle.size(); ++t) {
        const int m = k + static_cast<int>(t);
        const int v = middle[t];
        for (int i = 0; i < k; ++i) {
            if (g.edge(c.pairs[i].first, v)) l.decoder.insert(i, m);
            if (g.edge(v, c.pairs[i].second)) l.decoder.insert(m, i);
        }
    }
    return l;
}

Lettering compress(const Graph& g) {
    const int n = g.size();
    if (n == 0) return {};
    if (n == 1) {
        Lettering l;
        l.word.letters = {0};
        l.vertex_of = {0};
        return l;
    }
    return extend_core_to_lettering(g, find_palindromic_core(g));
}

}  // namespace letters
