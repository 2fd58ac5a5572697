#include "letters/exact.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "letters/construct.hpp"

namespace letters {

namespace {

// Parts are cliques or anticliques; a part's kind is decided by its first two
// members.  Only the first empty part may be opened (parts are interchangeable).
struct CochromaticSearch {
    const Graph& g;
    int max_parts;
    std::vector<std::vector<int>> parts;
    std::vector<int> kind;  // -1 undecided (size < 2), 0 anticlique, 1 clique

    bool fits(int v, std::size_t p) const {
        if (kind[p] == -1) return true;
        const bool want = kind[p] == 1;
        for (int u : parts[p])
            if (g.edge(u, v) != want) return false;
        return true;
    }

    bool assign(int v) {
        if (v == g.size()) return true;
        for (std::size_t p = 0; p < parts.size(); ++p) {
            if (!fits(v, p)) continue;
            const int saved_kind = kind[p];
            parts[p].push_back(v);
            if (kind[p] == -1 && parts[p].size() == 2)
                kind[p] = g.edge(parts[p][0], v) ? 1 : 0;
            if (assign(v + 1)) return true;
            kind[p] = saved_kind;
            parts[p].pop_back();
        }
        if (static_cast<int>(parts.size()) < max_parts) {
            parts.push_back({v});
            kind.push_back(-1);
            if (assign(v + 1)) return true;
            parts.pop_back();
            kind.pop_back();
        }
        return false;
    }
};

}  // namespace

int cochromatic_number(const Graph& g) {
    if (g.size() == 0) return 0;
    for (int m = 1;; ++m) {
        CochromaticSearch s{g, m, {}, {}};
        if (s.assign(0)) return m;
    }
}

namespace {

struct KLetterSearch {
    const Graph& g;
    int k;
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    std::vector<int> word;       // letter at each filled position
    std::vector<int> vertex_at;  // vertex at each filled position
    std::vector<bool> placed;
    int used_letters = 0;
    std::vector<signed char> status;  // k*k cells: -1 unknown, 0 non-edge, 1 edge
    std::vector<signed char*> undo;   // cells set since the enclosing mark
    std::uint64_t nodes = 0;
    bool aborted = false;

    signed char& cell(int a, int b) { return status[static_cast<std::size_t>(a) * k + b]; }

    bool over_budget() {
        if (max_nodes && nodes > *max_nodes) return true;
        if (deadline && (nodes & 8191) == 0 &&
            std::chrono::steady_clock::now() > *deadline)
            return true;
        return false;
    }

    // Returns true when an accepting completion exists below this position.
    bool extend(int p) {
        const int n = g.size();
        if (p == n) return true;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            // Reversal symmetry: a word and its reverse (with transposed
            // decoder) letter the same graph, so demand v0 < v_last.
            if (p == n - 1 && p > 0 && v < vertex_at[0]) continue;
            const int limit = std::min(used_letters, k - 1);
            for (int m = 0; m <= limit; ++m) {
                ++nodes;
                if (over_budget()) {
                    aborted = true;
                    return false;
                }
                // Each earlier position q forces cell (word[q], m) to the
                // edge value; a clash with a prior or same-step value prunes.
                const std::size_t mark = undo.size();
                bool conflict = false;
                for (int q = 0; q < p; ++q) {
                    const signed char want = g.edge(vertex_at[q], v) ? 1 : 0;
                    signed char& c = cell(word[q], m);
                    if (c == -1) {
                        c = want;
                        undo.push_back(&c);
                    } else if (c != want) {
                        conflict = true;
                        break;
                    }
                }
                if (!conflict) {
                    word.push_back(m);
                    vertex_at.push_back(v);
                    placed[v] = true;
                    const int saved_used = used_letters;
                    if (m == used_letters) ++used_letters;
                    if (extend(p + 1)) return true;
                    used_letters = saved_used;
                    placed[v] = false;
                    vertex_at.pop_back();
                    word.pop_back();
                }
                while (undo.size() > mark) {
                    *undo.back() = -1;
                    undo.pop_back();
                }
                if (aborted) return false;
            }
        }
        return false;
    }
};

}  // namespace

KSearch is_k_letter(const Graph& g, int k, const Budget& b) {
    if (k < 1) throw std::invalid_argument("is_k_letter requires k >= 1");
    if (b.max_nodes && *b.max_nodes == 0)
        return {SearchStatus::budget_exceeded, std::nullopt, 0};
    if ((b.max_seconds && *b.max_seconds <= 0))
        return {SearchStatus::budget_exceeded, std::nullopt, 0};

    KLetterSearch s{g,
                    k,
                    b.max_nodes,
                    b.max_seconds
                        ? std::optional(std::chrono::steady_clock::now() +
                                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                            std::chrono::duration<double>(*b.max_seconds)))
                        : std::nullopt,
                    {},
                    {},
                    std::vector<bool>(g.size(), false),
                    0,
                    std::vector<signed char>(static_cast<std::size_t>(k) * k, -1),
                    {},
                    0,
                    false};
    const bool found = s.extend(0);
    if (found) {
        Lettering l;
        l.word.letters = s.word;
        l.vertex_of = s.vertex_at;
        for (int a = 0; a < k; ++a)
            for (int bb = 0; bb < k; ++bb)
                if (s.cell(a, bb) == 1) l.decoder.insert(a, bb);
        return {SearchStatus::found, std::move(l), s.nodes};
    }
    return {s.aborted ? SearchStatus::budget_exceeded : SearchStatus::exhausted,
            std::nullopt, s.nodes};
}

SolveOutcome lettericity_exact(const Graph& g, const Budget& b) {
    const int n = g.size();
    if (n == 0) return SolveResult{0, {}, "trivial", 0};

    const auto start_time = std::chrono::steady_clock::now();
    const int coc = cochromatic_number(g);
    // A cochromatic bound of 1 says nothing beyond "some letter is needed".
    const std::string tag = coc >= 2 ? "cochromatic" : "trivial";
    const int start_k = std::max(1, coc);

    std::uint64_t total_nodes = 0;
    int proven_lower = start_k;
    for (int k = start_k; k <= n; ++k) {
        Budget rem;
        if (b.max_nodes)
            rem.max_nodes = *b.max_nodes > total_nodes ? *b.max_nodes - total_nodes : 0;
        else
            rem.max_nodes = std::nullopt;
        if (b.max_seconds) {
            const double elapsed =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time)
                    .count();
            rem.max_seconds = *b.max_seconds - elapsed;
        }
        KSearch s = is_k_letter(g, k, rem);
        total_nodes += s.nodes;
        if (s.status == SearchStatus::found)
            return SolveResult{k, std::move(*s.witness), tag, total_nodes};
        if (s.status == SearchStatus::budget_exceeded) {
            const int upper =
                n <= 1 ? n : static_cast<int>(compress(g).alphabet_size());
            return SolveInterrupted{proven_lower, upper, total_nodes};
        }
        proven_lower = k + 1;
    }
    throw std::logic_error("identity lettering not found");  // unreachable: k = n always works
}

namespace {

// All restricted-growth strings of length n, grouped by alphabet size.
// These are exactly the canonical words, so each word shape is tried once.
void grow_rgs(int n, std::vector<int>& prefix, int max_used,
              std::vector<std::vector<Word>>& by_size) {
    if (static_cast<int>(prefix.size()) == n) {
        by_size[max_used].push_back(Word{prefix});
        return;
    }
    for (int a = 0; a <= max_used && a < n; ++a) {
        prefix.push_back(a);
        grow_rgs(n, prefix, std::max(max_used, a + 1), by_size);
        prefix.pop_back();
    }
}

}  // namespace

int brute_force_oracle(const Graph& g, int cap) {
    const int n = g.size();
    if (n > cap) throw std::invalid_argument("brute_force_oracle: n exceeds cap");
    if (n == 0) return 0;

    std::vector<std::vector<Word>> by_size(n + 1);
    std::vector<int> prefix;
    grow_rgs(n, prefix, 0, by_size);

    for (int a = 1; a <= n; ++a) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (const Word& w : by_size[a])
                if (infer_decoder(g, w, perm).ok()) return a;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    throw std::logic_error("no lettering found");  // unreachable: a = n always works
}

}  // namespace letters
