#include "letters/lettering.hpp"

#include <algorithm>
#include <unordered_set>

#include <json.hpp>

namespace letters {

int Word::alphabet_size() const {
    std::unordered_set<int> seen(letters.begin(), letters.end());
    return static_cast<int>(seen.size());
}

bool Word::is_canonical() const {
    int next = 0;
    for (int a : letters) {
        if (a < 0 || a > next) return false;
        if (a == next) ++next;
    }
    return true;
}

Word canonical_word(const Word& w) {
    Word out;
    out.letters.reserve(w.letters.size());
    std::vector<int> rename;
    int next = 0;
    for (int a : w.letters) {
        if (a < 0) throw std::invalid_argument("letter ids must be non-negative");
        if (a >= static_cast<int>(rename.size())) rename.resize(a + 1, -1);
        if (rename[a] < 0) rename[a] = next++;
        out.letters.push_back(rename[a]);
    }
    return out;
}

bool Decoder::contains(int a, int b) const {
    return std::binary_search(pairs.begin(), pairs.end(), std::pair<int, int>{a, b});
}

void Decoder::insert(int a, int b) {
    std::pair<int, int> p{a, b};
    auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
    if (it == pairs.end() || *it != p) pairs.insert(it, p);
}

Decoder Decoder::from_pairs(std::vector<std::pair<int, int>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return Decoder{std::move(pairs)};
}

Decoder transpose(const Decoder& d) {
    std::vector<std::pair<int, int>> flipped;
    flipped.reserve(d.pairs.size());
    for (auto [a, b] : d.pairs) flipped.emplace_back(b, a);
    return Decoder::from_pairs(std::move(flipped));
}

Decoder decoder_complement(const Decoder& d, int alphabet_size) {
    Decoder out;
    for (int a = 0; a < alphabet_size; ++a)
        for (int b = 0; b < alphabet_size; ++b)
            if (!d.contains(a, b)) out.pairs.emplace_back(a, b);
    return out;
}

Graph decode(const Word& w, const Decoder& d) {
    int n = w.length();
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (d.contains(w.letters[i], w.letters[j])) g.set_edge(i, j);
    return g;
}

namespace {

void check_bijection(std::span<const int> vertex_of, int n) {
    if (static_cast<int>(vertex_of.size()) != n)
        throw std::invalid_argument("position-to-vertex map has the wrong size");
    std::vector<char> hit(n, 0);
    for (int v : vertex_of) {
        if (v < 0 || v >= n || hit[v])
            throw std::invalid_argument("position-to-vertex map is not a bijection");
        hit[v] = 1;
    }
}

}  // namespace

bool verify(const Graph& g, const Lettering& l) {
    if (l.word.length() != g.size())
        throw std::invalid_argument("word length does not match the vertex count");
    check_bijection(l.vertex_of, g.size());
    Graph decoded = decode(l.word, l.decoder);
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j)
            if (decoded.edge(i, j) != g.edge(l.vertex_of[i], l.vertex_of[j])) return false;
    return true;
}

InferResult infer_decoder(const Graph& g, const Word& w, std::span<const int> vertex_of) {
    int n = g.size();
    if (w.length() != n) throw std::invalid_argument("word length does not match the vertex count");
    check_bijection(vertex_of, n);

    int width = 0;
    for (int a : w.letters) {
        if (a < 0) throw std::invalid_argument("letter ids must be non-negative");
        width = std::max(width, a + 1);
    }

    // -1 unconstrained, else 0/1 with the first constraining position pair.
    std::vector<signed char> status(static_cast<std::size_t>(width) * width, -1);
    std::vector<std::pair<int, int>> first(static_cast<std::size_t>(width) * width);

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::size_t cell = static_cast<std::size_t>(w.letters[i]) * width + w.letters[j];
            signed char e = g.edge(vertex_of[i], vertex_of[j]) ? 1 : 0;
            if (status[cell] < 0) {
                status[cell] = e;
                first[cell] = {i, j};
            } else if (status[cell] != e) {
                DecoderConflict c;
                c.letter_a = w.letters[i];
                c.letter_b = w.letters[j];
                if (e) {
                    c.first_positions = {i, j};
                    c.second_positions = first[cell];
                } else {
                    c.first_positions = first[cell];
                    c.second_positions = {i, j};
                }
                return InferResult{std::nullopt, c};
            }
        }
    }

    Decoder d;
    for (int a = 0; a < width; ++a)
        for (int b = 0; b < width; ++b)
            if (status[static_cast<std::size_t>(a) * width + b] == 1) d.pairs.emplace_back(a, b);
    return InferResult{std::move(d), std::nullopt};
}

std::optional<Lettering> threshold_lettering(const Graph& g) {
    int n = g.size();
    std::vector<char> alive(n, 1);
    std::vector<int> degree(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (v != u && g.edge(u, v)) ++degree[u];

    // Removal order, with the classification at removal time.
    std::vector<std::pair<int, bool>> peeled;  // (vertex, was_dominating)
    int remaining = n;
    while (remaining > 0) {
        int pick = -1;
        bool dominating = false;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            if (degree[v] == 0) {
                pick = v;
                dominating = false;
                break;
            }
            if (degree[v] == remaining - 1) {
                pick = v;
                dominating = true;
                break;
            }
        }
        if (pick < 0) return std::nullopt;  // stuck: not a threshold graph
        alive[pick] = 0;
        --remaining;
        for (int v = 0; v < n; ++v)
            if (alive[v] && g.edge(pick, v)) --degree[v];
        peeled.emplace_back(pick, dominating);
    }

    Lettering l;
    l.decoder = threshold_decoder();
    l.word.letters.reserve(n);
    l.vertex_of.reserve(n);
    // Insertion order is the reverse of the peel.
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        l.vertex_of.push_back(it->first);
        l.word.letters.push_back(it->second ? 1 : 0);
    }
    return l;
}

Lettering reverse_lettering(const Lettering& l) {
    Lettering out;
    out.word.letters.assign(l.word.letters.rbegin(), l.word.letters.rend());
    out.decoder = transpose(l.decoder);
    out.vertex_of.assign(l.vertex_of.rbegin(), l.vertex_of.rend());
    return out;
}

std::string lettering_to_json(const Lettering& l) {
    nlohmann::ordered_json j;
    j["word"] = l.word.letters;
    j["decoder"] = nlohmann::ordered_json::array();
    for (auto [a, b] : l.decoder.pairs) j["decoder"].push_back({a, b});
    j["vertex_of"] = l.vertex_of;
    return j.dump();
}

Lettering lettering_from_json(const std::string& text) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
    if (!j.is_object() || !j.contains("word") || !j.contains("decoder") || !j.contains("vertex_of"))
        throw std::invalid_argument("lettering JSON needs word, decoder and vertex_of fields");
    Lettering l;
    l.word.letters = j["word"].get<std::vector<int>>();
    for (const auto& p : j["decoder"]) {
        if (!p.is_array() || p.size() != 2)
            throw std::invalid_argument("decoder entries must be [a,b] pairs");
        l.decoder.insert(p[0].get<int>(), p[1].get<int>());
    }
    l.vertex_of = j["vertex_of"].get<std::vector<int>>();
    return l;
}

}  // namespace letters
