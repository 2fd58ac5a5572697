#ifndef LETTERS_LETTERING_HPP
#define LETTERS_LETTERING_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "letters/graph.hpp"

namespace letters {

// Letters are small non-negative ids. A word is canonical when ids are
// numbered by first occurrence (0, 1, 2, ... as new letters appear); all
// solver output is canonicalized, but decode works on any ids.
struct Word {
    std::vector<int> letters;

    int length() const { return static_cast<int>(letters.size()); }
    int alphabet_size() const;  // number of distinct letter ids
    bool is_canonical() const;

    bool operator==(const Word&) const = default;
};

Word canonical_word(const Word& w);

/// Set of ordered letter pairs; (a,b) in the decoder makes every position
/// pair i<j with letters (a,b) an edge. Pairs are kept sorted and unique.
struct Decoder {
    std::vector<std::pair<int, int>> pairs;

    bool contains(int a, int b) const;
    void insert(int a, int b);
    static Decoder from_pairs(std::vector<std::pair<int, int>> pairs);

    bool operator==(const Decoder&) const = default;
};

// (a,b) -> (b,a) on every pair.
Decoder transpose(const Decoder& d);

// All ordered pairs over letters 0..alphabet_size-1 that are NOT in d.
// decode(w, decoder_complement(d, k)) is the complement of decode(w, d).
Decoder decoder_complement(const Decoder& d, int alphabet_size);

/// A witness that a graph is a letter graph: word, decoder, and the
/// bijection from word positions to graph vertices.
struct Lettering {
    Word word;
    Decoder decoder;
    std::vector<int> vertex_of;  // position -> vertex

    int alphabet_size() const { return word.alphabet_size(); }

    bool operator==(const Lettering&) const = default;
};

// Graph on |w| positions; i<j is an edge iff (w(i), w(j)) is in d.
// Decoder pairs over letters that never occur in w are ignored.
Graph decode(const Word& w, const Decoder& d);

// True iff decoding l and pushing positions through l.vertex_of reproduces
// g exactly. Size mismatches and non-bijections are argument errors.
bool verify(const Graph& g, const Lettering& l);

/// Two position pairs that received the same ordered letter pair but carry
/// different edge status, making the assignment unletterable.
struct DecoderConflict {
    int letter_a = 0, letter_b = 0;
    std::pair<int, int> first_positions;   // carries an edge
    std::pair<int, int> second_positions;  // carries a non-edge

    bool operator==(const DecoderConflict&) const = default;
};

struct InferResult {
    std::optional<Decoder> decoder;          // the minimal decoder, on success
    std::optional<DecoderConflict> conflict; // set when no decoder exists

    bool ok() const { return decoder.has_value(); }
};

// For every ordered letter pair, all position pairs i<j carrying it must
// agree on edge status. Returns the minimal decoder (constrained-true
// pairs only) or the first conflict in scan order (i<j, i outer).
InferResult infer_decoder(const Graph& g, const Word& w, std::span<const int> vertex_of);

// Threshold graphs are the 2-letter graphs over {a,b} with decoder
// {(a,b),(b,b)}. Peels the lowest-indexed dominating or isolated vertex
// until the graph is gone, then emits letters in insertion order
// (a = isolated, b = dominating). Returns nothing iff peeling gets stuck.
std::optional<Lettering> threshold_lettering(const Graph& g);

inline Decoder threshold_decoder() { return Decoder::from_pairs({{0, 1}, {1, 1}}); }

// Word reversed, decoder transposed, vertex_of reindexed. Decodes to the
// same graph; applying it twice gives back the original lettering.
Lettering reverse_lettering(const Lettering& l);

// Lettering JSON: {"word":[ids], "decoder":[[a,b],...], "vertex_of":[...]}.
std::string lettering_to_json(const Lettering& l);
Lettering lettering_from_json(const std::string& text);

}  // namespace letters

#endif
