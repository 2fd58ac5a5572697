#include "letters/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "letters/construct.hpp"
#include "letters/exact.hpp"
#include "letters/graph.hpp"
#include "letters/lettering.hpp"
#include "letters/prob.hpp"
#include "letters/rng.hpp"

namespace letters::cli {

namespace {

using nlohmann::ordered_json;

std::string trimmed(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// Streams graph6 lines from a file or from `in` when path is "-"; blank
// lines and an optional ">>graph6<<" header are skipped.  The callback gets
// the physical line number for error reporting.
void for_each_graph6_line(const std::string& path, std::istream& in,
                          const std::function<void(std::size_t, const std::string&)>& f) {
    std::ifstream file;
    std::istream* src = &in;
    if (path != "-") {
        file.open(path);
        if (!file) throw std::runtime_error("cannot open input file: " + path);
        src = &file;
    }
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(*src, raw)) {
        ++lineno;
        std::string line = trimmed(raw);
        if (line.rfind(">>graph6<<", 0) == 0) line = trimmed(line.substr(10));
        if (line.empty()) continue;
        f(lineno, line);
    }
}

ordered_json lettering_json(const Lettering& l) {
    return ordered_json::parse(lettering_to_json(l));
}

ordered_json core_json(const Core& c) {
    ordered_json j;
    j["k"] = c.k();
    j["pairs"] = ordered_json::array();
    for (auto [x, y] : c.pairs) j["pairs"].push_back({x, y});
    j["pi"] = c.pi;
    j["decoder"] = ordered_json::array();
    for (auto [a, b] : c.decoder_seed.pairs) j["decoder"].push_back({a, b});
    return j;
}

// Word over [a-z], letters canonicalized by first occurrence; the same
// char->id map translates the decoder.
struct ParsedWord {
    Word word;
    int ids[26];
};

ParsedWord parse_word(const std::string& text) {
    if (text.empty()) throw std::runtime_error("word must be non-empty");
    ParsedWord p;
    std::fill(std::begin(p.ids), std::end(p.ids), -1);
    int next = 0;
    for (char ch : text) {
        if (ch < 'a' || ch > 'z')
            throw std::runtime_error("word must use letters a-z");
        if (p.ids[ch - 'a'] < 0) p.ids[ch - 'a'] = next++;
        p.word.letters.push_back(p.ids[ch - 'a']);
    }
    return p;
}

// Comma-separated ordered pairs "xy"; a lone "x,y" also names one pair.
// Pairs over letters absent from the word cannot fire and are dropped.
Decoder parse_decoder(const std::string& text, const ParsedWord& w) {
    Decoder d;
    if (text.empty()) return d;
    std::vector<std::string> tokens;
    std::string tok;
    std::istringstream ss(text);
    while (std::getline(ss, tok, ',')) tokens.push_back(trimmed(tok));

    if (tokens.size() == 2 && tokens[0].size() == 1 && tokens[1].size() == 1)
        tokens = {tokens[0] + tokens[1]};
    for (const std::string& t : tokens) {
        if (t.size() != 2 || t[0] < 'a' || t[0] > 'z' || t[1] < 'a' || t[1] > 'z')
            throw std::runtime_error("decoder pairs must be two letters a-z, e.g. \"ab,bb\"");
        const int a = w.ids[t[0] - 'a'];
        const int b = w.ids[t[1] - 'a'];
        if (a < 0 || b < 0) continue;
        d.insert(a, b);
    }
    return d;
}

EventKind parse_event(const std::string& name, int k) {
    if (name == "A") return EventKind::A();
    if (name == "B") return EventKind::B();
    return EventKind::C(k);
}

struct Range {
    int start, stop, step;
};

Range parse_range(const std::string& text) {
    Range r{0, 0, 1};
    std::vector<std::string> parts;
    std::string tok;
    std::istringstream ss(text);
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    if (parts.size() < 2 || parts.size() > 3)
        throw std::runtime_error("--n-range must be start:stop or start:stop:step");
    try {
        r.start = std::stoi(parts[0]);
        r.stop = std::stoi(parts[1]);
        if (parts.size() == 3) r.step = std::stoi(parts[2]);
    } catch (const std::exception&) {
        throw std::runtime_error("--n-range parts must be integers");
    }
    if (r.step < 1) throw std::runtime_error("--n-range step must be >= 1");
    if (r.start > r.stop) throw std::runtime_error("--n-range start must be <= stop");
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"lettericity toolkit: compress, solve, and experiment on letter graphs",
                 "letters"};
    app.require_subcommand(1);

    int gen_n = 0;
    std::uint64_t gen_seed = 0, gen_count = 1;
    auto* gen = app.add_subcommand("gen", "sample G(n,1/2) graphs as graph6 lines");
    gen->add_option("--n", gen_n, "vertex count")->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", gen_seed, "master seed; line i uses splitmix64(seed, i)")
        ->required();
    gen->add_option("--count", gen_count, "number of graphs")->capture_default_str();

    std::string compress_in = "-";
    auto* compress_cmd =
        app.add_subcommand("compress", "letter each graph6 line with n - k letters");
    compress_cmd->add_option("--in", compress_in, "graph6 file, - for stdin")
        ->capture_default_str();

    std::string core_in = "-", core_mode;
    int core_k = 0;
    auto* core_cmd = app.add_subcommand("core", "report the 2k-vertex core of each graph");
    core_cmd->add_option("--in", core_in, "graph6 file, - for stdin")->capture_default_str();
    core_cmd->add_option("--mode", core_mode, "pigeonhole or homogeneous")
        ->required()
        ->check(CLI::IsMember({"pigeonhole", "homogeneous"}));
    auto* core_k_opt =
        core_cmd->add_option("--k", core_k, "target k (homogeneous mode only)");

    std::string exact_in = "-";
    std::uint64_t exact_max_nodes = 100'000'000;
    auto* exact_cmd = app.add_subcommand("exact", "exact lettericity of each graph6 line");
    exact_cmd->add_option("--in", exact_in, "graph6 file, - for stdin")->capture_default_str();
    exact_cmd->add_option("--max-nodes", exact_max_nodes, "search node budget")
        ->capture_default_str();

    std::string verify_graph, verify_lettering;
    auto* verify_cmd = app.add_subcommand("verify", "check a lettering against a graph");
    verify_cmd->add_option("--graph", verify_graph, "graph6 string")->required();
    verify_cmd->add_option("--lettering", verify_lettering, "lettering JSON")->required();

    std::string decode_word, decode_decoder;
    auto* decode_cmd = app.add_subcommand("decode", "graph6 of the letter graph of a word");
    decode_cmd->add_option("--word", decode_word, "word over a-z")->required();
    decode_cmd->add_option("--decoder", decode_decoder,
                           "ordered pairs, e.g. \"ab,bb\" for (a,b),(b,b)");

    std::string exp_event;
    int exp_n = 0, exp_k = 0, exp_threads = 1;
    std::uint64_t exp_trials = 0, exp_seed = 0;
    auto* exp_cmd = app.add_subcommand("experiment", "Monte Carlo event estimate as CSV");
    exp_cmd->add_option("--event", exp_event, "A, B, or C")
        ->required()
        ->check(CLI::IsMember({"A", "B", "C"}));
    exp_cmd->add_option("--n", exp_n, "vertex count")->required()->check(CLI::PositiveNumber);
    exp_cmd->add_option("--trials", exp_trials, "number of trials")->required();
    exp_cmd->add_option("--seed", exp_seed, "master seed")->required();
    auto* exp_k_opt = exp_cmd->add_option("--k", exp_k, "letters saved (event C only)");
    exp_cmd->add_option("--threads", exp_threads, "worker count (never changes results)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    std::string bounds_range, bounds_event;
    int bounds_k = 0;
    auto* bounds_cmd = app.add_subcommand("bounds", "union-bound table as CSV");
    bounds_cmd->add_option("--n-range", bounds_range, "start:stop[:step]")->required();
    bounds_cmd->add_option("--event", bounds_event, "A, B, or C")
        ->required()
        ->check(CLI::IsMember({"A", "B", "C"}));
    auto* bounds_k_opt = bounds_cmd->add_option("--k", bounds_k, "letters saved (event C only)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        for (auto subs = target->get_subcommands(); !subs.empty();
             subs = target->get_subcommands())
            target = subs.front();
        out << target->help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return e.get_exit_code() == 0 ? 1 : e.get_exit_code();
    }

    try {
        if (gen->parsed()) {
            for (std::uint64_t i = 0; i < gen_count; ++i)
                out << to_graph6(random_graph({gen_n, derive_seed(gen_seed, i)})) << "\n";
            return 0;
        }

        if (compress_cmd->parsed()) {
            for_each_graph6_line(compress_in, in, [&](std::size_t lineno, const std::string& line) {
                Graph g;
                try {
                    g = from_graph6(line);
                } catch (const Graph6Error& e) {
                    throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
                }
                const Lettering l = compress(g);
                ordered_json row;
                row["graph6"] = to_graph6(g);
                row["letters_used"] = l.alphabet_size();
                row["k_saved"] = g.size() - l.alphabet_size();
                row["lettering"] = lettering_json(l);
                out << row.dump() << "\n";
            });
            return 0;
        }

        if (core_cmd->parsed()) {
            const bool homogeneous = core_mode == "homogeneous";
            if (homogeneous && core_k_opt->count() == 0)
                throw std::runtime_error("--mode homogeneous requires --k");
            if (!homogeneous && core_k_opt->count() > 0)
                throw std::runtime_error("--k applies to homogeneous mode only");
            if (homogeneous && core_k < 1) throw std::runtime_error("--k must be >= 1");
            for_each_graph6_line(core_in, in, [&](std::size_t lineno, const std::string& line) {
                Graph g;
                try {
                    g = from_graph6(line);
                } catch (const Graph6Error& e) {
                    throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
                }
                ordered_json row;
                row["graph6"] = to_graph6(g);
                row["mode"] = core_mode;
                if (homogeneous) {
                    const auto c = find_homogeneous_core(g, core_k);
                    row["found"] = c.has_value();
                    if (c) row.update(core_json(*c));
                    else row["k"] = core_k;
                } else {
                    const Core c = find_palindromic_core(g);
                    row["found"] = true;
                    row.update(core_json(c));
                }
                out << row.dump() << "\n";
            });
            return 0;
        }

        if (exact_cmd->parsed()) {
            Budget budget;
            budget.max_nodes = exact_max_nodes;
            for_each_graph6_line(exact_in, in, [&](std::size_t lineno, const std::string& line) {
                Graph g;
                try {
                    g = from_graph6(line);
                } catch (const Graph6Error& e) {
                    throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
                }
                const SolveOutcome outcome = lettericity_exact(g, budget);
                ordered_json row;
                row["graph6"] = to_graph6(g);
                if (const auto* res = std::get_if<SolveResult>(&outcome)) {
                    row["lettericity"] = res->lettericity;
                    row["witness"] = lettering_json(res->witness);
                    row["nodes_explored"] = res->nodes_explored;
                } else {
                    const auto& stop = std::get<SolveInterrupted>(outcome);
                    row["interrupted"] = true;
                    row["lower_bound"] = stop.lower_bound;
                    row["upper_bound"] = stop.upper_bound;
                    row["nodes_explored"] = stop.nodes_explored;
                }
                out << row.dump() << "\n";
            });
            return 0;
        }

        if (verify_cmd->parsed()) {
            const Graph g = from_graph6(verify_graph);
            const Lettering l = lettering_from_json(verify_lettering);
            const int n = g.size();
            if (l.word.length() != n) {
                out << "fail: word length " << l.word.length() << " differs from vertex count "
                    << n << "\n";
                return 1;
            }
            std::vector<bool> seen(n, false);
            for (int v : l.vertex_of) {
                if (v < 0 || v >= n || seen[v]) {
                    out << "fail: vertex_of is not a bijection onto 0.." << n - 1 << "\n";
                    return 1;
                }
                seen[v] = true;
            }
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    const bool says = l.decoder.contains(l.word.letters[i], l.word.letters[j]);
                    const bool has = g.edge(l.vertex_of[i], l.vertex_of[j]);
                    if (says != has) {
                        out << "fail: positions (" << i << "," << j << ") map to vertices ("
                            << l.vertex_of[i] << "," << l.vertex_of[j] << "): decoder says "
                            << (says ? "edge" : "non-edge") << ", graph has "
                            << (has ? "edge" : "non-edge") << "\n";
                        return 1;
                    }
                }
            out << "ok\n";
            return 0;
        }

        if (decode_cmd->parsed()) {
            const ParsedWord w = parse_word(decode_word);
            const Decoder d = parse_decoder(decode_decoder, w);
            out << to_graph6(decode(w.word, d)) << "\n";
            return 0;
        }

        if (exp_cmd->parsed()) {
            if (exp_event == "C" && exp_k_opt->count() == 0)
                throw std::runtime_error("--event C requires --k");
            if (exp_event != "C" && exp_k_opt->count() > 0)
                throw std::runtime_error("--k applies to event C only");
            ExperimentConfig cfg;
            cfg.n = exp_n;
            cfg.trials = exp_trials;
            cfg.master_seed = exp_seed;
            cfg.event = parse_event(exp_event, exp_k);
            cfg.threads = exp_threads;
            const ExperimentResult r = monte_carlo(cfg);
            out << "event,n,k,trials,hits,estimate,margin,union_bound,master_seed,rng_algorithm\n";
            out << exp_event << "," << exp_n << "," << (exp_event == "C" ? exp_k : 0) << ","
                << r.trials << "," << r.hits << "," << format_double(r.estimate) << ","
                << format_double(r.margin) << "," << format_double(r.union_bound) << ","
                << exp_seed << "," << r.rng_algorithm << "\n";
            return 0;
        }

        if (bounds_cmd->parsed()) {
            if (bounds_event == "C" && bounds_k_opt->count() == 0)
                throw std::runtime_error("--event C requires --k");
            if (bounds_event != "C" && bounds_k_opt->count() > 0)
                throw std::runtime_error("--k applies to event C only");
            const Range r = parse_range(bounds_range);
            if (r.start < 3)
                throw std::runtime_error("--n-range must start at 3 or above "
                                         "(the lower-bound threshold needs log2 log2 n)");
            if (bounds_event == "C" && 2 * bounds_k > r.start)
                throw std::runtime_error("--n-range must start at 2k or above for event C");
            out << "n,event,k,union_bound,union_bound_relaxed,k_star,lettericity_lower_bound\n";
            for (int n = r.start; n <= r.stop; n += r.step) {
                std::string bound, relaxed;
                if (bounds_event == "A") {
                    bound = format_double(static_cast<double>(union_bound_A(n)));
                } else if (bounds_event == "B") {
                    bound = format_double(static_cast<double>(union_bound_B(n)));
                } else {
                    const UnionBoundC c = union_bound_C(n, bounds_k);
                    bound = format_double(static_cast<double>(c.falling_factorial));
                    relaxed = format_double(static_cast<double>(c.relaxed));
                }
                const LowerBoundThreshold t = lower_bound_threshold(n);
                out << n << "," << bounds_event << ","
                    << (bounds_event == "C" ? bounds_k : 0) << "," << bound << "," << relaxed
                    << "," << format_double(t.k_star) << "," << format_double(t.bound) << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    err << "error: no subcommand selected\n";
    return 1;
}

}  // namespace letters::cli
