// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every tolerance and seed is pinned here; nothing is read from the
// environment, so reruns are byte-identical.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "helpers.hpp"
#include "letters/cli.hpp"
#include "letters/construct.hpp"
#include "letters/exact.hpp"
#include "letters/graph.hpp"
#include "letters/lettering.hpp"
#include "letters/prob.hpp"
#include "letters/rng.hpp"

using namespace letters;
using namespace testutil;

namespace {

int failures = 0;

struct Criterion {
    std::string detail;  // first failure, or a summary on success
    bool ok = true;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    void note(const std::string& summary) {
        if (ok && detail.empty()) detail = summary;
    }
};

void report(int idx, const std::string& title, const Criterion& c) {
    if (idx > 0)
        std::printf("%s  criterion %2d: %s%s%s\n", c.ok ? "PASS" : "FAIL", idx, title.c_str(),
                    c.detail.empty() ? "" : " -- ", c.detail.c_str());
    else
        std::printf("%s  %s%s%s\n", c.ok ? "PASS" : "FAIL", title.c_str(),
                    c.detail.empty() ? "" : " -- ", c.detail.c_str());
    if (!c.ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string run_cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return std::to_string(code) + "\n" + out.str() + err.str();
}

}  // namespace

int main() {
    const auto levels = iso_classes_up_to(7);
    {
        Criterion c;
        const std::vector<std::size_t> expected = {1, 1, 2, 4, 11, 34, 156, 1044};
        for (std::size_t m = 0; m < expected.size(); ++m)
            c.expect(levels[m].size() == expected[m],
                     "class count at n=" + std::to_string(m) + " is " +
                         std::to_string(levels[m].size()));
        report(0, "test corpus: isomorphism-class counts 1,1,2,4,11,34,156,1044", c);
    }

    // Criterion 1: compression savings at n=7 (all classes) and on seeded
    // random graphs at n=21 and n=71, inside two minutes.
    std::vector<Graph> random21, random71;
    {
        Criterion c;
        const auto start = std::chrono::steady_clock::now();
        int worst7 = 0;
        for (const Graph& g : levels[7]) {
            const Lettering l = compress(g);
            worst7 = std::max(worst7, l.alphabet_size());
            c.expect(l.alphabet_size() <= 5, "n=7 class needs " +
                                                 std::to_string(l.alphabet_size()) + " letters");
            c.expect(verify(g, l), "n=7 compression failed verify");
        }
        int worst21 = 0, worst71 = 0;
        for (int i = 0; i < 1000; ++i) {
            Graph g = random_graph({21, derive_seed(1021, static_cast<std::uint64_t>(i))});
            const Lettering l = compress(g);
            worst21 = std::max(worst21, l.alphabet_size());
            c.expect(l.alphabet_size() <= 18,
                     "n=21 sample needs " + std::to_string(l.alphabet_size()) + " letters");
            c.expect(verify(g, l), "n=21 compression failed verify");
            random21.push_back(std::move(g));
        }
        for (int i = 0; i < 1000; ++i) {
            Graph g = random_graph({71, derive_seed(1071, static_cast<std::uint64_t>(i))});
            const Lettering l = compress(g);
            worst71 = std::max(worst71, l.alphabet_size());
            c.expect(l.alphabet_size() <= 67,
                     "n=71 sample needs " + std::to_string(l.alphabet_size()) + " letters");
            c.expect(verify(g, l), "n=71 compression failed verify");
            random71.push_back(std::move(g));
        }
        const double elapsed = seconds_since(start);
        c.expect(elapsed < 120.0, "took " + std::to_string(elapsed) + "s");
        std::ostringstream s;
        s << "worst letters 7/21/71: " << worst7 << "/" << worst21 << "/" << worst71 << ", "
          << std::fixed << elapsed << "s";
        c.note(s.str());
        report(1, "compress saves k letters at n=7, n=21, n=71 within 2 minutes", c);
    }

    // Criterion 2: for every graph above, the pigeonhole core extends to a
    // lettering with exactly n - k letters that verifies.
    {
        Criterion c;
        auto check = [&](const Graph& g) {
            const Core core = find_palindromic_core(g);
            const Lettering l = extend_core_to_lettering(g, core);
            c.expect(l.alphabet_size() == g.size() - core.k(),
                     "extension used " + std::to_string(l.alphabet_size()) + " letters for n=" +
                         std::to_string(g.size()) + ", k=" + std::to_string(core.k()));
            c.expect(verify(g, l), "extension failed verify at n=" + std::to_string(g.size()));
        };
        for (const Graph& g : levels[7]) check(g);
        for (const Graph& g : random21) check(g);
        for (const Graph& g : random71) check(g);
        report(2, "every pigeonhole core extends to exactly n - k letters and verifies", c);
    }

    // Criterion 3: the solver equals the independent brute-force oracle on
    // every class with at most six vertices.
    {
        Criterion c;
        for (int n = 0; n <= 6; ++n)
            for (const Graph& g : levels[static_cast<std::size_t>(n)]) {
                const auto r = std::get<SolveResult>(lettericity_exact(g));
                const int oracle = brute_force_oracle(g);
                c.expect(r.lettericity == oracle,
                         "solver " + std::to_string(r.lettericity) + " vs oracle " +
                             std::to_string(oracle) + " on " + to_graph6(g));
                c.expect(verify(g, r.witness), "witness failed verify on " + to_graph6(g));
            }
        report(3, "lettericity_exact matches brute_force_oracle for all n <= 6", c);
    }

    // Criterion 4: threshold graphs are recognized and two-letterable.
    {
        Criterion c;
        for (int i = 0; i < 100; ++i) {
            Graph g = random_threshold(50, derive_seed(4050, static_cast<std::uint64_t>(i)));
            const auto l = threshold_lettering(g);
            c.expect(l.has_value(), "threshold sample not recognized");
            if (!l) continue;
            c.expect(l->alphabet_size() <= 2, "threshold sample needs >2 letters");
            c.expect(l->decoder == threshold_decoder(), "unexpected threshold decoder");
            c.expect(verify(g, *l), "threshold lettering failed verify");
        }
        for (int n = 1; n <= 7; ++n)
            for (const Graph& g : all_threshold_graphs(n)) {
                const auto r = std::get<SolveResult>(lettericity_exact(g));
                c.expect(r.lettericity <= 2, "threshold graph on " + std::to_string(n) +
                                                 " vertices has lettericity " +
                                                 std::to_string(r.lettericity));
            }
        report(4, "threshold graphs: recognized at n=50, lettericity <= 2 for all n <= 7", c);
    }

    // Criterion 5: cochromatic <= lettericity <= compression alphabet on all
    // solved instances, and lettericity is complement-invariant (n <= 6).
    {
        Criterion c;
        for (int n = 2; n <= 6; ++n)
            for (const Graph& g : levels[static_cast<std::size_t>(n)]) {
                const int l = std::get<SolveResult>(lettericity_exact(g)).lettericity;
                c.expect(cochromatic_number(g) <= l, "cochromatic exceeds lettericity on " +
                                                         to_graph6(g));
                c.expect(l <= compress(g).alphabet_size(),
                         "compression beat the exact optimum on " + to_graph6(g));
                const int lc = std::get<SolveResult>(lettericity_exact(complement(g))).lettericity;
                c.expect(l == lc, "complement changed lettericity on " + to_graph6(g));
            }
        report(5, "cochromatic <= lettericity <= compression, complement-invariant", c);
    }

    // Criterion 6: the per-tuple core probability is exactly 2^(-k(k-1)).
    {
        Criterion c;
        for (const std::vector<int>& pi : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
            const Rational r = exact_tuple_probability_C(2, pi);
            c.expect(r.num == 16 && r.den == 64, "k=2 gave " + std::to_string(r.num) + "/" +
                                                     std::to_string(r.den));
        }
        std::vector<int> pi = {0, 1, 2};
        do {
            const Rational r = exact_tuple_probability_C(3, pi);
            c.expect(r.num == 512 && r.den == 32768,
                     "k=3 gave " + std::to_string(r.num) + "/" + std::to_string(r.den));
        } while (std::next_permutation(pi.begin(), pi.end()));
        report(6, "exact tuple probability: 16/64 at k=2 and 512/32768 at k=3, all pi", c);
    }

    // Criterion 7: Monte Carlo brackets the exactly enumerated Pr[event A]
    // over all 1024 labeled graphs on five vertices.
    {
        Criterion c;
        int hits = 0;
        for (const Graph& g : all_labeled_graphs(5))
            if (naive_exists_triple(g)) ++hits;
        const double exact = hits / 1024.0;
        const ExperimentResult r = monte_carlo({5, 100000, 20250817, EventKind::A(), 4});
        c.expect(std::abs(r.estimate - exact) <= r.margin,
                 "estimate " + std::to_string(r.estimate) + " vs exact " + std::to_string(exact) +
                     " outside margin " + std::to_string(r.margin));
        std::ostringstream s;
        s << "exact " << exact << ", estimate " << r.estimate << " +- " << r.margin;
        c.note(s.str());
        report(7, "Monte Carlo matches the exact event-A probability at n=5 within 3 sigma", c);
    }

    // Criterion 8: estimates stay consistent with the union bounds at
    // large n, inside five minutes.
    {
        Criterion c;
        const auto start = std::chrono::steady_clock::now();
        const ExperimentResult a = monte_carlo({60, 2000, 606060, EventKind::A(), 4});
        c.expect(a.estimate - a.margin <= static_cast<double>(union_bound_A(60)),
                 "event A estimate " + std::to_string(a.estimate) + " - margin exceeds bound");
        const ExperimentResult b = monte_carlo({80, 2000, 808080, EventKind::B(), 4});
        c.expect(b.estimate - b.margin <= static_cast<double>(union_bound_B(80)),
                 "event B estimate " + std::to_string(b.estimate) + " - margin exceeds bound");
        const double elapsed = seconds_since(start);
        c.expect(elapsed < 300.0, "took " + std::to_string(elapsed) + "s");
        std::ostringstream s;
        s << "A: " << a.estimate << " vs " << static_cast<double>(union_bound_A(60)) << "; B: "
          << b.estimate << " vs " << static_cast<double>(union_bound_B(80)) << "; " << std::fixed
          << elapsed << "s";
        c.note(s.str());
        report(8, "estimates respect union_bound_A(60) and union_bound_B(80) in 5 minutes", c);
    }

    // Criterion 9: savings distribution on 200 seeded random graphs at n=8;
    // every instance sits between the cochromatic bound and n - k_guarantee.
    {
        Criterion c;
        const int cap = 8 - k_guarantee(8).k;
        std::map<int, int> savings;
        for (int i = 0; i < 200; ++i) {
            Graph g = random_graph({8, derive_seed(888, static_cast<std::uint64_t>(i))});
            const auto r = std::get<SolveResult>(lettericity_exact(g));
            ++savings[8 - r.lettericity];
            c.expect(r.lettericity >= cochromatic_number(g),
                     "lettericity below the cochromatic bound on sample " + std::to_string(i));
            c.expect(r.lettericity <= cap, "lettericity " + std::to_string(r.lettericity) +
                                               " above n - k_guarantee = " + std::to_string(cap));
            c.expect(r.lettericity <= compress(g).alphabet_size(),
                     "compression beat the exact optimum on sample " + std::to_string(i));
        }
        std::ostringstream s;
        s << "n - lettericity distribution:";
        for (const auto& [saved, count] : savings) s << " " << saved << "x" << count;
        c.note(s.str());
        report(9, "200 random n=8 solves stay within [cochromatic, n - k_guarantee]", c);
    }

    // Criterion 10: repeated CLI invocations are byte-identical, including
    // varied worker counts.
    {
        Criterion c;
        const std::string gen = run_cli({"gen", "--n", "18", "--seed", "13", "--count", "5"});
        c.expect(gen == run_cli({"gen", "--n", "18", "--seed", "13", "--count", "5"}),
                 "gen output changed between runs");
        const std::string graphs = gen.substr(gen.find('\n') + 1);
        c.expect(run_cli({"compress"}, graphs) == run_cli({"compress"}, graphs),
                 "compress output changed between runs");
        c.expect(run_cli({"exact"}, graphs) == run_cli({"exact"}, graphs),
                 "exact output changed between runs");
        const std::vector<std::string> expA = {"experiment", "--event", "A", "--n", "30",
                                               "--trials", "400", "--seed", "5"};
        std::vector<std::string> expA3 = expA;
        expA3.insert(expA3.end(), {"--threads", "3"});
        c.expect(run_cli(expA) == run_cli(expA3), "event A output depends on worker count");
        const std::vector<std::string> expC = {"experiment", "--event", "C", "--n", "10",
                                               "--trials", "300", "--seed", "17", "--k", "2",
                                               "--threads", "2"};
        std::vector<std::string> expC7 = expC;
        expC7[expC7.size() - 1] = "7";
        c.expect(run_cli(expC) == run_cli(expC7), "event C output depends on worker count");
        c.expect(run_cli({"bounds", "--n-range", "3:40:5", "--event", "B"}) ==
                     run_cli({"bounds", "--n-range", "3:40:5", "--event", "B"}),
                 "bounds output changed between runs");
        report(10, "CLI output is byte-identical across reruns and worker counts", c);
    }

    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
