// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "itop/theorems.hpp"
#include "support/fixtures.hpp"

using namespace itop;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f ms", ms);
    return buf;
}

// 1. Ideal quotient worked example, < 1 ms.
Verdict quotient_example() {
    const auto start = Clock::now();
    const auto g = GroundSet::letters(3);
    const Ideal i(fixture::family(g, "{} {a}"));
    const auto q = ideal_quotient(i, fixture::family(g, "{a} {a c}"));
    const auto qp = ideal_quotient(i, fixture::family(g, "{a} {a b} {a c}"));
    const double ms = ms_since(start);
    const bool ok = format_family(g, q.family()) == "{} {a} {b} {a b}" && format_family(g, qp.family()) == "{} {a}";
    return {ok && ms < 1.0, "(I:J) = " + format_family(g, q.family()) + ", (I:J') = " + format_family(g, qp.family()) +
                                "; " + fmt_ms(ms) + " (limit 1 ms)"};
}

// 2. Three-point space: Ann(I), τ*, τ♯ and the four non-implications, < 1 ms.
Verdict three_point_example() {
    const auto start = Clock::now();
    const auto g = GroundSet::letters(3);
    const IdealSpace s(Topology(fixture::family(g, "{} {a c} {a b c}")), Ideal(fixture::family(g, "{} {a} {b} {a b}")));
    const auto ann = annihilator(s.ideal());
    const auto star = tau_star(s);
    const auto sharp = tau_sharp(s);
    const Subset a{0b001}, c{0b100};
    const bool non_implications = star.is_open(c) && !s.topology().is_open(c)      // (a)
                                  && sharp.is_open(a) && !s.topology().is_open(a)  // (b)
                                  && star.is_open(c) && !sharp.is_open(c)          // (c)
                                  && sharp.is_open(a) && !star.is_open(a);         // (d)
    const double ms = ms_since(start);
    const bool ok = format_family(g, ann.family()) == "{} {c}" &&
                    format_family(g, star.family()) == "{} {c} {a c} {b c} {a b c}" &&
                    format_family(g, sharp.family()) == "{} {a} {a b} {a c} {a b c}" && non_implications;
    return {ok && ms < 1.0, "Ann = " + format_family(g, ann.family()) + ", tau* = " + format_family(g, star.family()) +
                                ", tau# = " + format_family(g, sharp.family()) +
                                ", non-implications (a)-(d) " + (non_implications ? "confirmed" : "NOT confirmed") +
                                "; " + fmt_ms(ms) + " (limit 1 ms)"};
}

// 3. T1-T25 exhaustively at n = 1, 2, 3, single-threaded, < 10 s.
Verdict theorem_suite() {
    const auto start = Clock::now();
    int verified = 0, failed = 0;
    std::uint64_t instances = 0;
    std::string first_failure;
    SearchOptions options;
    options.workers = 1;
    for (int n = 1; n <= 3; ++n) {
        for (const auto& t : theorem_catalogue()) {
            if (!t.in_scope) continue;
            const auto o = run_theorem(t.id, n, options);
            instances += o.instances;
            if (o.status == SearchStatus::Verified && o.mode == SearchMode::Exhaustive) {
                ++verified;
            } else {
                ++failed;
                if (first_failure.empty()) first_failure = o.summary_line();
            }
        }
    }
    const double ms = ms_since(start);
    std::string detail = std::to_string(verified) + "/75 runs verified (25 statements x n=1..3), " +
                         std::to_string(instances) + " instances; " + fmt_ms(ms) + " (limit 10 s)";
    if (!first_failure.empty()) detail += "; first failure: " + first_failure;
    return {failed == 0 && verified == 75 && ms < 10'000.0, detail};
}

// 4. The seven non-implications each yield a replayable counterexample within n <= 3.
Verdict counterexamples() {
    const std::pair<const char*, const char*> pairs[] = {
        {"tau_star_open", "tau_open"},          {"tau_sharp_open", "tau_open"},
        {"tau_star_open", "tau_sharp_open"},    {"tau_sharp_open", "tau_star_open"},
        {"sharp_continuous", "continuous"},     {"quotient_reversed", "family_included"},
        {"quotient_is_ideal", "full_in_family"},
    };
    int found = 0;
    std::string missing;
    for (const auto& [ante, cons] : pairs) {
        bool ok = false;
        for (int n = 1; n <= 3 && !ok; ++n) {
            const auto o = falsify(ante, cons, n, 5'000'000, 0, 1);
            if (o.status != SearchStatus::Counterexample) continue;
            auto parsed = parse_space(*o.counterexample);
            ok = parsed.ok() && replay_implication(ante, cons, *parsed.document);
        }
        if (ok)
            ++found;
        else
            missing += std::string(" ") + ante + "=>" + cons;
    }
    return {found == 7, std::to_string(found) + "/7 counterexamples found and replayed" +
                            (missing.empty() ? "" : "; missing:" + missing)};
}

// 5. Enumeration counts against brute-force filters, < 5 s.
Verdict enumeration() {
    const auto start = Clock::now();
    const std::size_t expected[] = {0, 1, 4, 29, 355};
    bool ok = true;
    std::string counts;
    for (int n = 1; n <= 4; ++n) {
        const auto mine = enumerate_topologies(n).size();
        const auto brute = oracle::all_topologies(n).size();
        ok = ok && mine == expected[n] && brute == expected[n];
        counts += (n > 1 ? "," : "") + std::to_string(mine);
    }
    std::string ideals;
    for (int n = 1; n <= 3; ++n) {
        const auto mine = enumerate_ideals(n).size();
        const auto brute = oracle::all_ideals(n).size();
        ok = ok && mine == (std::size_t{1} << n) && brute == mine;
        ideals += (n > 1 ? "," : "") + std::to_string(mine);
    }
    const double ms = ms_since(start);
    return {ok && ms < 5000.0,
            "topologies " + counts + " (n=1..4), ideals " + ideals + " (n=1..3), brute force agrees; " + fmt_ms(ms) +
                " (limit 5 s)"};
}

// 6. 10,000 random instances with n <= 8: literal sharp == reduction, local == all-neighbourhood definition.
Verdict cross_checks() {
    std::mt19937_64 rng(20261018);
    int sharp_bad = 0, local_bad = 0;
    constexpr int kTrials = 10'000;
    for (int trial = 0; trial < kTrials; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const auto mask = [&] { return static_cast<Subset::mask_type>(rng() & Subset::full(n).bits()); };
        std::vector<Subset> subbasis;
        const int k = static_cast<int>(rng() % 7);
        for (int i = 0; i < k; ++i) subbasis.emplace_back(mask());
        const Topology t = generate_topology(SetFamily(n, subbasis));
        const Ideal ideal = ideal_generated(n, Subset{mask()});
        const IdealSpace s(t, ideal);
        const Subset a{mask()};
        if (sharp_function_literal(a, s) != sharp_function(a, s)) ++sharp_bad;
        if (local_function(a, s).bits() !=
            oracle::local(a.bits(), fixture::masks(t.family()), fixture::masks(ideal.family()), n))
            ++local_bad;
    }
    return {sharp_bad == 0 && local_bad == 0, std::to_string(kTrials) + " instances: " + std::to_string(sharp_bad) +
                                                  " sharp discrepancies, " + std::to_string(local_bad) +
                                                  " local-function discrepancies"};
}

// 7. Corpus round trip and 10^5 fuzzed parser inputs.
Verdict parser_robustness() {
    int files = 0, round_trip_bad = 0;
    for (const auto& entry : std::filesystem::directory_iterator(ITOP_CORPUS_DIR)) {
        if (entry.path().extension() != ".top") continue;
        ++files;
        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        const auto first = parse_space(ss.str());
        if (!first.ok()) {
            ++round_trip_bad;
            continue;
        }
        const auto text = print_space(*first.document);
        const auto second = parse_space(text);
        if (!second.ok() || !(*second.document == *first.document) || print_space(*second.document) != text)
            ++round_trip_bad;
    }

    std::mt19937_64 rng(7);
    const char* fragments[] = {"elements:", "topology:", "topology basis:", "ideal:", "ideal generated:", "set",
                               "family", "space", "map", "->", "self", "{", "}", ":", "a", "b", "c", "Q", "Y",
                               "0", "1", "#", "\n", " ", "\t", "{}", "{a b}", "a:b"};
    int crashes = 0, silent = 0;
    constexpr int kInputs = 100'000;
    for (int i = 0; i < kInputs; ++i) {
        std::string text;
        const auto pieces = rng() % 40;
        for (std::size_t k = 0; k < pieces; ++k) {
            if (rng() % 5 == 0)
                text += static_cast<char>(rng() % 256);
            else
                text += fragments[rng() % std::size(fragments)];
            if (rng() % 3 == 0) text += ' ';
        }
        try {
            const auto r = parse_space(text);
            if (!r.ok() && r.diagnostics.empty()) ++silent;
            if (r.ok()) (void)print_space(*r.document);
        } catch (...) {
            ++crashes;
        }
    }
    return {files >= 5 && round_trip_bad == 0 && crashes == 0 && silent == 0,
            std::to_string(files) + " corpus files round-trip (" + std::to_string(round_trip_bad) + " mismatches); " +
                std::to_string(kInputs) + " fuzz inputs, " + std::to_string(crashes) + " exceptions, " +
                std::to_string(silent) + " rejections without diagnostics"};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Verdict()>> criteria[] = {
        {"AC1 quotient example", quotient_example},
        {"AC2 three-point space example", three_point_example},
        {"AC3 exhaustive theorem suite n<=3", theorem_suite},
        {"AC4 counterexample search", counterexamples},
        {"AC5 enumeration oracle agreement", enumeration},
        {"AC6 implementation cross-checks", cross_checks},
        {"AC7 parser robustness", parser_robustness},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        std::printf("%s %s: %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
        failures += v.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
