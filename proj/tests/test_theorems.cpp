#include <doctest.h>

#include "itop/theorems.hpp"
#include "support/fixtures.hpp"

using namespace itop;

namespace {

SpaceDocument parse_ok(std::string_view text) {
    auto r = parse_space(text);
    REQUIRE(r.ok());
    return *r.document;
}

constexpr std::string_view kThreePoint = "elements: a b c\ntopology: {} {a c} {a b c}\nideal: {} {a} {b} {a b}\n";

const std::pair<const char*, const char*> kNonImplications[] = {
    {"tau_star_open", "tau_open"},
    {"tau_sharp_open", "tau_open"},
    {"tau_star_open", "tau_sharp_open"},
    {"tau_sharp_open", "tau_star_open"},
    {"sharp_continuous", "continuous"},
    {"quotient_reversed", "family_included"},
    {"quotient_is_ideal", "full_in_family"},
};

}  // namespace

TEST_CASE("catalogue") {
    const auto& all = theorem_catalogue();
    CHECK(all.size() == 26);
    int in_scope = 0;
    for (const auto& t : all) in_scope += t.in_scope ? 1 : 0;
    CHECK(in_scope == 25);
    CHECK(all.back().id == "INF1");
    CHECK_FALSE(all.back().in_scope);
    CHECK(all.back().note.find("OUT-OF-SCOPE-INFINITE") == 0);
    CHECK(predicate_catalogue().size() >= 16);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(run_theorem("T99", 2), UnknownTheorem);
    CHECK_THROWS_AS(run_theorem("INF1", 2), OutOfScope);
    CHECK_THROWS_AS(run_theorem("T1", 0), CapExceeded);
    CHECK_THROWS_AS(run_theorem("T1", 5), CapExceeded);
    CHECK_THROWS_AS(run_theorem("T1", 6, SearchOptions{.mode = SearchMode::Sampled}), CapExceeded);
    CHECK_THROWS_AS(falsify("tau_open", "nope", 2), std::invalid_argument);
    CHECK_THROWS_AS(falsify("tau_open", "continuous", 2), std::invalid_argument);
    CHECK_THROWS_AS(falsify("tau_open", "tau_star_open", 6), CapExceeded);
}

TEST_CASE("instance counts") {
    const auto t15 = run_theorem("T15", 3);
    CHECK(t15.status == SearchStatus::Verified);
    CHECK(t15.instances == 1856);
    CHECK(t15.summary_line() == "id=T15 status=verified instances=1856 seed=0 mode=exhaustive bound=3");

    const auto t19 = run_theorem("T19", 2);
    CHECK(t19.status == SearchStatus::Verified);
    CHECK(t19.instances == 16);
}

TEST_CASE("every in-scope statement holds exhaustively at n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& t : theorem_catalogue()) {
            if (!t.in_scope) continue;
            const auto o = run_theorem(t.id, n);
            CAPTURE(o.summary_line());
            CAPTURE(o.failure.value_or(""));
            CHECK(o.status == SearchStatus::Verified);
            CHECK(o.mode == SearchMode::Exhaustive);
            CHECK(o.instances == o.domain_size);
        }
    }
}

TEST_CASE("sampled runs at n = 4 and 5") {
    for (const char* id : {"T8", "T15", "T16", "T20", "T24"}) {
        CHECK(run_theorem(id, 4, SearchOptions{.mode = SearchMode::Sampled, .samples = 500}).status ==
              SearchStatus::Verified);
        CHECK(run_theorem(id, 5, SearchOptions{.mode = SearchMode::Sampled, .samples = 100}).status ==
              SearchStatus::Verified);
    }
}

TEST_CASE("replay determinism") {
    const SearchOptions sampled{.mode = SearchMode::Sampled, .seed = 42, .samples = 300};
    const auto a = run_theorem("T18", 4, sampled);
    const auto b = run_theorem("T18", 4, sampled);
    CHECK(a == b);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.mode == SearchMode::Sampled);

    SearchOptions threaded = sampled;
    threaded.workers = 3;
    CHECK(run_theorem("T18", 4, threaded) == a);

    const auto one = falsify("quotient_reversed", "family_included", 3, 5'000'000, 0, 1);
    const auto many = falsify("quotient_reversed", "family_included", 3, 5'000'000, 0, 4);
    CHECK(one == many);
}

TEST_CASE("the seven non-implications") {
    for (const auto& [ante, cons] : kNonImplications) {
        CAPTURE(ante);
        CAPTURE(cons);
        const auto o = falsify(ante, cons, 3);
        REQUIRE(o.status == SearchStatus::Counterexample);
        REQUIRE(o.counterexample);
        const auto doc = parse_ok(*o.counterexample);
        CHECK(replay_implication(ante, cons, doc));
    }
}

TEST_CASE("falsify reports an exhausted budget") {
    const auto o = falsify("tau_open", "tau_star_open", 3);
    CHECK(o.status == SearchStatus::Exhausted);
    CHECK_FALSE(o.counterexample);
    const auto sampled = falsify("tau_open", "tau_sharp_open", 4, 1000, 9);
    CHECK(sampled.status == SearchStatus::Exhausted);
    CHECK(sampled.mode == SearchMode::Sampled);
    CHECK(sampled.instances == 1000);
}

TEST_CASE("non-implications on the three-point space") {
    const auto with_set = [](const char* set) { return parse_ok(std::string(kThreePoint) + "set A: " + set + "\n"); };
    CHECK(replay_implication("tau_star_open", "tau_open", with_set("{c}")));
    CHECK(replay_implication("tau_sharp_open", "tau_open", with_set("{a}")));
    CHECK(replay_implication("tau_star_open", "tau_sharp_open", with_set("{c}")));
    CHECK(replay_implication("tau_sharp_open", "tau_star_open", with_set("{a}")));
    CHECK_FALSE(replay_implication("tau_open", "tau_star_open", with_set("{a c}")));
}

TEST_CASE("quotient non-implications from the worked families") {
    const std::string head = "elements: a b c\ntopology: {} {a b c}\nideal: {} {a}\n";
    // J ⊆ J′ here, so this pair does not refute the converse.
    const auto as_printed = parse_ok(head + "family J: {a} {a c}\nfamily K: {a} {a b} {a c}\n");
    CHECK_FALSE(replay_implication("quotient_reversed", "family_included", as_printed));
    const auto swapped = parse_ok(head + "family J: {a} {a b} {a c}\nfamily K: {a} {a c}\n");
    CHECK_FALSE(replay_implication("quotient_reversed", "family_included", swapped));
    // (I:J′) = I although X ∉ J′.
    const auto equal = parse_ok(head + "family J: {a} {a b} {a c}\n");
    CHECK(replay_implication("quotient_is_ideal", "full_in_family", equal));
}

TEST_CASE("sharp continuity without continuity") {
    const auto doc = parse_ok(
        "elements: a b c\ntopology basis: {a c}\nideal generated: {a}\n"
        "space Y elements: a b c\nspace Y topology: {} {a} {a b c}\nmap f -> Y: a:a b:b c:c\n");
    CHECK(replay_implication("sharp_continuous", "continuous", doc));
    CHECK_FALSE(replay_theorem("T23", doc));
    CHECK_FALSE(replay_theorem("T24", doc));
}

TEST_CASE("replaying theorems on documents") {
    CHECK_FALSE(replay_theorem("T15", parse_ok(std::string(kThreePoint) + "set A: {b c}\n")));
    CHECK_FALSE(replay_theorem("T19", parse_ok(kThreePoint)));
    CHECK_THROWS_AS(replay_theorem("T15", parse_ok(kThreePoint)), std::invalid_argument);
    CHECK_THROWS_AS(replay_theorem("INF1", parse_ok(kThreePoint)), OutOfScope);
}

TEST_CASE("outcome serialisation") {
    const auto o = falsify("tau_sharp_open", "tau_open", 3);
    const auto json = o.to_json();
    CHECK(json.find("\"status\":\"counterexample\"") != std::string::npos);
    CHECK(json.find("elapsed") == std::string::npos);
    CHECK(o.to_json(true).find("elapsed_ms") != std::string::npos);
    CHECK(parse_search_mode("sampled") == SearchMode::Sampled);
    CHECK_FALSE(parse_search_mode("other"));
}
