#include <doctest.h>

#include "itop/classify.hpp"
#include "support/fixtures.hpp"

using namespace itop;

namespace {

bool is_full(const Ideal& i) { return i.generator() == Subset::full(i.width()); }

/// No proper ideal strictly contains I.
bool maximal_by_order(const Ideal& i) {
    for (const auto& j : enumerate_ideals(i.width()))
        if (!is_full(j) && j != i && i.family().subset_of(j.family())) return false;
    return true;
}

/// No ideal other than {∅} lies strictly inside I.
bool minimal_by_order(const Ideal& i) {
    for (const auto& j : enumerate_ideals(i.width()))
        if (!j.generator().empty() && j != i && j.family().subset_of(i.family())) return false;
    return true;
}

}  // namespace

TEST_CASE("maximal ideals") {
    const auto g = GroundSet::letters(3);
    CHECK(is_maximal_ideal(ideal_generated(3, Subset{0b011})));
    const auto trivial = is_maximal_ideal(trivial_ideal(3));
    CHECK_FALSE(trivial);
    CHECK(trivial.describe(g) == "maximal=false witness {a}");
    CHECK_THROWS_AS(is_maximal_ideal(improper_ideal(3)), NotProper);
    CHECK_THROWS_AS(is_maximal_ideal_product(improper_ideal(3)), NotProper);

    for (int n = 1; n <= 4; ++n) {
        for (const auto& i : enumerate_ideals(n)) {
            if (is_full(i)) continue;
            const bool expected = maximal_by_order(i);
            CHECK(static_cast<bool>(is_maximal_ideal(i)) == expected);
            CHECK(static_cast<bool>(is_maximal_ideal_product(i)) == expected);
        }
        for (int x = 0; x < n; ++x) CHECK(is_maximal_ideal(ideal_epsilon(n, Subset::singleton(x))));
    }
}

TEST_CASE("minimal ideals") {
    const auto g = GroundSet::letters(3);
    CHECK(is_minimal_ideal(ideal_generated(3, Subset{0b100})));
    const auto r = is_minimal_ideal(ideal_generated(3, Subset{0b011}));
    CHECK_FALSE(r);
    CHECK(r.describe(g) == "minimal=false witness {a} {b}");
    CHECK_THROWS_AS(is_minimal_ideal(trivial_ideal(3)), NotEligible);
    CHECK_THROWS_AS(is_minimal_ideal(improper_ideal(3)), NotProper);

    for (int n = 1; n <= 4; ++n) {
        for (const auto& i : enumerate_ideals(n)) {
            if (is_full(i) || i.generator().empty()) continue;
            CHECK(static_cast<bool>(is_minimal_ideal(i)) == minimal_by_order(i));
        }
    }
}

TEST_CASE("minimal and maximal are dual through the epsilon ideal") {
    for (int n = 2; n <= 4; ++n) {
        for (Subset::mask_type m = 1; m + 1 < (1U << n); ++m) {
            const Subset a{m};
            CHECK(static_cast<bool>(is_minimal_ideal(ideal_generated(n, a))) ==
                  static_cast<bool>(is_maximal_ideal(ideal_epsilon(n, a))));
        }
    }
}

TEST_CASE("faithful and Hayashi-Samuel") {
    const fixture::Abc s;
    const auto f = is_faithful(s.ideal.family());
    CHECK_FALSE(f);
    CHECK(f.describe(s.g) == "faithful=false witness {c}");
    CHECK(is_faithful(s.tau.family()));
    CHECK(is_proper(s.ideal));
    CHECK_FALSE(is_proper(improper_ideal(3)));

    CHECK(is_hayashi_samuel(s.space));
    const auto hs = is_hayashi_samuel(IdealSpace(s.tau, improper_ideal(3)));
    CHECK_FALSE(hs);
    CHECK(hs.witness == s("{a c}"));
}

TEST_CASE("density") {
    const fixture::Abc s;
    CHECK(is_dense(s("{a}"), s.tau));
    const auto r = is_dense(s("{b}"), s.tau);
    CHECK_FALSE(r);
    CHECK(r.witness == s("{a c}"));
}

TEST_CASE("separation") {
    const fixture::Abc s;
    const auto t0 = is_t0(s.tau);
    CHECK_FALSE(t0);
    CHECK(t0.describe(s.g) == "t0=false witness {a} {c}");
    CHECK(is_t0(discrete_topology(3)));
    CHECK(is_hausdorff(discrete_topology(2)));
    CHECK_FALSE(is_hausdorff(generate_topology(SetFamily(2, {Subset{0b01}}))));
    CHECK(is_t0(generate_topology(SetFamily(2, {Subset{0b01}}))));
}

TEST_CASE("clopen sets and connectedness") {
    const fixture::Abc s;
    CHECK(is_connected(s.tau));
    CHECK(clopen_sets(s.tau).size() == 2);

    // τ♯ under I({b}) is discrete: every subset is clopen, so the space is disconnected.
    const Topology sharp = tau_sharp(IdealSpace(s.tau, ideal_generated(3, s("{b}"))));
    CHECK(sharp == discrete_topology(3));
    CHECK(clopen_sets(sharp).size() == 8);
    const auto r = is_connected(sharp);
    CHECK_FALSE(r);
    CHECK(r.witness == s("{a}"));
    CHECK(clopen_sets(sharp).contains(s("{a c}")));
}
