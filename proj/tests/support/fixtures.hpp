#pragma once

#include <stdexcept>
#include <string_view>

#include "itop/document.hpp"
#include "oracles.hpp"

namespace fixture {

using namespace itop;

inline SetFamily family(const GroundSet& g, std::string_view text) {
    const auto tokens = tokenize_line(text, 1);
    std::size_t pos = 0;
    auto parsed = read_family(g, tokens, pos);
    if (!parsed.value) throw std::invalid_argument("bad family literal: " + std::string(text));
    return *parsed.value;
}

inline Subset set(const GroundSet& g, std::string_view text) {
    const auto tokens = tokenize_line(text, 1);
    std::size_t pos = 0;
    auto parsed = read_set(g, tokens, pos);
    if (!parsed.value) throw std::invalid_argument("bad set literal: " + std::string(text));
    return *parsed.value;
}

inline oracle::Family masks(const SetFamily& f) {
    oracle::Family out;
    for (auto s : f) out.push_back(s.bits());
    return out;
}

inline SetFamily from_masks(int n, const oracle::Family& f) {
    std::vector<Subset> members;
    for (auto m : f) members.emplace_back(m);
    return SetFamily(n, std::move(members));
}

/// X = {a,b,c}, τ = {∅, {a,c}, X}, I = {∅, {a}, {b}, {a,b}}.
struct Abc {
    GroundSet g = GroundSet::letters(3);
    Topology tau = Topology(family(g, "{} {a c} {a b c}"));
    Ideal ideal = Ideal(family(g, "{} {a} {b} {a b}"));
    IdealSpace space = IdealSpace(tau, ideal);

    Subset operator()(std::string_view text) const { return set(g, text); }
    SetFamily fam(std::string_view text) const { return family(g, text); }
};

}  // namespace fixture
