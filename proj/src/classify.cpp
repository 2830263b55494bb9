#include "itop/classify.hpp"

namespace itop {

namespace {

Report yes(std::string name) { return Report{std::move(name), true, std::nullopt, std::nullopt}; }

Report no(std::string name, Subset w, std::optional<Subset> w2 = std::nullopt) {
    return Report{std::move(name), false, w, w2};
}

void require_proper(const Ideal& ideal, const char* what) {
    if (ideal.generator() == Subset::full(ideal.width()))
        throw NotProper(std::string(what) + " is only defined for proper ideals");
}

}  // namespace

std::string Report::describe(const GroundSet& ground) const {
    std::string out = predicate + "=" + (verdict ? "true" : "false");
    if (witness) {
        out += " witness " + ground.format(*witness);
        if (witness2) out += " " + ground.format(*witness2);
    }
    return out;
}

Report is_proper(const Ideal& ideal) {
    const Subset full = Subset::full(ideal.width());
    if (ideal.contains(full)) return no("proper", full);
    return yes("proper");
}

Report is_maximal_ideal(const Ideal& ideal) {
    require_proper(ideal, "maximality");
    const int n = ideal.width();
    const auto count = Subset::mask_type{1} << n;
    for (Subset::mask_type bits = 0; bits < count; ++bits) {
        const Subset a{bits};
        if (!ideal.contains(a) && !ideal.contains(a.complement(n))) return no("maximal", a);
    }
    return yes("maximal");
}

Report is_maximal_ideal_product(const Ideal& ideal) {
    require_proper(ideal, "maximality");
    const auto count = Subset::mask_type{1} << ideal.width();
    for (Subset::mask_type x = 0; x < count; ++x) {
        if (ideal.contains(Subset{x})) continue;
        for (Subset::mask_type y = 0; y < count; ++y) {
            if (ideal.contains(Subset{y})) continue;
            if (ideal.contains(Subset{x} & Subset{y})) return no("maximal", Subset{x}, Subset{y});
        }
    }
    return yes("maximal");
}

Report is_minimal_ideal(const Ideal& ideal) {
    require_proper(ideal, "minimality");
    if (ideal.generator().empty()) throw NotEligible("minimality is not defined for the trivial ideal {∅}");
    const auto elems = ideal.generator().elements();
    if (elems.size() == 1) return yes("minimal");
    return no("minimal", Subset::singleton(elems[0]), Subset::singleton(elems[1]));
}

Report is_faithful(const SetFamily& j) {
    const Ideal ann = annihilator(j);
    if (ann.generator().empty()) return yes("faithful");
    return no("faithful", ann.generator());
}

Report is_hayashi_samuel(const IdealSpace& s) {
    for (auto u : s.topology().family())
        if (!u.empty() && s.ideal().contains(u)) return no("hayashi_samuel", u);
    return yes("hayashi_samuel");
}

Report is_dense(Subset a, const Topology& t) {
    const Subset c = closure(a, t);
    if (c == Subset::full(t.width())) return yes("dense");
    return no("dense", c.complement(t.width()));
}

Report is_t0(const Topology& t) {
    // x, y are topologically indistinguishable exactly when their minimal neighbourhoods coincide.
    for (int x = 0; x < t.width(); ++x)
        for (int y = x + 1; y < t.width(); ++y)
            if (t.min_nbhd(x) == t.min_nbhd(y)) return no("t0", Subset::singleton(x), Subset::singleton(y));
    return yes("t0");
}

Report is_hausdorff(const Topology& t) {
    // Disjoint neighbourhoods exist iff the minimal ones are disjoint.
    for (int x = 0; x < t.width(); ++x)
        for (int y = x + 1; y < t.width(); ++y)
            if (!t.min_nbhd(x).disjoint(t.min_nbhd(y)))
                return no("hausdorff", Subset::singleton(x), Subset::singleton(y));
    return yes("hausdorff");
}

SetFamily clopen_sets(const Topology& t) {
    std::vector<Subset> out;
    for (auto u : t.family())
        if (t.is_open(u.complement(t.width()))) out.push_back(u);
    return SetFamily(t.width(), std::move(out));
}

Report is_connected(const Topology& t) {
    const Subset full = Subset::full(t.width());
    for (auto c : clopen_sets(t))
        if (!c.empty() && c != full) return no("connected", c);
    return yes("connected");
}

}  // namespace itop
