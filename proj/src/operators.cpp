#include "itop/operators.hpp"

namespace itop {

namespace {

template <class Closure>
Topology topology_of_closure(int n, Closure&& cl) {
    std::vector<Subset> open;
    const auto count = Subset::mask_type{1} << n;
    for (Subset::mask_type bits = 0; bits < count; ++bits) {
        const Subset c = Subset{bits}.complement(n);
        if (cl(c) == c) open.emplace_back(bits);
    }
    return Topology(SetFamily(n, std::move(open)));
}

}  // namespace

IdealSpace::IdealSpace(Topology topology, Ideal ideal) : topology_(std::move(topology)), ideal_(std::move(ideal)) {
    if (topology_.width() != ideal_.width())
        throw std::invalid_argument("topology and ideal are over different ground sets");
}

Subset local_function(Subset a, const Topology& t, const Ideal& ideal) {
    Subset out;
    for (int x = 0; x < t.width(); ++x)
        if (!ideal.contains(t.min_nbhd(x) & a)) out = out.with(x);
    return out;
}

Subset sharp_function(Subset a, const IdealSpace& s) {
    return local_function(a, s.topology(), annihilator(s.ideal()));
}

Subset sharp_function_literal(Subset a, const IdealSpace& s) {
    const auto& opens = s.topology().family();
    const auto& members = s.ideal().family();
    Subset out;
    for (int x = 0; x < s.width(); ++x) {
        bool every_nbhd = true;
        for (auto u : opens) {
            if (!u.contains(x)) continue;
            const Subset trap = u & a;
            bool found = false;
            for (auto i : members) {
                // I ∩ (U ∩ A)^c = ∅ with I ≠ ∅
                if (!i.empty() && (i & trap.complement(s.width())).empty()) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                every_nbhd = false;
                break;
            }
        }
        if (every_nbhd) out = out.with(x);
    }
    return out;
}

Subset psi(Subset a, const IdealSpace& s) {
    const int n = s.width();
    return local_function(a.complement(n), s).complement(n);
}

Subset psi_sharp(Subset a, const IdealSpace& s) {
    const int n = s.width();
    return sharp_function(a.complement(n), s).complement(n);
}

Subset cl_star(Subset a, const IdealSpace& s) { return a | local_function(a, s); }
Subset cl_sharp(Subset a, const IdealSpace& s) { return a | sharp_function(a, s); }

Topology tau_star(const IdealSpace& s) {
    return topology_of_closure(s.width(), [&](Subset c) { return c | local_function(c, s); });
}

Topology tau_sharp(const IdealSpace& s) {
    const Ideal ann = annihilator(s.ideal());
    return topology_of_closure(s.width(), [&](Subset c) { return c | local_function(c, s.topology(), ann); });
}

Ideal ideal_quotient(const Ideal& ideal, const SetFamily& j) {
    const int n = ideal.width();
    if (j.width() != n) throw std::invalid_argument("ideal and family are over different ground sets");
    // A ∩ M ∈ I for all M ∈ J  ⟺  A ∩ ⋃J ∈ I, since I is closed under finite unions and subsets.
    const Subset reach = j.union_all();
    std::vector<Subset> members;
    const auto count = Subset::mask_type{1} << n;
    for (Subset::mask_type bits = 0; bits < count; ++bits)
        if (ideal.contains(Subset{bits} & reach)) members.emplace_back(bits);
    return Ideal(SetFamily(n, std::move(members)));
}

Ideal annihilator(const SetFamily& j) { return ideal_quotient(trivial_ideal(j.width()), j); }

Ideal annihilator_of(int n, Subset a) { return annihilator(SetFamily(n, {a})); }

}  // namespace itop
