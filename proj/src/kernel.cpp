#include "itop/kernel.hpp"

#include <algorithm>

namespace itop {

namespace {

std::vector<char> membership_table(const SetFamily& family) {
    std::vector<char> table(std::size_t{1} << family.width(), 0);
    for (auto m : family) table[m.bits()] = 1;
    return table;
}

/// For each x, the intersection of all members containing x (X when none does).
std::vector<Subset> intersections_at_points(const SetFamily& family) {
    const int n = family.width();
    std::vector<Subset> out(static_cast<std::size_t>(n), Subset::full(n));
    for (auto m : family) for_each_element(m, [&](int x) { out[static_cast<std::size_t>(x)] &= m; });
    return out;
}

/// Up-sets of the specialisation preorder: A with min_nbhd[x] ⊆ A for all x ∈ A.
std::vector<Subset> unions_of_neighbourhoods(int n, std::span<const Subset> nbhd) {
    std::vector<Subset> out;
    const auto count = Subset::mask_type{1} << n;
    for (Subset::mask_type bits = 0; bits < count; ++bits) {
        Subset a{bits};
        bool open = true;
        for_each_element(a, [&](int x) { open = open && nbhd[static_cast<std::size_t>(x)].subset_of(a); });
        if (open) out.push_back(a);
    }
    return out;
}

}  // namespace

std::string_view to_string(ViolationKind kind) noexcept {
    switch (kind) {
        case ViolationKind::MissingEmpty: return "MissingEmpty";
        case ViolationKind::MissingFull: return "MissingFull";
        case ViolationKind::NotUnionClosed: return "NotUnionClosed";
        case ViolationKind::NotIntersectionClosed: return "NotIntersectionClosed";
        case ViolationKind::NotDownwardClosed: return "NotDownwardClosed";
    }
    return "?";
}

std::string Violation::describe(const GroundSet& ground) const {
    std::string out(to_string(kind));
    if (kind == ViolationKind::MissingEmpty || kind == ViolationKind::MissingFull) return out;
    return out + "(" + ground.format(first) + ", " + ground.format(second) + ")";
}

AxiomError::AxiomError(Violation v)
    : std::runtime_error("axiom violation: " + std::string(to_string(v.kind))), violation_(v) {}

std::optional<Violation> find_topology_violation(const SetFamily& family) {
    const int n = family.width();
    const auto full = Subset::full(n);
    if (!family.contains(Subset{})) return Violation{ViolationKind::MissingEmpty};
    if (!family.contains(full)) return Violation{ViolationKind::MissingFull};

    // A finite family containing ∅ and X is a topology exactly when it equals the
    // set of unions of its pointwise intersections. Only on failure do we pay for
    // the pairwise scan that locates the first witness.
    const auto nbhd = intersections_at_points(family);
    if (unions_of_neighbourhoods(n, nbhd) == std::vector<Subset>(family.begin(), family.end())) return std::nullopt;

    const auto members = family.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (!family.contains(members[i] | members[j]))
                return Violation{ViolationKind::NotUnionClosed, members[i], members[j]};
            if (!family.contains(members[i] & members[j]))
                return Violation{ViolationKind::NotIntersectionClosed, members[i], members[j]};
        }
    }
    return std::nullopt;  // unreachable for a non-topology
}

std::optional<Violation> find_ideal_violation(const SetFamily& family) {
    if (!family.contains(Subset{})) return Violation{ViolationKind::MissingEmpty};
    const Subset g = family.union_all();
    if (family.size() == (std::size_t{1} << g.size())) return std::nullopt;

    const auto table = membership_table(family);
    for (auto a : family) {
        std::optional<Subset::mask_type> missing;
        for (auto s = a.bits();; s = (s - 1) & a.bits()) {
            if (!table[s]) missing = s;  // walk descends, so the last hit is the smallest
            if (s == 0) break;
        }
        if (missing) return Violation{ViolationKind::NotDownwardClosed, a, Subset{*missing}};
    }
    const auto members = family.members();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!table[(members[i] | members[j]).bits()])
                return Violation{ViolationKind::NotUnionClosed, members[i], members[j]};
    return std::nullopt;
}

Topology::Topology(SetFamily family) : family_(std::move(family)) {
    if (auto v = find_topology_violation(family_)) throw AxiomError(*v);
    min_nbhd_ = intersections_at_points(family_);
}

bool Topology::is_open(Subset s) const noexcept {
    bool open = s.fits(width());
    for_each_element(s, [&](int x) { open = open && min_nbhd_[static_cast<std::size_t>(x)].subset_of(s); });
    return open;
}

Ideal::Ideal(SetFamily family) : family_(std::move(family)) {
    if (auto v = find_ideal_violation(family_)) throw AxiomError(*v);
    generator_ = family_.union_all();
}

Ideal::Ideal(int width, Subset generator)
    : family_(SetFamily::powerset_of(width, generator)), generator_(generator) {}

Topology validate_topology(const SetFamily& family) { return Topology(family); }
Ideal validate_ideal(const SetFamily& family) { return Ideal(family); }

Topology generate_topology(const SetFamily& subbasis) {
    // The basic open set at x is the intersection of the subbasis members containing x.
    const int n = subbasis.width();
    const auto nbhd = intersections_at_points(subbasis);
    return Topology(SetFamily(n, unions_of_neighbourhoods(n, nbhd)));
}

Topology discrete_topology(int n) { return Topology(SetFamily::powerset(n)); }
Topology indiscrete_topology(int n) { return Topology(SetFamily(n, {Subset{}, Subset::full(n)})); }

Ideal ideal_generated(int n, Subset a) {
    if (!a.fits(n)) throw std::invalid_argument("generator has bits outside the ground set");
    return Ideal(n, a);
}

Ideal ideal_epsilon(int n, Subset a) { return ideal_generated(n, a.complement(n)); }

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    return ideal_generated(a.width(), a.generator() & b.generator());
}

Subset interior(Subset a, const Topology& t) {
    Subset out;
    for (int x = 0; x < t.width(); ++x)
        if (t.min_nbhd(x).subset_of(a)) out = out.with(x);
    return out;
}

Subset closure(Subset a, const Topology& t) { return interior(a.complement(t.width()), t).complement(t.width()); }

void for_each_topology(int n, const std::function<void(const Topology&)>& fn, EnumerationOptions options) {
    if (n < 1) throw std::invalid_argument("ground set size must be at least 1");
    if (n > 5 || (n == 5 && !options.allow_five))
        throw CapExceeded("topology enumeration is capped at n = 4 (n = 5 needs allow_five)");

    // Topologies on a finite set correspond one-to-one with preorders; walk every
    // reflexive relation and keep the transitive ones.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) pairs.emplace_back(i, j);

    std::vector<SetFamily> families;
    const std::uint64_t candidates = std::uint64_t{1} << pairs.size();
    std::vector<Subset> up(static_cast<std::size_t>(n));
    for (std::uint64_t rel = 0; rel < candidates; ++rel) {
        for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)] = Subset::singleton(i);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((rel >> k) & 1U) up[static_cast<std::size_t>(pairs[k].first)] = up[static_cast<std::size_t>(pairs[k].first)].with(pairs[k].second);
        bool transitive = true;
        for (int i = 0; i < n && transitive; ++i)
            for_each_element(up[static_cast<std::size_t>(i)], [&](int j) {
                transitive = transitive && up[static_cast<std::size_t>(j)].subset_of(up[static_cast<std::size_t>(i)]);
            });
        if (transitive) families.emplace_back(n, unions_of_neighbourhoods(n, up));
    }

    std::sort(families.begin(), families.end(), [](const SetFamily& a, const SetFamily& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    for (auto& f : families) fn(Topology(std::move(f)));
}

std::vector<Topology> enumerate_topologies(int n, EnumerationOptions options) {
    std::vector<Topology> out;
    for_each_topology(n, [&](const Topology& t) { out.push_back(t); }, options);
    return out;
}

void for_each_ideal(int n, const std::function<void(const Ideal&)>& fn) {
    if (n < 1 || n > kMaxGroundSize) throw std::invalid_argument("ideal enumeration needs 1 <= n <= 16");
    const auto count = Subset::mask_type{1} << n;
    for (Subset::mask_type g = 0; g < count; ++g) fn(ideal_generated(n, Subset{g}));
}

std::vector<Ideal> enumerate_ideals(int n) {
    std::vector<Ideal> out;
    for_each_ideal(n, [&](const Ideal& i) { out.push_back(i); });
    return out;
}

}  // namespace itop
