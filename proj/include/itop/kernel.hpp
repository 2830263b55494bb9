#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "itop/subset.hpp"

namespace itop {

enum class ViolationKind {
    MissingEmpty,
    MissingFull,
    NotUnionClosed,
    NotIntersectionClosed,
    NotDownwardClosed,
};

std::string_view to_string(ViolationKind kind) noexcept;

/// The first axiom a family fails, with the witnessing sets where the axiom is about a pair.
/// For NotDownwardClosed, `first` is the member and `second` the missing subset of it.
struct Violation {
    ViolationKind kind;
    Subset first{};
    Subset second{};

    /// e.g. "NotUnionClosed({a}, {b})".
    std::string describe(const GroundSet& ground) const;
    friend bool operator==(const Violation&, const Violation&) = default;
};

class AxiomError : public std::runtime_error {
public:
    explicit AxiomError(Violation v);
    const Violation& violation() const noexcept { return violation_; }

private:
    Violation violation_;
};

class CapExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A topology on a finite ground set together with its minimal neighbourhoods.
class Topology {
public:
    /// Validates; throws AxiomError naming the first violation.
    explicit Topology(SetFamily family);

    int width() const noexcept { return family_.width(); }
    const SetFamily& family() const noexcept { return family_; }
    /// Smallest open set containing element x.
    Subset min_nbhd(int x) const { return min_nbhd_.at(static_cast<std::size_t>(x)); }
    std::span<const Subset> min_nbhds() const noexcept { return min_nbhd_; }
    bool is_open(Subset s) const noexcept;
    bool is_closed(Subset s) const noexcept { return is_open(s.complement(width())); }

    friend bool operator==(const Topology& a, const Topology& b) { return a.family_ == b.family_; }

private:
    SetFamily family_;
    std::vector<Subset> min_nbhd_;
};

/// An ideal on a finite ground set. Every such ideal is the powerset of its generator.
class Ideal {
public:
    /// Validates an explicit family; throws AxiomError on failure.
    explicit Ideal(SetFamily family);

    int width() const noexcept { return family_.width(); }
    Subset generator() const noexcept { return generator_; }
    const SetFamily& family() const noexcept { return family_; }
    bool contains(Subset s) const noexcept { return s.subset_of(generator_); }

    friend bool operator==(const Ideal& a, const Ideal& b) { return a.family_ == b.family_; }

private:
    Ideal(int width, Subset generator);
    friend Ideal ideal_generated(int, Subset);

    SetFamily family_;
    Subset generator_;
};

/// Checks the topology axioms (∅, X, pairwise union and intersection) without throwing.
std::optional<Violation> find_topology_violation(const SetFamily& family);
/// Checks the ideal axioms (∅, downward closure, pairwise union) without throwing.
std::optional<Violation> find_ideal_violation(const SetFamily& family);

Topology validate_topology(const SetFamily& family);
Ideal validate_ideal(const SetFamily& family);

/// Smallest topology containing every member of `subbasis`.
Topology generate_topology(const SetFamily& subbasis);

Topology discrete_topology(int n);
Topology indiscrete_topology(int n);

/// I(A) = {B | B ⊆ A}.
Ideal ideal_generated(int n, Subset a);
/// I_ε(A) = {B | B ∩ A = ∅}.
Ideal ideal_epsilon(int n, Subset a);
inline Ideal trivial_ideal(int n) { return ideal_generated(n, Subset{}); }
inline Ideal improper_ideal(int n) { return ideal_generated(n, Subset::full(n)); }
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

Subset interior(Subset a, const Topology& t);
Subset closure(Subset a, const Topology& t);

struct EnumerationOptions {
    /// n = 5 (6942 topologies) is only produced when set.
    bool allow_five = false;
};

/// Every topology on {0..n-1}, each once, ordered by member count and then
/// lexicographically by member masks. Throws CapExceeded beyond the cap.
std::vector<Topology> enumerate_topologies(int n, EnumerationOptions options = {});
void for_each_topology(int n, const std::function<void(const Topology&)>& fn, EnumerationOptions options = {});

/// I(A) for every A ⊆ X, ascending by generator mask: exactly 2^n ideals.
void for_each_ideal(int n, const std::function<void(const Ideal&)>& fn);
std::vector<Ideal> enumerate_ideals(int n);

}  // namespace itop
