#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "itop/operators.hpp"

namespace itop {

/// Verdict of a predicate. A negative verdict of a universally quantified
/// predicate carries the set (or pair of sets) that breaks it.
struct Report {
    std::string predicate;
    bool verdict = false;
    std::optional<Subset> witness;
    std::optional<Subset> witness2;

    explicit operator bool() const noexcept { return verdict; }
    std::string describe(const GroundSet& ground) const;
};

/// Raised when a predicate is asked about an ideal it is not defined for
/// (maximality of 2^X, minimality of {∅} or 2^X).
class NotEligible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotProper : public NotEligible {
public:
    using NotEligible::NotEligible;
};

/// I ≠ 2^X.
Report is_proper(const Ideal& ideal);

/// A ∈ I or X∖A ∈ I for every A. Throws NotProper on 2^X.
Report is_maximal_ideal(const Ideal& ideal);
/// A ∩ B ∈ I implies A ∈ I or B ∈ I. Throws NotProper on 2^X.
Report is_maximal_ideal_product(const Ideal& ideal);

/// Exactly two members (a singleton generator). Throws NotEligible on {∅} or 2^X.
Report is_minimal_ideal(const Ideal& ideal);

/// Ann(J) = {∅}, i.e. ⋃J = X.
Report is_faithful(const SetFamily& j);

/// τ ∩ I = {∅}.
Report is_hayashi_samuel(const IdealSpace& s);

/// cl(A) = X. A negative verdict's witness is a non-empty open set missing A.
Report is_dense(Subset a, const Topology& t);

Report is_t0(const Topology& t);
Report is_hausdorff(const Topology& t);

/// No clopen set besides ∅ and X.
Report is_connected(const Topology& t);

/// Open sets whose complements are open too; always contains ∅ and X.
SetFamily clopen_sets(const Topology& t);

}  // namespace itop
