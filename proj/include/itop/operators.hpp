#pragma once

#include "itop/kernel.hpp"

namespace itop {

/// An ideal topological space (X, τ, I).
class IdealSpace {
public:
    /// Throws std::invalid_argument when τ and I live on different ground sets.
    IdealSpace(Topology topology, Ideal ideal);

    int width() const noexcept { return topology_.width(); }
    const Topology& topology() const noexcept { return topology_; }
    const Ideal& ideal() const noexcept { return ideal_; }
    /// Same topology, different ideal.
    IdealSpace with_ideal(Ideal ideal) const { return IdealSpace(topology_, std::move(ideal)); }

private:
    Topology topology_;
    Ideal ideal_;
};

/// A*(I, τ): points whose every open neighbourhood meets A outside the ideal.
Subset local_function(Subset a, const Topology& t, const Ideal& ideal);
inline Subset local_function(Subset a, const IdealSpace& s) { return local_function(a, s.topology(), s.ideal()); }

/// A♯(I, τ), computed as A*(Ann(I), τ).
Subset sharp_function(Subset a, const IdealSpace& s);

/// A♯(I, τ) from its defining condition: for every open U ∋ x there is a non-empty
/// member of I inside U ∩ A. Scans every open neighbourhood and every ideal member,
/// so it is only meant as an independent check of sharp_function.
Subset sharp_function_literal(Subset a, const IdealSpace& s);

/// Ψ(A) = X ∖ (X ∖ A)*.
Subset psi(Subset a, const IdealSpace& s);
/// Ψ♯(A) = X ∖ (X ∖ A)♯.
Subset psi_sharp(Subset a, const IdealSpace& s);

/// cl*(A) = A ∪ A*.
Subset cl_star(Subset a, const IdealSpace& s);
/// cl♯(A) = A ∪ A♯.
Subset cl_sharp(Subset a, const IdealSpace& s);

/// τ*: sets whose complement is cl*-closed.
Topology tau_star(const IdealSpace& s);
/// τ♯: sets whose complement is cl♯-closed.
Topology tau_sharp(const IdealSpace& s);

/// (I : J) = {A | A ∩ M ∈ I for every M ∈ J}. J is any family of subsets.
Ideal ideal_quotient(const Ideal& ideal, const SetFamily& j);

/// Ann(J) = ({∅} : J).
Ideal annihilator(const SetFamily& j);
inline Ideal annihilator(const Ideal& ideal) { return annihilator(ideal.family()); }
/// Ann_A = Ann({A}).
Ideal annihilator_of(int n, Subset a);

}  // namespace itop
