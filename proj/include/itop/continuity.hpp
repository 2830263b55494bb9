#pragma once

#include <stdexcept>
#include <vector>

#include "itop/classify.hpp"

namespace itop {

class GroundMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A total function between finite ground sets, given by the image index of each domain element.
class FiniteMap {
public:
    /// Throws std::invalid_argument when an image is out of range or the sizes are out of bounds.
    FiniteMap(int codomain_size, std::vector<int> image);

    static FiniteMap identity(int n);
    static FiniteMap constant(int domain_size, int codomain_size, int value);

    int domain_size() const noexcept { return static_cast<int>(image_.size()); }
    int codomain_size() const noexcept { return codomain_size_; }
    int operator()(int x) const { return image_.at(static_cast<std::size_t>(x)); }
    const std::vector<int>& image() const noexcept { return image_; }

    friend bool operator==(const FiniteMap&, const FiniteMap&) = default;

private:
    int codomain_size_;
    std::vector<int> image_;
};

/// f⁻¹[B].
Subset preimage(const FiniteMap& f, Subset b);

/// Every σ-open set pulls back into τ. Throws GroundMismatch on incompatible sizes.
Report is_continuous(const FiniteMap& f, const Topology& tau, const Topology& sigma);
/// Every σ-open set pulls back into τ*(I, τ).
Report is_star_continuous(const FiniteMap& f, const IdealSpace& s, const Topology& sigma);
/// Every σ-open set pulls back into τ♯(I, τ).
Report is_sharp_continuous(const FiniteMap& f, const IdealSpace& s, const Topology& sigma);

/// Calls fn for each of the m^n maps from an n-set to an m-set, in lexicographic order of images.
template <class Fn>
void for_each_map(int n, int m, Fn&& fn) {
    std::vector<int> image(static_cast<std::size_t>(n), 0);
    while (true) {
        fn(FiniteMap(m, image));
        int k = n - 1;
        while (k >= 0 && ++image[static_cast<std::size_t>(k)] == m) image[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) return;
    }
}

}  // namespace itop
