#include "itop/continuity.hpp"

namespace itop {

FiniteMap::FiniteMap(int codomain_size, std::vector<int> image)
    : codomain_size_(codomain_size), image_(std::move(image)) {
    if (codomain_size_ < 1 || codomain_size_ > kMaxGroundSize) throw std::invalid_argument("codomain size out of range");
    if (image_.empty() || image_.size() > static_cast<std::size_t>(kMaxGroundSize))
        throw std::invalid_argument("domain size out of range");
    for (int y : image_)
        if (y < 0 || y >= codomain_size_) throw std::invalid_argument("map image out of range");
}

FiniteMap FiniteMap::identity(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i;
    return FiniteMap(n, std::move(image));
}

FiniteMap FiniteMap::constant(int domain_size, int codomain_size, int value) {
    return FiniteMap(codomain_size, std::vector<int>(static_cast<std::size_t>(domain_size), value));
}

Subset preimage(const FiniteMap& f, Subset b) {
    if (!b.fits(f.codomain_size())) throw GroundMismatch("set is not a subset of the codomain");
    Subset out;
    for (int x = 0; x < f.domain_size(); ++x)
        if (b.contains(f(x))) out = out.with(x);
    return out;
}

namespace {

Report pulls_back_into(const char* name, const FiniteMap& f, const Topology& source, const Topology& sigma) {
    if (f.domain_size() != source.width()) throw GroundMismatch("map domain does not match the source space");
    if (f.codomain_size() != sigma.width()) throw GroundMismatch("map codomain does not match the target space");
    for (auto v : sigma.family())
        if (!source.is_open(preimage(f, v))) return Report{name, false, v, std::nullopt};
    return Report{name, true, std::nullopt, std::nullopt};
}

}  // namespace

Report is_continuous(const FiniteMap& f, const Topology& tau, const Topology& sigma) {
    return pulls_back_into("continuous", f, tau, sigma);
}

Report is_star_continuous(const FiniteMap& f, const IdealSpace& s, const Topology& sigma) {
    return pulls_back_into("star_continuous", f, tau_star(s), sigma);
}

Report is_sharp_continuous(const FiniteMap& f, const IdealSpace& s, const Topology& sigma) {
    return pulls_back_into("sharp_continuous", f, tau_sharp(s), sigma);
}

}  // namespace itop
