#include "itop/subset.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace itop {

std::vector<int> Subset::elements() const {
    std::vector<int> out;
    for_each_element(*this, [&](int i) { out.push_back(i); });
    return out;
}

GroundSet::GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("ground set must be non-empty");
    if (size() > kMaxGroundSize)
        throw std::invalid_argument("ground set has " + std::to_string(size()) + " elements; the cap is " +
                                    std::to_string(kMaxGroundSize));
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw std::invalid_argument("element labels must be non-empty");
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate element label '" + n + "'");
    }
}

GroundSet GroundSet::letters(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    return GroundSet(std::move(names));
}

GroundSet GroundSet::numbered(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return GroundSet(std::move(names));
}

std::optional<int> GroundSet::index_of(std::string_view label) const {
    auto it = std::find(names_.begin(), names_.end(), label);
    if (it == names_.end()) return std::nullopt;
    return static_cast<int>(it - names_.begin());
}

std::string GroundSet::format(Subset s) const {
    std::string out = "{";
    bool first = true;
    for_each_element(s, [&](int i) {
        if (!first) out += ' ';
        out += name(i);
        first = false;
    });
    out += '}';
    return out;
}

SetFamily::SetFamily(int width, std::vector<Subset> members) : width_(width), members_(std::move(members)) {
    if (width < 0 || width > kMaxGroundSize) throw std::invalid_argument("family width out of range");
    for (auto m : members_)
        if (!m.fits(width)) throw std::invalid_argument("family member has bits outside the ground set");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SetFamily SetFamily::powerset(int width) { return powerset_of(width, Subset::full(width)); }

SetFamily SetFamily::powerset_of(int width, Subset generator) {
    std::vector<Subset> members;
    members.reserve(std::size_t{1} << generator.size());
    // Submask walk visits descending; reverse for canonical order.
    for (auto s = generator.bits();; s = (s - 1) & generator.bits()) {
        members.emplace_back(s);
        if (s == 0) break;
    }
    std::reverse(members.begin(), members.end());
    return SetFamily(width, std::move(members));
}

bool SetFamily::contains(Subset s) const { return std::binary_search(members_.begin(), members_.end(), s); }

Subset SetFamily::union_all() const noexcept {
    Subset u;
    for (auto m : members_) u |= m;
    return u;
}

bool SetFamily::subset_of(const SetFamily& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

SetFamily family_intersection(const SetFamily& a, const SetFamily& b) {
    std::vector<Subset> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return SetFamily(a.width(), std::move(out));
}

std::string format_family(const GroundSet& ground, const SetFamily& family) {
    std::string out;
    for (auto m : family) {
        if (!out.empty()) out += ' ';
        out += ground.format(m);
    }
    return out;
}

}  // namespace itop
