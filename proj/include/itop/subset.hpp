#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace itop {

/// Largest ground set the operators accept; one bit per element in a 32-bit word.
inline constexpr int kMaxGroundSize = 16;

/// A subset of a finite ground set, stored as a bitmask (bit i = element i).
class Subset {
public:
    using mask_type = std::uint32_t;

    constexpr Subset() noexcept = default;
    constexpr explicit Subset(mask_type bits) noexcept : bits_(bits) {}

    static constexpr Subset full(int n) noexcept { return Subset{n >= 32 ? ~mask_type{0} : (mask_type{1} << n) - 1}; }
    static constexpr Subset singleton(int i) noexcept { return Subset{mask_type{1} << i}; }

    constexpr mask_type bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool contains(int i) const noexcept { return (bits_ >> i) & 1U; }
    constexpr bool subset_of(Subset other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool disjoint(Subset other) const noexcept { return (bits_ & other.bits_) == 0; }
    /// True when no bit at position >= n is set.
    constexpr bool fits(int n) const noexcept { return subset_of(full(n)); }

    constexpr Subset with(int i) const noexcept { return Subset{bits_ | (mask_type{1} << i)}; }
    constexpr Subset without(int i) const noexcept { return Subset{bits_ & ~(mask_type{1} << i)}; }
    /// X \ *this for a ground set of size n.
    constexpr Subset complement(int n) const noexcept { return Subset{full(n).bits_ & ~bits_}; }

    friend constexpr Subset operator|(Subset a, Subset b) noexcept { return Subset{a.bits_ | b.bits_}; }
    friend constexpr Subset operator&(Subset a, Subset b) noexcept { return Subset{a.bits_ & b.bits_}; }
    friend constexpr Subset operator-(Subset a, Subset b) noexcept { return Subset{a.bits_ & ~b.bits_}; }
    friend constexpr Subset operator^(Subset a, Subset b) noexcept { return Subset{a.bits_ ^ b.bits_}; }
    Subset& operator|=(Subset o) noexcept { bits_ |= o.bits_; return *this; }
    Subset& operator&=(Subset o) noexcept { bits_ &= o.bits_; return *this; }

    friend constexpr bool operator==(Subset, Subset) noexcept = default;
    friend constexpr auto operator<=>(Subset a, Subset b) noexcept { return a.bits_ <=> b.bits_; }

    /// Element indices in ascending order.
    std::vector<int> elements() const;

private:
    mask_type bits_ = 0;
};

/// Calls fn(i) for every element index of s, ascending.
template <class Fn>
constexpr void for_each_element(Subset s, Fn&& fn) {
    for (auto m = s.bits(); m != 0; m &= m - 1) fn(std::countr_zero(m));
}

/// Element labels of a ground set X; position is the bit index.
class GroundSet {
public:
    /// Throws std::invalid_argument on empty, oversized, duplicate or blank labels.
    explicit GroundSet(std::vector<std::string> names);
    /// Labels a, b, c, ... (then e16.. past z, which never happens within the cap).
    static GroundSet letters(int n);
    /// Labels 0, 1, 2, ...
    static GroundSet numbered(int n);

    int size() const noexcept { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    std::optional<int> index_of(std::string_view label) const;
    Subset full() const noexcept { return Subset::full(size()); }

    /// `{a c}` notation, labels in declaration order; `{}` for the empty set.
    std::string format(Subset s) const;

    friend bool operator==(const GroundSet&, const GroundSet&) = default;

private:
    std::vector<std::string> names_;
};

/// A family of subsets over a ground set of a given width.
/// Members are kept sorted ascending by mask value with no duplicates.
class SetFamily {
public:
    SetFamily() = default;
    /// Sorts and deduplicates; throws std::invalid_argument if a member does not fit `width`.
    SetFamily(int width, std::vector<Subset> members);

    /// 2^X.
    static SetFamily powerset(int width);
    /// All subsets of `generator`.
    static SetFamily powerset_of(int width, Subset generator);

    int width() const noexcept { return width_; }
    std::span<const Subset> members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Subset s) const;
    /// Union of all members.
    Subset union_all() const noexcept;
    bool subset_of(const SetFamily& other) const;

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    int width_ = 0;
    std::vector<Subset> members_;
};

SetFamily family_intersection(const SetFamily& a, const SetFamily& b);

/// Members separated by single spaces, each in `{...}` notation.
std::string format_family(const GroundSet& ground, const SetFamily& family);

}  // namespace itop
